#ifndef REGCOH_REFINER_HPP
#define REGCOH_REFINER_HPP

#include "regcoh/chamber_fan.hpp"

namespace regcoh {

/**
 * One nonzero cone of the refined fan.  Simplicial; `rays` is the canonical
 * sorted primitive generator list.  g(n) = <nu, n> - h(n) is linear on the
 * cell and `sign` is its sign on the relative interior.  `walls` has bit
 * alpha set when the whole cell lies in the wall alpha-perp.
 */
struct LabeledCell {
  std::vector<RatVector> rays;
  int dim = 0;
  int sign = 0;             // -1, 0, +1
  std::uint32_t walls = 0;  // dominant-chamber mode only
  int source_cone = -1;     // a maximal cone of the input fan containing the cell
};

/**
 * Simplicial refinement of the fan on which g has constant sign per open
 * cell.  Cells are closed under taking faces and the zero cone is excluded;
 * `above[i]` lists the cells strictly containing cell i.
 */
struct LabeledComplex {
  int rank = 0;
  ChamberFan::Ambient ambient = ChamberFan::Ambient::DominantChamber;
  std::vector<LabeledCell> cells;          // sorted by (dim, rays)
  std::vector<std::vector<int>> above;     // strict face-poset relation
  std::size_t positive_count = 0;

  bool has_positive() const { return positive_count > 0; }
};

/**
 * Splits each maximal cone along its own hyperplane {<nu - h_sigma, n> = 0},
 * re-triangulates each half deterministically (first-ray pulling over the
 * canonically sorted ray set, so shared faces receive identical
 * subdivisions), and propagates sign and wall labels to all faces.
 */
LabeledComplex graph_refinement(const PLFunction& h, const RatVector& nu);

}  // namespace regcoh

#endif  // REGCOH_REFINER_HPP
