#ifndef REGCOH_CHAMBER_FAN_HPP
#define REGCOH_CHAMBER_FAN_HPP

#include "regcoh/root_datum.hpp"

namespace regcoh {

/// A cone as its canonical generator list: primitive in the one-parameter
/// lattice, lexicographically sorted.  Equality of cones and face
/// identification are syntactic on this form.
struct Cone {
  std::vector<RatVector> gens;
};

bool operator==(const Cone& a, const Cone& b);
std::string cone_key(const Cone& c);

/**
 * A smooth simplicial fan subdividing the dominant chamber (regular
 * compactifications) or all of Y_R (complete toric case).
 *
 * Validation establishes: every maximal cone is full-dimensional with a
 * Z-basis of Y as generators; any two maximal cones intersect in a common
 * face; and facets pair up so the union is the whole ambient support.
 */
struct ChamberFan {
  enum class Ambient { DominantChamber, FullSpace };

  Ambient ambient = Ambient::DominantChamber;
  int rank = 0;
  RatMatrix pairing;        // <x, n> = x^T * pairing * n
  RatMatrix coweight_to_Y;  // integral on Y; used for primitivity and smoothness
  std::vector<Cone> max_cones;          // input order preserved
  std::vector<RatMatrix> cone_inverse;  // inverse of the generator matrix, per cone

  Rat pair(const RatVector& x, const RatVector& n) const;
  /// Index of a maximal cone containing n, or -1 when n is outside the support.
  int locate(const RatVector& n) const;
};

/// Fan subdividing C+ for the given root datum.  Cones are generator lists in
/// fundamental-coweight coordinates.  Throws ValidationError with a named
/// diagnostic (non-smooth cone, overlap, coverage gap, generator outside C+).
ChamberFan build_chamber_fan(const RootDatum& rd,
                             const std::vector<std::vector<RatVector>>& cones);

/// Complete fan in R^rank (torus case); standard-basis coordinates.
ChamberFan build_complete_fan(int rank, const std::vector<std::vector<RatVector>>& cones);

/// The trivial subdivision {C+} (the wonderful compactification's fan).
ChamberFan wonderful_fan(const RootDatum& rd);

/**
 * A piecewise-linear function adapted to the fan: one linear part per
 * maximal cone, continuous across shared faces, integral on the cover's
 * one-parameter lattice (integral fundamental-weight coordinates; plain
 * integer coordinates in the torus case).
 */
struct PLFunction {
  ChamberFan fan;
  std::vector<RatVector> values;  // h_sigma per maximal cone, by cone index
};

PLFunction build_pl_function(const ChamberFan& fan, const std::vector<RatVector>& values);

/// h(n) for n in the support (well-defined across cones by continuity).
Rat eval_h(const PLFunction& h, const RatVector& n);

/// mu - h_sigma in X for every maximal cone (X = Z^rank in the torus case).
bool in_h_plus_X(const RootDatum& rd, const PLFunction& h, const RatVector& mu);

}  // namespace regcoh

#endif  // REGCOH_CHAMBER_FAN_HPP
