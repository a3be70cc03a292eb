#ifndef REGCOH_COHOMOLOGY_HPP
#define REGCOH_COHOMOLOGY_HPP

#include <functional>

#include "regcoh/refiner.hpp"

namespace regcoh {

/**
 * An abstract simplicial complex on integer vertex ids.  Simplices are
 * sorted id tuples, closed under taking subsets, grouped by dimension.
 */
struct SimplicialComplex {
  std::vector<std::vector<std::vector<int>>> by_dim;  // by_dim[d] = d-simplices

  bool empty() const { return by_dim.empty(); }
  int dimension() const { return static_cast<int>(by_dim.size()) - 1; }
  std::size_t count(int d) const {
    return d >= 0 && d <= dimension() ? by_dim[d].size() : 0;
  }
  bool contains(const std::vector<int>& simplex) const;
};

/// Per-degree dimensions of a cohomology computation.
using PairDims = std::vector<long>;

/**
 * Full subcomplex of the order complex of the nonzero-cell poset spanned by
 * the cells passing the filter: vertices are cell indices, simplices are
 * chains.  With filter (sign == +) this is a compact model of V minus the
 * apex, up to homotopy.
 */
SimplicialComplex order_complex(const LabeledComplex& lc,
                                const std::function<bool(const LabeledCell&)>& filter);

/// dim H^j(K, L; Q) for 0 <= j <= max_degree, via ranks of the relative
/// coboundary matrices.  L must be a subcomplex of K.
PairDims relative_dims(const SimplicialComplex& K, const SimplicialComplex& L,
                       int max_degree);

/// dims of H^j(V, V intersected with the union of walls alpha-perp, alpha in J).
PairDims pair_dims_V_W(const LabeledComplex& lc, std::uint32_t J, int max_degree);

/// dims of H^i(C+, V) (or H^i(Y_R, V) in full-space mode): (1, 0, ...) when
/// V is empty, else reduced cohomology of the positive part shifted up by one.
PairDims chamber_rel_dims(const LabeledComplex& lc, int max_degree);

}  // namespace regcoh

#endif  // REGCOH_COHOMOLOGY_HPP
