#include "regcoh/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "regcoh/linalg.hpp"

namespace regcoh {

bool SimplicialComplex::contains(const std::vector<int>& simplex) const {
  const int d = static_cast<int>(simplex.size()) - 1;
  if (d < 0 || d > dimension()) return false;
  return std::binary_search(by_dim[d].begin(), by_dim[d].end(), simplex);
}

SimplicialComplex order_complex(const LabeledComplex& lc,
                                const std::function<bool(const LabeledCell&)>& filter) {
  std::vector<int> vertices;
  for (std::size_t i = 0; i < lc.cells.size(); ++i)
    if (filter(lc.cells[i])) vertices.push_back(static_cast<int>(i));

  SimplicialComplex K;
  if (vertices.empty()) return K;

  std::set<int> selected(vertices.begin(), vertices.end());
  std::vector<std::vector<int>> chains;
  std::vector<int> chain;
  // cells are sorted by dimension, so poset successors have larger indices
  // and every chain is an increasing id sequence
  std::function<void(int)> extend = [&](int last) {
    chains.push_back(chain);
    for (int next : lc.above[last]) {
      if (!selected.count(next)) continue;
      chain.push_back(next);
      extend(next);
      chain.pop_back();
    }
  };
  for (int v : vertices) {
    chain.assign(1, v);
    extend(v);
  }

  int dim = 0;
  for (const auto& c : chains) dim = std::max(dim, static_cast<int>(c.size()) - 1);
  K.by_dim.assign(dim + 1, {});
  for (auto& c : chains) K.by_dim[c.size() - 1].push_back(std::move(c));
  for (auto& level : K.by_dim) std::sort(level.begin(), level.end());
  return K;
}

namespace {

// Rank of the relative coboundary C^d(K,L) -> C^{d+1}(K,L): matrix over the
// d-simplices of K \ L, computed fraction-free over the integers.
Eigen::Index coboundary_rank(const SimplicialComplex& K, const SimplicialComplex& L,
                             int d) {
  if (d < 0 || d >= K.dimension()) return 0;
  std::map<std::vector<int>, int> col_of;
  for (const auto& s : K.by_dim[d])
    if (!L.contains(s)) col_of.emplace(s, static_cast<int>(col_of.size()));
  std::vector<std::vector<Int>> rows;
  for (const auto& s : K.by_dim[d + 1]) {
    if (L.contains(s)) continue;
    std::vector<Int> row(col_of.size(), 0);
    bool nonzero = false;
    std::vector<int> face(s.begin(), s.end());
    for (std::size_t k = 0; k < s.size(); ++k) {
      face.erase(face.begin() + static_cast<long>(k));
      auto it = col_of.find(face);
      if (it != col_of.end()) {
        row[it->second] = (k % 2 == 0) ? 1 : -1;
        nonzero = true;
      }
      face.insert(face.begin() + static_cast<long>(k), s[k]);
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  if (rows.empty() || col_of.empty()) return 0;
  return detail::bareiss_rank(rows);
}

}  // namespace

PairDims relative_dims(const SimplicialComplex& K, const SimplicialComplex& L,
                       int max_degree) {
  for (const auto& level : L.by_dim)
    for (const auto& s : level)
      if (!K.contains(s))
        throw std::invalid_argument("relative_dims: L is not a subcomplex of K");

  PairDims dims(max_degree + 1, 0);
  std::vector<Eigen::Index> ranks(max_degree + 2, 0);
  for (int d = 0; d <= max_degree; ++d) ranks[d + 1] = coboundary_rank(K, L, d);
  for (int d = 0; d <= max_degree; ++d) {
    long basis = 0;
    if (d <= K.dimension())
      for (const auto& s : K.by_dim[d])
        if (!L.contains(s)) ++basis;
    dims[d] = basis - static_cast<long>(ranks[d + 1]) - static_cast<long>(ranks[d]);
  }
  return dims;
}

PairDims pair_dims_V_W(const LabeledComplex& lc, std::uint32_t J, int max_degree) {
  PairDims zero(max_degree + 1, 0);
  if (!lc.has_positive()) return zero;
  SimplicialComplex N =
      order_complex(lc, [](const LabeledCell& c) { return c.sign > 0; });
  SimplicialComplex NW = order_complex(
      lc, [J](const LabeledCell& c) { return c.sign > 0 && (c.walls & J) != 0; });
  return relative_dims(N, NW, max_degree);
}

PairDims chamber_rel_dims(const LabeledComplex& lc, int max_degree) {
  PairDims dims(max_degree + 1, 0);
  if (!lc.has_positive()) {
    // empty subspace of a contractible ambient space
    if (max_degree >= 0) dims[0] = 1;
    return dims;
  }
  SimplicialComplex N =
      order_complex(lc, [](const LabeledCell& c) { return c.sign > 0; });
  SimplicialComplex empty;
  PairDims abs = relative_dims(N, empty, std::max(max_degree - 1, 0));
  abs[0] -= 1;  // reduced cohomology; N is nonempty
  for (int i = 1; i <= max_degree; ++i) dims[i] = abs[i - 1];
  return dims;
}

}  // namespace regcoh
