#include "regcoh/refiner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "regcoh/linalg.hpp"

namespace regcoh {

namespace {

bool vec_less(const RatVector& a, const RatVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

std::string vec_key(const RatVector& v) {
  std::string k;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    k += v(i).str();
    k += ',';
  }
  return k;
}

std::string rays_key(const std::vector<RatVector>& rays) {
  std::string k;
  for (const auto& r : rays) {
    k += vec_key(r);
    k += ';';
  }
  return k;
}

RatMatrix rays_matrix(const std::vector<RatVector>& rays, int rank) {
  RatMatrix m(rank, static_cast<Eigen::Index>(rays.size()));
  for (std::size_t j = 0; j < rays.size(); ++j) m.col(j) = rays[j];
  return m;
}

// Pivot columns of the matrix whose rows are the rays: a coordinate subset
// on which the span projects isomorphically.  Deterministic.
std::vector<int> span_coordinates(const std::vector<RatVector>& rays, int rank, int dim) {
  RatMatrix a(static_cast<Eigen::Index>(rays.size()), rank);
  for (std::size_t i = 0; i < rays.size(); ++i) a.row(i) = rays[i].transpose();
  std::vector<int> cols;
  Eigen::Index row = 0;
  for (int col = 0; col < rank && static_cast<int>(cols.size()) < dim; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i)
      if (a(i, col) != Rat(0)) { pivot = i; break; }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(row));
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == Rat(0)) continue;
      const Rat f = a(i, col) / a(row, col);
      for (int j = col; j < rank; ++j) a(i, j) -= f * a(row, j);
    }
    cols.push_back(col);
    ++row;
  }
  return cols;
}

/**
 * First-ray pulling triangulation of the cone spanned by `rays` (the extreme
 * rays of a salient cone, canonically sorted).  The triangulation restricted
 * to any face equals the pulling triangulation of that face over the same
 * global order, so the two sides of a shared face subdivide it identically.
 */
void pulling_triangulation(const std::vector<RatVector>& rays, int rank,
                           std::vector<std::vector<RatVector>>& out) {
  const int dim = static_cast<int>(regcoh::rank(rays_matrix(rays, rank)));
  if (static_cast<int>(rays.size()) == dim) {
    out.push_back(rays);
    return;
  }
  const std::vector<int> coords = span_coordinates(rays, rank, dim);
  auto proj = [&](const RatVector& v) {
    RatVector p(dim);
    for (int i = 0; i < dim; ++i) p(i) = v(coords[i]);
    return p;
  };

  // Facets: for each (dim-1)-subset spanning a hyperplane of the span, the
  // rays on it, provided all others sit weakly on one side.
  const int n = static_cast<int>(rays.size());
  std::set<std::string> facet_seen;
  std::vector<std::vector<int>> facets;
  std::vector<int> comb(dim - 1);
  for (int i = 0; i < dim - 1; ++i) comb[i] = i;
  while (true) {
    RatMatrix m(dim, dim);
    for (int i = 0; i < dim - 1; ++i) m.row(i) = proj(rays[comb[i]]).transpose();
    std::vector<int> side(n);
    bool has_pos = false, has_neg = false;
    for (int x = 0; x < n; ++x) {
      m.row(dim - 1) = proj(rays[x]).transpose();
      const int s = determinant(m).sign();
      side[x] = s;
      if (s > 0) has_pos = true;
      if (s < 0) has_neg = true;
    }
    if (has_pos != has_neg) {  // supporting hyperplane, not degenerate
      std::vector<int> facet;
      for (int x = 0; x < n; ++x)
        if (side[x] == 0) facet.push_back(x);
      std::string key;
      for (int x : facet) key += std::to_string(x) + ",";
      if (facet_seen.insert(key).second) facets.push_back(std::move(facet));
    }
    int i = dim - 2;
    while (i >= 0 && comb[i] == n - (dim - 1) + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < dim - 1; ++j) comb[j] = comb[j - 1] + 1;
  }

  for (const auto& facet : facets) {
    if (facet.front() == 0) continue;  // pulled ray lies on this facet
    std::vector<RatVector> facet_rays;
    for (int x : facet) facet_rays.push_back(rays[x]);
    std::vector<std::vector<RatVector>> pieces;
    pulling_triangulation(facet_rays, rank, pieces);
    for (auto& piece : pieces) {
      piece.push_back(rays[0]);
      std::sort(piece.begin(), piece.end(), vec_less);
      out.push_back(std::move(piece));
    }
  }
}

struct CellRegistry {
  std::map<std::string, int> index;
  std::vector<LabeledCell> cells;

  void add(const std::vector<RatVector>& rays, int source) {
    // register the cell and all of its faces (subsets of the rays)
    const int n = static_cast<int>(rays.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<RatVector> face;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(rays[i]);
      const std::string key = rays_key(face);
      if (index.count(key)) continue;
      LabeledCell cell;
      cell.rays = face;
      cell.dim = static_cast<int>(face.size());
      cell.source_cone = source;
      index.emplace(key, static_cast<int>(cells.size()));
      cells.push_back(std::move(cell));
    }
  }
};

}  // namespace

LabeledComplex graph_refinement(const PLFunction& h, const RatVector& nu) {
  const ChamberFan& fan = h.fan;
  const int rank = fan.rank;
  if (nu.size() != rank) throw ValidationError("graph_refinement: weight has wrong length");

  CellRegistry reg;
  const RatMatrix from_Y = inverse(fan.coweight_to_Y);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& gens = fan.max_cones[c].gens;
    const RatVector slope = nu - h.values[c];
    std::vector<Rat> value(gens.size());
    bool strict_pos = false, strict_neg = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      value[i] = fan.pair(slope, gens[i]);
      if (value[i] > Rat(0)) strict_pos = true;
      if (value[i] < Rat(0)) strict_neg = true;
    }
    if (!strict_pos || !strict_neg) {
      reg.add(gens, static_cast<int>(c));
      continue;
    }
    // cut rays: 2-faces with generators of strictly opposite sign meet the
    // hyperplane in v_i * g_j - v_j * g_i
    std::vector<RatVector> cuts;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (value[i] > Rat(0) && value[j] < Rat(0)) {
          RatVector w(rank);
          for (int k = 0; k < rank; ++k)
            w(k) = value[i] * gens[j](k) - value[j] * gens[i](k);
          RatVector y = fan.coweight_to_Y * w;
          cuts.push_back(from_Y * RatVector(primitive_direction(y)));
        }
    for (int side = 0; side < 2; ++side) {
      std::vector<RatVector> rays;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (side == 0 && value[i] >= Rat(0)) rays.push_back(gens[i]);
        if (side == 1 && value[i] <= Rat(0)) rays.push_back(gens[i]);
      }
      rays.insert(rays.end(), cuts.begin(), cuts.end());
      std::sort(rays.begin(), rays.end(), vec_less);
      std::vector<std::vector<RatVector>> pieces;
      pulling_triangulation(rays, rank, pieces);
      for (const auto& piece : pieces) reg.add(piece, static_cast<int>(c));
    }
  }

  LabeledComplex lc;
  lc.rank = rank;
  lc.ambient = fan.ambient;
  lc.cells = std::move(reg.cells);
  std::sort(lc.cells.begin(), lc.cells.end(), [](const LabeledCell& a, const LabeledCell& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    for (std::size_t i = 0; i < a.rays.size(); ++i) {
      if (vec_less(a.rays[i], b.rays[i])) return true;
      if (vec_less(b.rays[i], a.rays[i])) return false;
    }
    return false;
  });

  for (auto& cell : lc.cells) {
    RatVector bary = RatVector::Zero(rank);
    for (const auto& r : cell.rays) bary += r;
    const RatVector slope = nu - h.values[cell.source_cone];
    cell.sign = fan.pair(slope, bary).sign();
    // paranoia: no ray of the cell may sit strictly on the other side
    for (const auto& r : cell.rays) {
      const int s = fan.pair(slope, r).sign();
      if (s * cell.sign < 0)
        throw std::logic_error("graph_refinement: cell crosses its hyperplane");
    }
    if (cell.sign > 0) ++lc.positive_count;
    cell.walls = 0;
    if (fan.ambient == ChamberFan::Ambient::DominantChamber) {
      for (int coord = 0; coord < rank; ++coord) {
        bool on_wall = true;
        for (const auto& r : cell.rays)
          if (r(coord) != Rat(0)) on_wall = false;
        if (on_wall) cell.walls |= (1u << coord);
      }
    }
  }

  // strict containment relation on ray sets (multi-word bitmasks)
  std::map<std::string, int> ray_ids;
  auto ray_id = [&](const RatVector& v) {
    const std::string key = vec_key(v);
    auto it = ray_ids.find(key);
    if (it != ray_ids.end()) return it->second;
    const int id = static_cast<int>(ray_ids.size());
    ray_ids.emplace(key, id);
    return id;
  };
  std::vector<std::vector<std::uint64_t>> masks(lc.cells.size());
  for (std::size_t i = 0; i < lc.cells.size(); ++i)
    for (const auto& r : lc.cells[i].rays) {
      const int id = ray_id(r);
      auto& mask = masks[i];
      if (mask.size() <= static_cast<std::size_t>(id / 64)) mask.resize(id / 64 + 1, 0);
      mask[id / 64] |= (1ull << (id % 64));
    }
  auto subset = [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.size() > b.size()) {
      for (std::size_t w = b.size(); w < a.size(); ++w)
        if (a[w] != 0) return false;
    }
    for (std::size_t w = 0; w < std::min(a.size(), b.size()); ++w)
      if ((a[w] & b[w]) != a[w]) return false;
    return true;
  };
  lc.above.assign(lc.cells.size(), {});
  for (std::size_t i = 0; i < lc.cells.size(); ++i)
    for (std::size_t j = 0; j < lc.cells.size(); ++j)
      if (i != j && lc.cells[i].dim < lc.cells[j].dim && subset(masks[i], masks[j]))
        lc.above[i].push_back(static_cast<int>(j));
  return lc;
}

}  // namespace regcoh
