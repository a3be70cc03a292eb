#include "regcoh/chamber_fan.hpp"

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

RatMatrix gen_matrix(const Cone& c, int rank) {
  RatMatrix g(rank, static_cast<Eigen::Index>(c.gens.size()));
  for (std::size_t j = 0; j < c.gens.size(); ++j) g.col(j) = c.gens[j];
  return g;
}

// Basis of the kernel of m (rational RREF, free columns).
std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  RatMatrix a = m;
  std::vector<Eigen::Index> pivot_of_col(cols, -1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (a(i, col) != Rat(0)) { pivot = i; break; }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(row));
    const Rat p = a(row, col);
    for (Eigen::Index j = col; j < cols; ++j) a(row, j) /= p;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || a(i, col) == Rat(0)) continue;
      const Rat f = a(i, col);
      for (Eigen::Index j = col; j < cols; ++j) a(i, j) -= f * a(row, j);
    }
    pivot_of_col[col] = row;
    ++row;
  }
  std::vector<RatVector> basis;
  for (Eigen::Index col = 0; col < cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    RatVector v = RatVector::Zero(cols);
    v(col) = Rat(1);
    for (Eigen::Index c2 = 0; c2 < cols; ++c2)
      if (pivot_of_col[c2] >= 0) v(c2) = -a(pivot_of_col[c2], col);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Extreme rays of {x : A x >= 0} for a salient cone, as canonical primitive
// vectors.  A ray lies on rank-1 kernels of (r-1)-subsets of the rows.
std::vector<RatVector> extreme_rays(const RatMatrix& A, int rank) {
  std::set<std::string> seen;
  std::vector<RatVector> rays;
  const Eigen::Index m = A.rows();
  std::vector<int> idx(rank - 1);
  auto consider = [&](const RatVector& dir) {
    for (int s = 0; s < 2; ++s) {
      RatVector v = s ? RatVector(-dir) : dir;
      bool ok = true;
      for (Eigen::Index i = 0; i < m && ok; ++i) {
        Rat dot(0);
        for (int j = 0; j < rank; ++j) dot += A(i, j) * v(j);
        if (dot < Rat(0)) ok = false;
      }
      if (ok && seen.insert(vec_key(v)).second) rays.push_back(v);
    }
  };
  if (rank == 1) {
    RatVector one(1);
    one(0) = Rat(1);
    consider(one);
    return rays;
  }
  std::vector<Eigen::Index> comb(rank - 1);
  for (Eigen::Index i = 0; i < rank - 1; ++i) comb[i] = i;
  while (true) {
    RatMatrix sub(rank - 1, rank);
    for (int i = 0; i < rank - 1; ++i) sub.row(i) = A.row(comb[i]);
    auto kern = kernel_basis(sub);
    if (kern.size() == 1) consider(primitive_direction(kern[0]));
    // next combination
    int i = rank - 2;
    while (i >= 0 && comb[i] == m - (rank - 1) + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < rank - 1; ++j) comb[j] = comb[j - 1] + 1;
  }
  return rays;
}

}  // namespace

bool operator==(const Cone& a, const Cone& b) {
  if (a.gens.size() != b.gens.size()) return false;
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (a.gens[i] != b.gens[i]) return false;
  return true;
}

std::string cone_key(const Cone& c) {
  std::string k;
  for (const auto& g : c.gens) {
    k += vec_key(g);
    k += ';';
  }
  return k;
}

Rat ChamberFan::pair(const RatVector& x, const RatVector& n) const {
  RatVector coords = pairing.transpose() * x;
  Rat out(0);
  for (int i = 0; i < rank; ++i) out += coords(i) * n(i);
  return out;
}

int ChamberFan::locate(const RatVector& n) const {
  for (std::size_t c = 0; c < max_cones.size(); ++c) {
    RatVector coords = cone_inverse[c] * n;
    bool inside = true;
    for (int i = 0; i < rank && inside; ++i)
      if (coords(i) < Rat(0)) inside = false;
    if (inside) return static_cast<int>(c);
  }
  return -1;
}

namespace {

ChamberFan build_fan(ChamberFan::Ambient ambient, int rank, const RatMatrix& pairing,
                     const RatMatrix& coweight_to_Y,
                     const std::vector<std::vector<RatVector>>& cones) {
  if (cones.empty()) throw ValidationError("fan: no maximal cones given");
  ChamberFan fan;
  fan.ambient = ambient;
  fan.rank = rank;
  fan.pairing = pairing;
  fan.coweight_to_Y = coweight_to_Y;
  const RatMatrix from_Y = inverse(coweight_to_Y);

  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string where = "cone #" + std::to_string(c + 1);
    if (static_cast<int>(cones[c].size()) != rank)
      throw ValidationError(where + ": expected " + std::to_string(rank) +
                            " generators (maximal cones are full-dimensional and "
                            "simplicial)");
    Cone cone;
    for (const auto& g : cones[c]) {
      if (g.size() != rank) throw ValidationError(where + ": generator has wrong length");
      if (g.isZero()) throw ValidationError(where + ": zero generator");
      RatVector y = coweight_to_Y * g;
      if (!is_integer_vector(y))
        throw ValidationError(where +
                              ": generator is not in the one-parameter lattice Y");
      // canonical primitive representative in Y
      RatVector prim = from_Y * RatVector(primitive_direction(y));
      if (ambient == ChamberFan::Ambient::DominantChamber)
        for (int i = 0; i < rank; ++i)
          if (prim(i) < Rat(0))
            throw ValidationError(where + ": generator outside the dominant chamber");
      cone.gens.push_back(std::move(prim));
    }
    std::sort(cone.gens.begin(), cone.gens.end(), vec_less);
    for (std::size_t i = 0; i + 1 < cone.gens.size(); ++i)
      if (cone.gens[i] == cone.gens[i + 1])
        throw ValidationError(where + ": repeated generator");

    RatMatrix y_gens = coweight_to_Y * gen_matrix(cone, rank);
    Rat det = determinant(y_gens);
    if (det != Rat(1) && det != Rat(-1))
      throw ValidationError(where + ": non-smooth cone (generator determinant " +
                            det.str() + ", expected +-1)");
    fan.max_cones.push_back(std::move(cone));
  }

  std::set<std::string> cone_keys;
  for (const auto& c : fan.max_cones)
    if (!cone_keys.insert(cone_key(c)).second)
      throw ValidationError("overlap: duplicate maximal cone");

  for (const auto& c : fan.max_cones)
    fan.cone_inverse.push_back(inverse(gen_matrix(c, rank)));

  // Any two maximal cones must intersect in a common face: every extreme ray
  // of the intersection is a generator of both.
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a) {
    std::set<std::string> gens_a;
    for (const auto& g : fan.max_cones[a].gens) gens_a.insert(vec_key(g));
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      std::set<std::string> gens_b;
      for (const auto& g : fan.max_cones[b].gens) gens_b.insert(vec_key(g));
      RatMatrix A(2 * rank, rank);
      A.topRows(rank) = fan.cone_inverse[a];
      A.bottomRows(rank) = fan.cone_inverse[b];
      for (const auto& ray : extreme_rays(A, rank)) {
        const std::string key = vec_key(ray);
        if (!gens_a.count(key) || !gens_b.count(key))
          throw ValidationError("overlap: cones #" + std::to_string(a + 1) + " and #" +
                                std::to_string(b + 1) +
                                " do not intersect in a common face");
      }
    }
  }

  // Facet pairing: interior facets are shared by exactly two maximal cones;
  // in dominant-chamber mode unmatched facets must lie in a wall of C+.
  std::map<std::string, int> facet_count;
  std::map<std::string, std::vector<std::size_t>> facet_gens_on_wall;
  for (const auto& c : fan.max_cones) {
    for (std::size_t skip = 0; skip < c.gens.size(); ++skip) {
      Cone facet;
      for (std::size_t i = 0; i < c.gens.size(); ++i)
        if (i != skip) facet.gens.push_back(c.gens[i]);
      const std::string key = cone_key(facet);
      facet_count[key] += 1;
      if (facet_count[key] == 1) {
        std::vector<std::size_t> walls;
        for (int coord = 0; coord < rank; ++coord) {
          bool on_wall = true;
          for (const auto& g : facet.gens)
            if (g(coord) != Rat(0)) on_wall = false;
          if (on_wall) walls.push_back(coord);
        }
        facet_gens_on_wall[key] = walls;
      }
    }
  }
  for (const auto& [key, count] : facet_count) {
    if (count == 2) continue;
    if (count > 2)
      throw ValidationError("overlap: a facet is shared by more than two cones");
    if (ambient == ChamberFan::Ambient::FullSpace || facet_gens_on_wall[key].empty())
      throw ValidationError("coverage gap: unmatched facet [" + key +
                            "] does not lie on the boundary of the support");
  }
  return fan;
}

}  // namespace

ChamberFan build_chamber_fan(const RootDatum& rd,
                             const std::vector<std::vector<RatVector>>& cones) {
  if (rd.is_torus())
    throw ValidationError("dominant-chamber fans need a semisimple root datum");
  return build_fan(ChamberFan::Ambient::DominantChamber, rd.rank, rd.pairing,
                   rd.coweight_to_Y, cones);
}

ChamberFan build_complete_fan(int rank, const std::vector<std::vector<RatVector>>& cones) {
  RatMatrix id = RatMatrix::Identity(rank, rank);
  return build_fan(ChamberFan::Ambient::FullSpace, rank, id, id, cones);
}

ChamberFan wonderful_fan(const RootDatum& rd) {
  std::vector<RatVector> gens;
  for (int i = 0; i < rd.rank; ++i) {
    RatVector e = RatVector::Zero(rd.rank);
    e(i) = Rat(1);
    gens.push_back(std::move(e));
  }
  return build_chamber_fan(rd, {gens});
}

PLFunction build_pl_function(const ChamberFan& fan, const std::vector<RatVector>& values) {
  if (values.size() != fan.max_cones.size())
    throw ValidationError("piecewise-linear function: expected one weight per maximal "
                          "cone (" + std::to_string(fan.max_cones.size()) + " cones, " +
                          std::to_string(values.size()) + " rows)");
  for (std::size_t c = 0; c < values.size(); ++c) {
    if (values[c].size() != fan.rank)
      throw ValidationError("h row #" + std::to_string(c + 1) + " has wrong length");
    if (!is_integer_vector(values[c]))
      throw ValidationError("h row #" + std::to_string(c + 1) +
                            ": not integral on the cover's one-parameter lattice "
                            "(coordinates must be integers)");
  }
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      for (const auto& g : fan.max_cones[a].gens) {
        bool shared = false;
        for (const auto& g2 : fan.max_cones[b].gens)
          if (g == g2) shared = true;
        if (!shared) continue;
        if (fan.pair(values[a] - values[b], g) != Rat(0))
          throw ValidationError(
              "discontinuity: h differs across the shared face of cones #" +
              std::to_string(a + 1) + " and #" + std::to_string(b + 1) +
              " on generator [" + vec_key(g) + "]");
      }
    }
  PLFunction h;
  h.fan = fan;
  h.values = values;
  return h;
}

Rat eval_h(const PLFunction& h, const RatVector& n) {
  const int c = h.fan.locate(n);
  if (c < 0) throw ValidationError("eval_h: point outside the fan's support");
  return h.fan.pair(h.values[c], n);
}

bool in_h_plus_X(const RootDatum& rd, const PLFunction& h, const RatVector& mu) {
  for (const auto& value : h.values)
    if (!in_lattice(rd, mu - value, Lattice::X)) return false;
  return true;
}

}  // namespace regcoh
