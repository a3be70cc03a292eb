#include "regcoh/root_datum.hpp"

#include <algorithm>
#include <map>

#include "regcoh/linalg.hpp"
#include "regcoh/weyl.hpp"

namespace regcoh {

Series parse_series(const std::string& name) {
  if (name == "A") return Series::A;
  if (name == "B") return Series::B;
  if (name == "C") return Series::C;
  if (name == "D") return Series::D;
  if (name == "F") return Series::F;
  if (name == "G") return Series::G;
  if (name == "A1xA1" || name == "A1A1") return Series::A1xA1;
  if (name == "torus" || name == "T") return Series::Torus;
  throw ValidationError("unknown series '" + name + "'");
}

std::string series_name(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
    case Series::F: return "F";
    case Series::G: return "G";
    case Series::A1xA1: return "A1xA1";
    case Series::Torus: return "torus";
  }
  return "?";
}

std::string WeylElement::name() const {
  if (word.empty()) return "e";
  std::string out;
  for (int i : word) out += static_cast<char>('1' + i);
  return out;
}

namespace {

// Entry (i,j) = <alpha_j, alpha_i^vee>; columns are the simple roots in
// fundamental-weight coordinates.
RatMatrix cartan_matrix(Series series, int rank) {
  auto chain = [](int r) {
    RatMatrix c = RatMatrix::Zero(r, r);
    for (int i = 0; i < r; ++i) {
      c(i, i) = Rat(2);
      if (i + 1 < r) c(i, i + 1) = c(i + 1, i) = Rat(-1);
    }
    return c;
  };
  const bool desk = rank >= 1 && rank <= 4;
  switch (series) {
    case Series::A:
      if (!desk) break;
      return chain(rank);
    case Series::B: {
      if (rank < 2 || rank > 4) break;
      RatMatrix c = chain(rank);
      c(rank - 1, rank - 2) = Rat(-2);  // <alpha_{r-1}, alpha_r^vee> = -2
      return c;
    }
    case Series::C: {
      if (rank < 2 || rank > 4) break;
      RatMatrix c = chain(rank);
      c(rank - 2, rank - 1) = Rat(-2);
      return c;
    }
    case Series::D: {
      if (rank != 4) break;
      RatMatrix c = RatMatrix::Zero(4, 4);
      for (int i = 0; i < 4; ++i) c(i, i) = Rat(2);
      // node 1 is the centre of the fork: 0-1, 1-2, 1-3
      c(0, 1) = c(1, 0) = Rat(-1);
      c(1, 2) = c(2, 1) = Rat(-1);
      c(1, 3) = c(3, 1) = Rat(-1);
      return c;
    }
    case Series::F: {
      if (rank != 4) break;
      RatMatrix c = chain(4);
      c(2, 1) = Rat(-2);  // double bond 2 => 3
      return c;
    }
    case Series::G: {
      if (rank != 2) break;
      RatMatrix c(2, 2);
      c << Rat(2), Rat(-3), Rat(-1), Rat(2);
      return c;
    }
    case Series::A1xA1: {
      if (rank != 2) break;
      RatMatrix c = RatMatrix::Zero(2, 2);
      c(0, 0) = c(1, 1) = Rat(2);
      return c;
    }
    case Series::Torus:
      break;
  }
  throw ValidationError("unsupported type " + series_name(series) + std::to_string(rank) +
                        " (desk scale: A1-A4, B2-B4, C2-C4, D4, F4, G2, A1xA1)");
}

std::string vec_key(const RatVector& v) {
  std::string k;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    k += v(i).str();
    k += ',';
  }
  return k;
}

// Closes the simple (root, coroot) pairs under all simple reflections.
void generate_roots(RootDatum& rd) {
  const int r = rd.rank;
  std::map<std::string, std::pair<RatVector, RatVector>> seen;
  std::vector<std::pair<RatVector, RatVector>> queue;
  for (int j = 0; j < r; ++j) {
    RatVector root = rd.cartan.col(j);
    RatVector coroot = rd.cartan.row(j).transpose();
    seen.emplace(vec_key(root), std::make_pair(root, coroot));
    queue.emplace_back(root, coroot);
  }
  while (!queue.empty()) {
    auto [x, n] = queue.back();
    queue.pop_back();
    for (int i = 0; i < r; ++i) {
      RatVector x2 = x - RatVector(rd.cartan.col(i)) * x(i);
      RatVector n2 = n - RatVector(rd.cartan.row(i).transpose()) * n(i);
      if (seen.emplace(vec_key(x2), std::make_pair(x2, n2)).second)
        queue.emplace_back(x2, n2);
    }
  }
  for (auto& [key, pair] : seen) {
    RatVector coords = rd.cartan_inv * pair.first;
    bool nonneg = true;
    for (int i = 0; i < r; ++i)
      if (coords(i) < Rat(0)) nonneg = false;
    if (nonneg) {
      rd.positive_roots.push_back(pair.first);
      rd.positive_coroots.push_back(pair.second);
    }
  }
}

RatMatrix lattice_generators(const RootDatum& rd, const LatticeChoice& choice) {
  const int r = rd.rank;
  if (std::holds_alternative<AdjointLattice>(choice)) return rd.cartan;
  if (std::holds_alternative<SimplyConnectedLattice>(choice))
    return RatMatrix::Identity(r, r);
  const auto& rows = std::get<std::vector<std::vector<Rat>>>(choice);
  if (static_cast<int>(rows.size()) != r)
    throw ValidationError("lattice generators must form a basis: expected " +
                          std::to_string(r) + " rows");
  RatMatrix L(r, r);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != r)
      throw ValidationError("lattice generator row has wrong length");
    for (int j = 0; j < r; ++j) L(j, i) = rows[i][j];
  }
  return L;
}

void validate_lattice(const RootDatum& rd, const RatMatrix& L) {
  const int r = rd.rank;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (!L(i, j).is_integer())
        throw ValidationError(
            "lattice generator has non-integral pairing with a coroot "
            "(X must lie in the weight lattice P)");
  if (rank(L) != r) throw ValidationError("lattice generators are not independent");
  for (int j = 0; j < r; ++j)
    if (!solve_integral(L, rd.cartan.col(j)))
      throw ValidationError(
          "simple root alpha_" + std::to_string(j + 1) +
          " is not an integral combination of the lattice generators "
          "(X must contain the root lattice Q)");
}

}  // namespace

RootDatum torus_datum(int rank) {
  if (rank < 1 || rank > 8) throw ValidationError("torus rank out of range [1, 8]");
  RootDatum rd;
  rd.series = Series::Torus;
  rd.rank = rank;
  rd.cartan = RatMatrix::Identity(rank, rank);
  rd.cartan_inv = rd.cartan;
  rd.pairing = rd.cartan;
  rd.rho = RatVector::Zero(rank);
  rd.lattice = rd.cartan;
  rd.coweight_to_Y = rd.cartan;
  WeylElement id;
  id.matrix = RatMatrix::Identity(rank, rank);
  id.inverse = id.matrix;
  rd.weyl.push_back(std::move(id));
  return rd;
}

RootDatum build_root_datum(Series series, int rank, const LatticeChoice& lattice) {
  if (series == Series::Torus) return torus_datum(rank);
  RootDatum rd;
  rd.series = series;
  rd.rank = rank;
  rd.cartan = cartan_matrix(series, rank);
  rd.cartan_inv = inverse(rd.cartan);
  rd.pairing = rd.cartan_inv.transpose();
  rd.rho = RatVector::Constant(rank, Rat(1));
  generate_roots(rd);
  rd.lattice = lattice_generators(rd, lattice);
  validate_lattice(rd, rd.lattice);
  rd.coweight_to_Y = RatMatrix(rd.cartan_inv * rd.lattice).transpose();
  rd.weyl = enumerate_weyl(rd.cartan);
  return rd;
}

Rat RootDatum::pair(const RatVector& x, const RatVector& n) const {
  Rat out(0);
  RatVector coords = pairing.transpose() * x;  // root coordinates of x
  for (int i = 0; i < rank; ++i) out += coords(i) * n(i);
  return out;
}

RatVector RootDatum::root_coords(const RatVector& x) const { return cartan_inv * x; }

bool is_dominant(const RootDatum& rd, const RatVector& weight) {
  if (rd.is_torus()) return true;
  for (int i = 0; i < rd.rank; ++i)
    if (weight(i) < Rat(0)) return false;
  return true;
}

bool in_lattice(const RootDatum& rd, const RatVector& weight, Lattice which) {
  if (rd.is_torus()) {
    if (which == Lattice::Q) return weight.isZero();
    return is_integer_vector(weight);
  }
  switch (which) {
    case Lattice::Q:
      return is_integer_vector(rd.root_coords(weight));
    case Lattice::P:
      return is_integer_vector(weight);
    case Lattice::X:
      return solve_integral(rd.lattice, weight).has_value();
  }
  return false;
}

Int weyl_dimension(const RootDatum& rd, const RatVector& mu) {
  if (!is_dominant(rd, mu) || !in_lattice(rd, mu, Lattice::P))
    throw ValidationError("weyl_dimension: weight must be dominant and integral");
  Rat dim(1);
  const RatVector shifted = mu + rd.rho;
  for (std::size_t k = 0; k < rd.positive_roots.size(); ++k) {
    dim *= rd.pair(shifted, rd.positive_coroots[k]) /
           rd.pair(rd.rho, rd.positive_coroots[k]);
  }
  if (!dim.is_integer())
    throw std::logic_error("weyl_dimension: non-integral result");
  return dim.numerator();
}

}  // namespace regcoh
