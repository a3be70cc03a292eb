#include "regcoh/weyl.hpp"

#include <bit>
#include <map>

#include "regcoh/linalg.hpp"

namespace regcoh {

namespace {

std::string matrix_key(const RatMatrix& m) {
  std::string k;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      k += m(i, j).str();
      k += ',';
    }
  return k;
}

// A root (given in fundamental-weight coordinates) is negative iff all of
// its simple-root coordinates are <= 0.
bool is_negative_root(const RatMatrix& cartan_inv, const RatVector& x) {
  RatVector coords = cartan_inv * x;
  for (Eigen::Index i = 0; i < coords.size(); ++i)
    if (coords(i) > Rat(0)) return false;
  return true;
}

}  // namespace

std::vector<WeylElement> enumerate_weyl(const RatMatrix& cartan) {
  const int r = static_cast<int>(cartan.cols());
  const RatMatrix cartan_inv = inverse(cartan);

  std::vector<RatMatrix> refl(r);
  for (int i = 0; i < r; ++i) {
    refl[i] = RatMatrix::Identity(r, r);
    for (int k = 0; k < r; ++k) refl[i](k, i) -= cartan(k, i);
  }

  std::vector<WeylElement> out;
  std::map<std::string, std::size_t> seen;
  WeylElement id;
  id.matrix = RatMatrix::Identity(r, r);
  id.inverse = id.matrix;
  seen.emplace(matrix_key(id.matrix), 0);
  out.push_back(std::move(id));

  // BFS over right multiplication; parents are processed in (length, word)
  // order, so the first discovery carries the lex-least reduced word.
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      RatMatrix m = out[head].matrix * refl[i];
      std::string key = matrix_key(m);
      if (seen.count(key)) continue;
      WeylElement w;
      w.matrix = std::move(m);
      w.inverse = refl[i] * out[head].inverse;
      w.length = out[head].length + 1;
      w.word = out[head].word;
      w.word.push_back(i);
      seen.emplace(std::move(key), out.size());
      out.push_back(std::move(w));
    }
  }

  for (auto& w : out) {
    w.descents = 0;
    for (int j = 0; j < r; ++j) {
      RatVector image = w.inverse * RatVector(cartan.col(j));
      if (is_negative_root(cartan_inv, image)) w.descents |= (1u << j);
    }
  }
  return out;
}

RatVector dot_action(const RootDatum& rd, const WeylElement& w, const RatVector& lambda) {
  return w.matrix * RatVector(lambda + rd.rho) - rd.rho;
}

std::uint32_t descent_set(const WeylElement& t) { return t.descents; }

int contribution_degree(const WeylElement& t) {
  return 2 * t.length + std::popcount(t.descents);
}

bool in_Qt(const RootDatum& rd, const RatVector& nu, const WeylElement& t) {
  if (rd.is_torus()) return nu.isZero();
  RatVector coords = rd.root_coords(nu);
  if (!is_integer_vector(coords)) return false;
  for (int i = 0; i < rd.rank; ++i) {
    const bool pos = coords(i) > Rat(0);
    if (pos != ((t.descents >> i) & 1u)) return false;
  }
  return true;
}

bool in_PJ(const RootDatum& rd, const RatVector& nu, std::uint32_t J) {
  if (!is_integer_vector(nu)) return false;
  for (int i = 0; i < rd.rank; ++i) {
    const bool low = nu(i) < Rat(-1);
    if (low != ((J >> i) & 1u)) return false;
  }
  return true;
}

bool in_QJ(const RootDatum& rd, const RatVector& nu, std::uint32_t J) {
  if (rd.is_torus()) return nu.isZero();
  RatVector coords = rd.root_coords(nu);
  if (!is_integer_vector(coords)) return false;
  for (int i = 0; i < rd.rank; ++i) {
    const bool pos = coords(i) > Rat(0);
    if (pos != ((J >> i) & 1u)) return false;
  }
  return true;
}

}  // namespace regcoh
