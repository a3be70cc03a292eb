#ifndef REGCOH_RATIONAL_HPP
#define REGCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace regcoh {

using Int = mpz_class;

/**
 * Exact rational scalar, always in lowest terms with positive denominator.
 *
 * A thin value wrapper over GMP's mpq_class.  The wrapper returns plain
 * values from every operator, so none of gmpxx's expression templates leak
 * into Eigen expressions built on top of this scalar.
 */
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
  }
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  Int numerator() const { return v_.get_num(); }
  Int denominator() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  friend Rat operator+(const Rat& a, const Rat& b) { return wrap(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return wrap(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return wrap(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.v_ == 0) throw std::invalid_argument("Rat: division by zero");
    return wrap(a.v_ / b.v_);
  }
  Rat operator-() const { return wrap(-v_); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  friend Rat abs(const Rat& a) { return wrap(abs(a.v_)); }

  std::string str() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.v_;
  }

private:
  static Rat wrap(mpq_class q) {
    Rat r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

}  // namespace regcoh

namespace Eigen {
template <>
struct NumTraits<regcoh::Rat> : GenericNumTraits<regcoh::Rat> {
  typedef regcoh::Rat Real;
  typedef regcoh::Rat NonInteger;
  typedef regcoh::Rat Nested;
  static inline Real epsilon() { return regcoh::Rat(0); }
  static inline Real dummy_precision() { return regcoh::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace regcoh {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

/// Parses "p" or "p/q" (optionally signed) into a Rat.
inline Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    return Rat(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

inline bool is_integer_vector(const RatVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_integer()) return false;
  return true;
}

}  // namespace regcoh

#endif  // REGCOH_RATIONAL_HPP
