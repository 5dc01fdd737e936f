#pragma once

#include <optional>
#include <string>

#include "g2cover/rational.hpp"

namespace g2cover {

// Element p + q*sqrt(d) of a real or imaginary quadratic extension of the
// rationals. d is a squarefree non-square integer, fixed per computation
// context: combining two values with different d raises MixedExtension
// rather than building a tower. A rational is represented with q = 0 and
// d = 0 so that Scalar arithmetic can promote it into any context.
class QuadExtScalar {
 public:
  QuadExtScalar() = default;
  QuadExtScalar(Rational p, Rational q, Integer d);
  explicit QuadExtScalar(const Rational& r) : p_(r) {}

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }
  const Integer& d() const { return d_; }

  bool is_rational() const { return q_.is_zero(); }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  std::optional<Rational> as_rational() const {
    if (is_rational()) return p_;
    return std::nullopt;
  }

  QuadExtScalar conjugate() const { return QuadExtScalar(p_, -q_, d_); }
  // norm = self * conjugate = p^2 - q^2 d, always rational
  Rational norm() const;
  Rational trace() const { return p_ + p_; }
  QuadExtScalar inverse() const;

  QuadExtScalar operator-() const { return QuadExtScalar(-p_, -q_, d_); }
  friend QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y);
  friend QuadExtScalar operator/(const QuadExtScalar& x, const QuadExtScalar& y);
  friend bool operator==(const QuadExtScalar& x, const QuadExtScalar& y);
  friend bool operator!=(const QuadExtScalar& x, const QuadExtScalar& y) { return !(x == y); }

  std::string str() const;  // "p", "p + q*sqrt(d)" canonical text

 private:
  // requires matching contexts; promotes rationals
  static Integer joint_context(const QuadExtScalar& x, const QuadExtScalar& y);

  Rational p_{0};
  Rational q_{0};
  Integer d_{0};
};

}  // namespace g2cover
