#pragma once

#include <string>
#include <variant>

#include "g2cover/quadext.hpp"
#include "g2cover/rational.hpp"

namespace g2cover {

// Closure of the scalar domain actually needed by the constructions: the
// rationals plus at most one quadratic extension at a time. Arithmetic
// results that land back in the rationals are demoted so equality and
// serialization are canonical.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(QuadExtScalar q);                  // NOLINT(google-explicit-constructor)

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const;          // requires is_rational
  const QuadExtScalar& quad() const;         // requires !is_rational
  QuadExtScalar as_quad() const;             // promotes rationals (d = 0)

  bool is_zero() const;
  bool is_one() const;
  Scalar conjugate() const;
  Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  friend bool operator==(const Scalar& x, const Scalar& y);
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar pow(long e) const;
  std::string str() const;

 private:
  std::variant<Rational, QuadExtScalar> v_;
};

}  // namespace g2cover
