#pragma once

#include <map>
#include <string>

#include "g2cover/multipoly.hpp"
#include "g2cover/scalar.hpp"

namespace g2cover {

// Quotient of multivariate polynomials kept in canonical reduced form:
// gcd(num, den) = 1 and den has coprime integer coefficients with positive
// leading coefficient, so operator== is structural equality.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  RatFunc(const Rational& c) : num_(MultiPoly(c)), den_(1) {}  // NOLINT
  RatFunc(long c) : num_(MultiPoly(Rational(c))), den_(1) {}  // NOLINT
  RatFunc(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_ == MultiPoly(1); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g);
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& f, const RatFunc& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }
  friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

  RatFunc pow(long e) const;
  RatFunc derivative(Var v) const;

  // Substitute rational functions for variables, simultaneously; variables
  // absent from `image` stay themselves.
  RatFunc substitute(const std::map<Var, RatFunc>& image) const;

  // Evaluate at a scalar point (every used variable must be assigned).
  // Throws when the denominator vanishes there.
  Scalar eval(const std::map<Var, Scalar>& point) const;

  std::string str() const;

 private:
  void reduce();
  MultiPoly num_, den_;
};

// Evaluate a polynomial at a point in the fraction field.
RatFunc substitute(const MultiPoly& p, const std::map<Var, RatFunc>& image);

}  // namespace g2cover
