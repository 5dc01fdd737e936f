#pragma once

#include <string>
#include <utility>
#include <vector>

#include "g2cover/multipoly.hpp"
#include "g2cover/scalar.hpp"

namespace g2cover {

// Dense univariate polynomial over Scalar (rationals or a single quadratic
// extension). This is the coefficient arithmetic used for curves defined
// over Q(sqrt(d)) and for the one-variable Euclidean algorithm; the
// multivariate ring with rational coefficients lives in MultiPoly.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);  // coeffs[i] multiplies x^i
  explicit UniPoly(const Scalar& c);

  static UniPoly from_multipoly(const MultiPoly& p, Var v);

  const std::vector<Scalar>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(int i) const;
  const Scalar& lc() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& f, const UniPoly& g);
  friend UniPoly operator-(const UniPoly& f, const UniPoly& g);
  friend UniPoly operator*(const UniPoly& f, const UniPoly& g);
  friend UniPoly operator*(const Scalar& s, const UniPoly& f);
  friend bool operator==(const UniPoly& f, const UniPoly& g) { return f.c_ == g.c_; }
  friend bool operator!=(const UniPoly& f, const UniPoly& g) { return !(f == g); }

  UniPoly derivative() const;
  Scalar eval(const Scalar& x) const;
  UniPoly monic() const;

  // Field division: f = q*g + r with deg r < deg g.
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& f, const UniPoly& g);

  std::string str(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Scalar> c_;
};

UniPoly uni_gcd(const UniPoly& f, const UniPoly& g);  // monic
Scalar uni_resultant(const UniPoly& f, const UniPoly& g);
Scalar uni_discriminant(const UniPoly& f);

}  // namespace g2cover
