#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2cover/rational.hpp"
#include "g2cover/scalar.hpp"

namespace g2cover {

// The closed variable universe. Everything the constructions need lives in
// these ten names; keeping the universe fixed makes the term order, equality
// and serialization canonical with no per-object variable bookkeeping.
enum class Var : uint8_t { X = 0, x, t, z, a, b, u, v, w, T };
inline constexpr size_t kNumVars = 10;
const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

using Mono = std::array<uint16_t, kNumVars>;

int total_degree(const Mono& m);
// graded lexicographic: higher total degree first, ties broken by the
// exponent of Var::X, then Var::x, and so on down the declared list
bool mono_less(const Mono& m1, const Mono& m2);

// Sparse multivariate polynomial over the rationals. Terms are kept sorted
// in descending graded-lex order with no zero coefficients, so structural
// equality is semantic equality.
class MultiPoly {
 public:
  using Term = std::pair<Mono, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v, uint16_t power = 1);
  static MultiPoly monomial(const Mono& m, const Rational& c);
  static MultiPoly from_terms(std::vector<Term> terms);  // normalizes

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant
  bool uses(Var v) const;

  int degree(Var v) const;   // -1 for the zero polynomial
  int total_degree() const;  // -1 for the zero polynomial

  const Rational& leading_coeff() const;  // graded-lex leading term
  MultiPoly leading_coeff_wrt(Var v) const;
  MultiPoly coeff_wrt(Var v, int power) const;     // coefficient of v^power, v removed
  std::vector<MultiPoly> coeffs_wrt(Var v) const;  // index = power of v

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q);
  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
  friend MultiPoly operator*(long c, const MultiPoly& p) { return Rational(c) * p; }
  friend MultiPoly operator*(const MultiPoly& p, long c) { return Rational(c) * p; }
  friend bool operator==(const MultiPoly& p, const MultiPoly& q) { return p.terms_ == q.terms_; }
  friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(Var v) const;

  // substitute rational values for a subset of the variables
  MultiPoly eval_partial(const std::map<Var, Rational>& point) const;
  // full evaluation; every variable appearing must be assigned
  Scalar eval(const std::map<Var, Scalar>& point) const;
  // substitute v -> alpha*v + beta
  MultiPoly compose_affine(Var v, const Rational& alpha, const Rational& beta) const;
  // substitute v -> value (a polynomial), e.g. for reducing powers
  MultiPoly subst(Var v, const MultiPoly& value) const;

  // scale to coprime integer coefficients with positive leading coefficient
  MultiPoly integer_primitive() const;
  // divide by the leading (graded-lex) coefficient
  MultiPoly monic() const;

  std::string str() const;
  size_t checksum() const;  // FNV-1a over the canonical serialization

 private:
  std::vector<Term> terms_;
};

MultiPoly operator*(const MultiPoly& p, const Rational& c);

}  // namespace g2cover
