#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace g2cover {

using Integer = mpz_class;

// Exact rational scalar. mpq_class already maintains the canonical form
// (gcd 1, positive denominator), which matches the representation the rest
// of the library assumes; this wrapper fixes the construction and
// serialization conventions and keeps GMP types out of call sites.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}             // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const Integer& n, const Integer& d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Parses "p/q" or "p" (optional sign, arbitrary precision). Nullopt on
  // malformed text or zero denominator.
  static std::optional<Rational> parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  Integer num() const { return Integer(v_.get_num()); }
  Integer den() const { return Integer(v_.get_den()); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const;  // "p/q", or "p" when q = 1

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational inverse() const;

  friend Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ + y.v_)); }
  friend Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ - y.v_)); }
  friend Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.v_ * y.v_)); }
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend bool operator!=(const Rational& x, const Rational& y) { return x.v_ != y.v_; }
  friend bool operator<(const Rational& x, const Rational& y) { return x.v_ < y.v_; }
  friend bool operator<=(const Rational& x, const Rational& y) { return x.v_ <= y.v_; }
  friend bool operator>(const Rational& x, const Rational& y) { return x.v_ > y.v_; }
  friend bool operator>=(const Rational& x, const Rational& y) { return x.v_ >= y.v_; }

  Rational pow(long e) const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // Exact square root when this is a square of a rational; nullopt otherwise.
  std::optional<Rational> sqrt() const;

  size_t hash() const;

 private:
  mpq_class v_;
};

inline Rational operator+(long x, const Rational& y) { return Rational(x) + y; }
inline Rational operator*(long x, const Rational& y) { return Rational(x) * y; }

// Largest squarefree divisor d of n (n = d * m^2 with m maximal), sign kept:
// squarefree_part(-12) = -3. Zero maps to zero. Used to normalize the
// quadratic-extension discriminant d in p + q*sqrt(d).
Integer squarefree_part(const Integer& n);

// Exact integer square root when n is a perfect square.
std::optional<Integer> integer_sqrt(const Integer& n);

}  // namespace g2cover
