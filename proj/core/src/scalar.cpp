#include "g2cover/scalar.hpp"

#include "g2cover/errors.hpp"

namespace g2cover {

Scalar::Scalar(QuadExtScalar q) {
  if (q.is_rational())
    v_ = q.p();
  else
    v_ = std::move(q);
}

const Rational& Scalar::rational() const {
  if (!is_rational()) fail(Errc::InvalidInput, "scalar is not rational: " + str());
  return std::get<Rational>(v_);
}

const QuadExtScalar& Scalar::quad() const {
  if (is_rational()) fail(Errc::InvalidInput, "scalar is rational");
  return std::get<QuadExtScalar>(v_);
}

QuadExtScalar Scalar::as_quad() const {
  if (is_rational()) return QuadExtScalar(std::get<Rational>(v_));
  return std::get<QuadExtScalar>(v_);
}

bool Scalar::is_zero() const {
  return is_rational() ? std::get<Rational>(v_).is_zero() : std::get<QuadExtScalar>(v_).is_zero();
}

bool Scalar::is_one() const { return is_rational() && std::get<Rational>(v_).is_one(); }

Scalar Scalar::conjugate() const {
  if (is_rational()) return *this;
  return Scalar(std::get<QuadExtScalar>(v_).conjugate());
}

Scalar Scalar::inverse() const {
  if (is_rational()) return Scalar(std::get<Rational>(v_).inverse());
  return Scalar(std::get<QuadExtScalar>(v_).inverse());
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(-std::get<Rational>(v_));
  return Scalar(-std::get<QuadExtScalar>(v_));
}

namespace {
template <class Op>
Scalar combine(const Scalar& x, const Scalar& y, Op op) {
  if (x.is_rational() && y.is_rational()) return Scalar(op(x.rational(), y.rational()));
  return Scalar(op(x.as_quad(), y.as_quad()));
}
}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a + b; });
}
Scalar operator-(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a - b; });
}
Scalar operator*(const Scalar& x, const Scalar& y) {
  return combine(x, y, [](const auto& a, const auto& b) { return a * b; });
}
Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) fail(Errc::InvalidInput, "scalar division by zero");
  return combine(x, y, [](const auto& a, const auto& b) { return a / b; });
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.is_rational() != y.is_rational()) return false;
  if (x.is_rational()) return x.rational() == y.rational();
  return x.quad() == y.quad();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc(Rational(1));
  Scalar base = *this;
  for (long k = e; k > 0; k >>= 1) {
    if (k & 1) acc = acc * base;
    if (k > 1) base = base * base;
  }
  return acc;
}

std::string Scalar::str() const {
  return is_rational() ? std::get<Rational>(v_).str() : std::get<QuadExtScalar>(v_).str();
}

}  // namespace g2cover
