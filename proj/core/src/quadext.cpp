#include "g2cover/quadext.hpp"

#include "g2cover/errors.hpp"

namespace g2cover {

QuadExtScalar::QuadExtScalar(Rational p, Rational q, Integer d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (q_.is_zero()) {
    d_ = 0;
    return;
  }
  if (sgn(d_) == 0) fail(Errc::InvalidInput, "sqrt(0) context with nonzero q");
  if (squarefree_part(d_) != d_)
    fail(Errc::InvalidInput, "extension discriminant must be squarefree: " + d_.get_str());
  if (d_ == 1) fail(Errc::InvalidInput, "d = 1 is not a quadratic extension");
}

Integer QuadExtScalar::joint_context(const QuadExtScalar& x, const QuadExtScalar& y) {
  if (x.q_.is_zero()) return y.d_;
  if (y.q_.is_zero()) return x.d_;
  if (x.d_ != y.d_)
    fail(Errc::MixedExtension,
         "cannot combine sqrt(" + x.d_.get_str() + ") with sqrt(" + y.d_.get_str() + ")");
  return x.d_;
}

Rational QuadExtScalar::norm() const { return p_ * p_ - q_ * q_ * Rational(d_, Integer(1)); }

QuadExtScalar QuadExtScalar::inverse() const {
  Rational n = norm();
  if (n.is_zero()) fail(Errc::InvalidInput, "inverse of zero element");
  return QuadExtScalar(p_ / n, -q_ / n, d_);
}

QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y) {
  Integer d = QuadExtScalar::joint_context(x, y);
  return QuadExtScalar(x.p_ + y.p_, x.q_ + y.q_, d);
}

QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y) {
  Integer d = QuadExtScalar::joint_context(x, y);
  return QuadExtScalar(x.p_ - y.p_, x.q_ - y.q_, d);
}

QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y) {
  Integer d = QuadExtScalar::joint_context(x, y);
  Rational dr(d, Integer(1));
  return QuadExtScalar(x.p_ * y.p_ + x.q_ * y.q_ * dr, x.p_ * y.q_ + x.q_ * y.p_, d);
}

QuadExtScalar operator/(const QuadExtScalar& x, const QuadExtScalar& y) {
  return x * y.inverse();
}

bool operator==(const QuadExtScalar& x, const QuadExtScalar& y) {
  if (x.p_ != y.p_ || x.q_ != y.q_) return false;
  return x.q_.is_zero() || x.d_ == y.d_;
}

std::string QuadExtScalar::str() const {
  if (is_rational()) return p_.str();
  std::string s = p_.is_zero() ? "" : p_.str();
  if (!s.empty()) s += q_.sign() < 0 ? " - " : " + ";
  else if (q_.sign() < 0) s += "-";
  Rational aq = q_.abs();
  if (!aq.is_one()) s += aq.str() + "*";
  s += "sqrt(" + d_.get_str() + ")";
  return s;
}

}  // namespace g2cover
