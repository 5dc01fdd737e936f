#include "g2cover/ratfunc.hpp"

#include "g2cover/errors.hpp"
#include "g2cover/polyops.hpp"

namespace g2cover {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::InvalidInput, "rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  MultiPoly g = poly_gcd(num_, den_);
  if (!(g == MultiPoly(1))) {
    num_ = *exact_divide(num_, g);
    den_ = *exact_divide(den_, g);
  }
  MultiPoly dp = den_.integer_primitive();
  Rational scale = den_.leading_coeff() / dp.leading_coeff();
  if (!scale.is_one()) {
    num_ = (Rational(1) / scale) * num_;
    den_ = std::move(dp);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator-(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
}

RatFunc operator*(const RatFunc& f, const RatFunc& g) {
  return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
}

RatFunc operator/(const RatFunc& f, const RatFunc& g) {
  if (g.is_zero()) fail(Errc::InvalidInput, "division by the zero rational function");
  return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(Rational(1));
  if (e < 0) {
    if (is_zero()) fail(Errc::InvalidInput, "negative power of zero");
    return RatFunc(den_, num_).pow(-e);
  }
  // num and den are coprime, so powers need no re-reduction
  RatFunc r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  MultiPoly dp = r.den_.integer_primitive();
  Rational scale = r.den_.leading_coeff() / dp.leading_coeff();
  if (!scale.is_one()) {
    r.num_ = (Rational(1) / scale) * r.num_;
    r.den_ = std::move(dp);
  }
  return r;
}

RatFunc RatFunc::derivative(Var v) const {
  return RatFunc(num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_);
}

RatFunc substitute(const MultiPoly& p, const std::map<Var, RatFunc>& image) {
  RatFunc acc;
  for (const auto& [mono, coeff] : p.terms()) {
    RatFunc term{Rational(coeff)};
    for (size_t i = 0; i < kNumVars; ++i) {
      if (mono[i] == 0) continue;
      Var var = static_cast<Var>(i);
      auto it = image.find(var);
      RatFunc base = it != image.end() ? it->second : RatFunc(MultiPoly::variable(var));
      term *= base.pow(mono[i]);
    }
    acc += term;
  }
  return acc;
}

RatFunc RatFunc::substitute(const std::map<Var, RatFunc>& image) const {
  return g2cover::substitute(num_, image) / g2cover::substitute(den_, image);
}

Scalar RatFunc::eval(const std::map<Var, Scalar>& point) const {
  Scalar d = den_.eval(point);
  if (d.is_zero()) fail(Errc::InvalidInput, "denominator vanishes at the evaluation point");
  return num_.eval(point) / d;
}

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace g2cover
