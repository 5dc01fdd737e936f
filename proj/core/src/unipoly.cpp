#include "g2cover/unipoly.hpp"

#include <sstream>

#include "g2cover/errors.hpp"

namespace g2cover {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(const Scalar& c) : c_{c} { normalize(); }

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p, Var v) {
  for (size_t i = 0; i < kNumVars; ++i)
    if (static_cast<Var>(i) != v && p.uses(static_cast<Var>(i)))
      fail(Errc::InvalidInput, "polynomial is not univariate in the requested variable");
  std::vector<Scalar> c;
  for (const auto& part : p.coeffs_wrt(v)) c.emplace_back(part.is_zero() ? Rational(0) : part.constant_value());
  return UniPoly(std::move(c));
}

Scalar UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(Rational(0));
  return c_[static_cast<size_t>(i)];
}

const Scalar& UniPoly::lc() const {
  if (c_.empty()) fail(Errc::InvalidInput, "leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly operator+(const UniPoly& f, const UniPoly& g) {
  std::vector<Scalar> c(std::max(f.c_.size(), g.c_.size()), Scalar(Rational(0)));
  for (size_t i = 0; i < f.c_.size(); ++i) c[i] = c[i] + f.c_[i];
  for (size_t i = 0; i < g.c_.size(); ++i) c[i] = c[i] + g.c_[i];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& f, const UniPoly& g) { return f + (-g); }

UniPoly operator*(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero()) return UniPoly();
  std::vector<Scalar> c(f.c_.size() + g.c_.size() - 1, Scalar(Rational(0)));
  for (size_t i = 0; i < f.c_.size(); ++i)
    for (size_t j = 0; j < g.c_.size(); ++j) c[i + j] = c[i + j] + f.c_[i] * g.c_[j];
  return UniPoly(std::move(c));
}

UniPoly operator*(const Scalar& s, const UniPoly& f) {
  std::vector<Scalar> c = f.c_;
  for (auto& x : c) x = s * x;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Scalar> c;
  for (size_t i = 1; i < c_.size(); ++i) c.push_back(Scalar(Rational(static_cast<long>(i))) * c_[i]);
  return UniPoly(std::move(c));
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc{Rational(0)};
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = Scalar(Rational(1)) / lc();
  return inv * *this;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) fail(Errc::InvalidInput, "division by zero polynomial");
  UniPoly rem = f;
  std::vector<Scalar> quot;
  int dg = g.degree();
  if (f.degree() >= dg) quot.assign(static_cast<size_t>(f.degree() - dg) + 1, Scalar(Rational(0)));
  Scalar inv = Scalar(Rational(1)) / g.lc();
  while (!rem.is_zero() && rem.degree() >= dg) {
    int k = rem.degree() - dg;
    Scalar q = rem.lc() * inv;
    quot[static_cast<size_t>(k)] = q;
    std::vector<Scalar> sub(static_cast<size_t>(k), Scalar(Rational(0)));
    sub.insert(sub.end(), g.c_.begin(), g.c_.end());
    UniPoly shifted{std::move(sub)};
    rem = rem - q * shifted;
  }
  return {UniPoly(std::move(quot)), std::move(rem)};
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    out << c_[i].str();
    if (i > 0) out << "*" << var;
    if (i > 1) out << "^" << i;
    first = false;
  }
  return out.str();
}

UniPoly uni_gcd(const UniPoly& f, const UniPoly& g) {
  UniPoly a = f, b = g;
  while (!b.is_zero()) {
    UniPoly r = UniPoly::divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Scalar uni_resultant(const UniPoly& f, const UniPoly& g) {
  // Res(f, g) via the Euclidean recursion over a field:
  // Res(f, g) = lc(g)^(deg f - deg r) * (-1)^(deg f * deg g) * Res(g, r)
  if (f.is_zero() || g.is_zero()) return Scalar(Rational(0));
  int df = f.degree(), dg = g.degree();
  if (df == 0 && dg == 0) return Scalar(Rational(1));
  if (df < dg) {
    Scalar s = uni_resultant(g, f);
    return (static_cast<long>(df) * dg) % 2 == 1 ? -s : s;
  }
  if (dg == 0) return g.lc().pow(df);
  UniPoly r = UniPoly::divrem(f, g).second;
  if (r.is_zero()) return Scalar(Rational(0));
  Scalar tail = uni_resultant(g, r);
  Scalar s = g.lc().pow(df - r.degree()) * tail;
  return (static_cast<long>(df) * dg) % 2 == 1 ? -s : s;
}

Scalar uni_discriminant(const UniPoly& f) {
  int n = f.degree();
  if (n < 2) fail(Errc::InvalidInput, "discriminant needs degree >= 2");
  Scalar res = uni_resultant(f, f.derivative());
  Scalar d = res / f.lc();
  return (static_cast<long>(n) * (n - 1) / 2) % 2 == 1 ? -d : d;
}

}  // namespace g2cover
