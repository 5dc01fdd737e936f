#include "g2cover/cover.hpp"

#include "g2cover/errors.hpp"
#include "g2cover/polyops.hpp"

namespace g2cover {

namespace {

MultiPoly V(Var v, int p = 1) { return MultiPoly::variable(v, static_cast<uint16_t>(p)); }

MultiPoly build_f1() {
  MultiPoly X = V(Var::X), A = V(Var::a), B = V(Var::b);
  return X * X + (Rational(2) * A + Rational(2) * B + A * A) * X + Rational(2) * A * B + B * B;
}

MultiPoly build_f2() {
  MultiPoly X = V(Var::X), A = V(Var::a), B = V(Var::b);
  return (Rational(2) * A + MultiPoly(1)) * X * X + (A * A + Rational(2) * A * B + Rational(2) * B) * X +
         B * B;
}

MultiPoly build_f3() {
  MultiPoly X = V(Var::X), A = V(Var::a), B = V(Var::b);
  return X * X - (A * A - Rational(2) * B) * X + B * B;
}

MultiPoly build_f4() {
  MultiPoly X = V(Var::X), A = V(Var::a), B = V(Var::b);
  return (Rational(2) * A + MultiPoly(1)) * X * X +
         (Rational(2) * B - Rational(2) * B * A - Rational(2) * A - A * A) * X + B * B +
         Rational(2) * A * B;
}

}  // namespace

const char* ramification_name(RamificationCase c) {
  switch (c) {
    case RamificationCase::NonDegenerate: return "NonDegenerate";
    case RamificationCase::I: return "I";
    case RamificationCase::II: return "II";
    case RamificationCase::III: return "III";
  }
  return "?";
}

const MultiPoly& f1_generic() {
  static const MultiPoly p = build_f1();
  return p;
}
const MultiPoly& f2_generic() {
  static const MultiPoly p = build_f2();
  return p;
}
const MultiPoly& f3_generic() {
  static const MultiPoly p = build_f3();
  return p;
}
const MultiPoly& f4_generic() {
  static const MultiPoly p = build_f4();
  return p;
}

const RatFunc& phi_generic() {
  static const RatFunc phi = [] {
    MultiPoly X = V(Var::X);
    return RatFunc(X * f1_generic() * f1_generic(), f2_generic() * f2_generic());
  }();
  return phi;
}

const MultiPoly& case3_condition() {
  // Disc_X(F4) = a * (this quadratic in b); zero set = the case-III locus
  static const MultiPoly p = [] {
    MultiPoly c = *exact_divide(discriminant(f4_generic(), Var::X), V(Var::a));
    return c;
  }();
  return p;
}

const std::vector<std::pair<std::string, MultiPoly>>& delta_factors() {
  static const std::vector<std::pair<std::string, MultiPoly>> f = [] {
    MultiPoly A = V(Var::a), B = V(Var::b), one(1);
    std::vector<std::pair<std::string, MultiPoly>> v;
    v.emplace_back("a+b+1", A + B + one);
    v.emplace_back("b", B);
    v.emplace_back("2a+1", Rational(2) * A + one);
    v.emplace_back("a-b-1", A - B - one);
    v.emplace_back("a^2-4b", A * A - Rational(4) * B);
    v.emplace_back("a^2+4a+4b+4", A * A + Rational(4) * A + Rational(4) * B + Rational(4) * one);
    v.emplace_back("a^2+4ab+4b^2+4b",
                   A * A + Rational(4) * A * B + Rational(4) * B * B + Rational(4) * B);
    v.emplace_back("a^3-2ab-2b^2-2b",
                   A * A * A - Rational(2) * A * B - Rational(2) * B * B - Rational(2) * B);
    v.emplace_back("2a+b", Rational(2) * A + B);
    return v;
  }();
  return f;
}

void require_valid(const CoverParams& p) {
  if (p.a.is_zero()) fail(Errc::ExcludedParameter, "excluded parameter: a = 0");
  if (p.b.is_zero()) fail(Errc::ExcludedParameter, "excluded parameter: b = 0");
  if ((p.a + p.b + Rational(1)).is_zero())
    fail(Errc::ExcludedParameter, "excluded parameter: a+b+1 = 0");
  if ((Rational(2) * p.a + Rational(1)).is_zero())
    fail(Errc::ExcludedParameter, "excluded parameter: 2a+1 = 0");
}

namespace {

std::map<Var, Rational> at(const CoverParams& p) {
  return {{Var::a, p.a}, {Var::b, p.b}};
}

}  // namespace

CoverData build_cover(const CoverParams& p) {
  require_valid(p);
  CoverData c;
  c.params = p;
  auto pt = at(p);
  c.F1 = f1_generic().eval_partial(pt);
  c.F2 = f2_generic().eval_partial(pt);
  c.F3 = f3_generic().eval_partial(pt);
  c.F4 = f4_generic().eval_partial(pt);
  MultiPoly X = V(Var::X);
  c.phi = RatFunc(X * c.F1 * c.F1, c.F2 * c.F2);
  if (c.phi.num().degree(Var::X) != 5 || c.phi.den().degree(Var::X) != 4)
    fail(Errc::ConstructionFailure, "cover degenerates: deg phi < 5 after reduction");
  c.case_tag = classify_case(p);
  return c;
}

CheckReport verify_square_identity(const CoverData& c) {
  CheckReport r;
  r.check = "square-identity";
  MultiPoly X = V(Var::X), one(1);
  MultiPoly sym = X * f1_generic() * f1_generic() - (X - one) * f3_generic() * f3_generic() -
                  f2_generic() * f2_generic();
  MultiPoly num = X * c.F1 * c.F1 - (X - one) * c.F3 * c.F3 - c.F2 * c.F2;
  r.pass = sym.is_zero() && num.is_zero();
  r.residual = sym.str();
  r.note("residual_at_params", num.str());
  if (!r.pass) fail(Errc::IdentityViolation, "square identity residual: " + sym.str() + " / " + num.str());
  return r;
}

namespace {

// phi = n/d with n = X*f1^2, d = f2^2. The claim phi' = c * f1*f3*f4 / f2^3
// is equivalent to n'd - nd' == c * f1*f3*f4*f2 (both sides of X-degree 8),
// which needs no gcd reduction, only one exact division.
std::optional<Rational> factorization_constant(const MultiPoly& f1, const MultiPoly& f2,
                                               const MultiPoly& f3, const MultiPoly& f4) {
  MultiPoly X = V(Var::X);
  MultiPoly n = X * f1 * f1, d = f2 * f2;
  MultiPoly lhs = n.derivative(Var::X) * d - n * d.derivative(Var::X);
  auto q = exact_divide(lhs, f1 * f3 * f4 * f2);
  if (!q || !q->is_constant() || q->is_zero()) return std::nullopt;
  return q->constant_value();
}

}  // namespace

CheckReport derivative_factorization(const CoverData& c) {
  CheckReport r;
  r.check = "derivative-factorization";
  auto sym = factorization_constant(f1_generic(), f2_generic(), f3_generic(), f4_generic());
  auto num = factorization_constant(c.F1, c.F2, c.F3, c.F4);
  r.pass = sym.has_value() && num.has_value();
  r.residual = r.pass ? "0" : "quotient not constant";
  if (sym) r.note("constant_generic", sym->str());
  if (num) r.note("constant_at_params", num->str());
  if (!r.pass) fail(Errc::IdentityViolation, "derivative factorization failed: " + r.residual);
  return r;
}

RamificationCase classify_case(const CoverParams& p) {
  // Conditions are tested in order I, II, III; the tag is the most
  // degenerate (last) one satisfied. Overlaps happen only at parameters the
  // construction excludes anyway, e.g. (-2, 1) satisfies both 4b = a^2 and
  // the case-III condition while sitting on a+b+1 = 0.
  auto all = satisfied_cases(p);
  return all.empty() ? RamificationCase::NonDegenerate : all.back();
}

std::vector<RamificationCase> satisfied_cases(const CoverParams& p) {
  std::vector<RamificationCase> out;
  if (Rational(4) * p.b == p.a * p.a) out.push_back(RamificationCase::I);
  if (p.b == p.a - Rational(1)) out.push_back(RamificationCase::II);
  auto c3 = case3_condition().eval_partial(at(p));
  if (c3.is_zero()) out.push_back(RamificationCase::III);
  return out;
}

Rational delta(const CoverParams& p) {
  Rational prod(1);
  auto pt = at(p);
  for (const auto& [name, poly] : delta_factors()) prod = prod * poly.eval_partial(pt).constant_value();
  return prod;
}

namespace {

CoverParams apply_sigma(const CoverParams& p) {
  if (p.b.is_zero()) fail(Errc::ExcludedParameter, "sigma undefined: b = 0");
  return {p.a / p.b, Rational(1) / p.b};
}

CoverParams apply_tau(const CoverParams& p) {
  return {p.a, -p.a - p.b - Rational(1)};
}

}  // namespace

CoverParams s3_on_params(const CoverParams& p, const std::string& word) {
  CoverParams cur = p;
  for (char ch : word) {
    if (ch == 's')
      cur = apply_sigma(cur);
    else if (ch == 't')
      cur = apply_tau(cur);
    else
      fail(Errc::InvalidInput, std::string("unknown S3 letter '") + ch + "' (expected 's' or 't')");
    if (cur.a.is_zero() || cur.b.is_zero())
      fail(Errc::ExcludedParameter, "S3 action lands on an excluded parameter (a or b = 0)");
  }
  return cur;
}

Triple s3_on_triple(const Triple& t, const std::string& word) {
  Triple cur = t;
  for (char ch : word) {
    if (ch == 's') {
      CoverParams img = apply_sigma({cur.a, cur.b});
      if (cur.z.is_zero()) fail(Errc::ExcludedParameter, "sigma undefined on the triple: z = 0");
      cur = {img.a, img.b, cur.z.inverse()};
    } else if (ch == 't') {
      CoverParams img = apply_tau({cur.a, cur.b});
      cur = {img.a, img.b, Scalar(Rational(1)) - cur.z};
    } else {
      fail(Errc::InvalidInput, std::string("unknown S3 letter '") + ch + "' (expected 's' or 't')");
    }
    if (cur.a.is_zero() || cur.b.is_zero())
      fail(Errc::ExcludedParameter, "S3 action lands on an excluded parameter (a or b = 0)");
  }
  return cur;
}

const std::vector<std::string>& s3_words() {
  static const std::vector<std::string> w = {"", "s", "t", "st", "ts", "sts"};
  return w;
}

std::pair<RatFunc, RatFunc> uv_generic() {
  MultiPoly A = V(Var::a), B = V(Var::b), one(1);
  MultiPoly den = B * (A + B + one);
  RatFunc u(Rational(2) * A * (A * B + B * B + B + A + one), den);
  RatFunc v(A * A * A, den);
  return {u, v};
}

std::pair<Rational, Rational> uv_invariants(const CoverParams& p) {
  Rational den = p.b * (p.a + p.b + Rational(1));
  if (den.is_zero()) fail(Errc::ExcludedParameter, "u, v undefined: b(a+b+1) = 0");
  Rational u = Rational(2) * p.a * (p.a * p.b + p.b * p.b + p.b + p.a + Rational(1)) / den;
  Rational v = p.a.pow(3) / den;
  return {u, v};
}

F4Roots f4_roots(const CoverParams& p) {
  if ((Rational(2) * p.a + Rational(1)).is_zero())
    fail(Errc::ExcludedParameter, "F4 degenerates: 2a+1 = 0");
  F4Roots out;
  out.roots = quadratic_roots(f4_generic(), Var::X, at(p));
  Scalar one{Rational(1)};
  out.first_is_one = out.roots.first == one;
  out.second_is_one = out.roots.second == one;
  return out;
}

}  // namespace g2cover
