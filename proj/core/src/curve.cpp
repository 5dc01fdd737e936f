#include "g2cover/curve.hpp"

#include <gmp.h>

#include <map>
#include <string>

#include "g2cover/errors.hpp"
#include "g2cover/polyops.hpp"
#include "g2cover/tables.hpp"

namespace g2cover {

namespace {

void require_valid_scalars(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) fail(Errc::ExcludedParameter, "excluded parameter: a = 0");
  if (b.is_zero()) fail(Errc::ExcludedParameter, "excluded parameter: b = 0");
  if ((a + b + Scalar(1)).is_zero())
    fail(Errc::ExcludedParameter, "excluded parameter: a + b + 1 = 0");
  if ((a + a + Scalar(1)).is_zero())
    fail(Errc::ExcludedParameter, "excluded parameter: 2a + 1 = 0");
}

// F polynomial at fixed parameters, as a dense univariate over Scalar.
UniPoly specialize(const MultiPoly& f, const Scalar& a, const Scalar& b) {
  std::map<Var, Scalar> at = {{Var::a, a}, {Var::b, b}};
  std::vector<Scalar> out;
  for (const auto& c : f.coeffs_wrt(Var::X)) out.push_back(c.eval(at));
  return UniPoly(std::move(out));
}

void check_root(const UniPoly& f4, const Scalar& z) {
  if (!f4.eval(z).is_zero())
    fail(Errc::InvalidRoot, "z is not a root of F4");
  if (z == Scalar(1))
    fail(Errc::InvalidRoot, "z = 1 lies over the branch point t = 1");
}

// Exact division by (x - z); construction-failure on a nonzero remainder.
UniPoly divide_linear_exact(const UniPoly& f, const Scalar& z,
                            const char* what) {
  int n = f.degree();
  std::vector<Scalar> q(static_cast<size_t>(n));
  Scalar acc = f.coeff(n);
  for (int k = n - 1; k >= 0; --k) {
    q[static_cast<size_t>(k)] = acc;
    acc = f.coeff(k) + z * acc;
  }
  if (!acc.is_zero()) fail(Errc::ConstructionFailure, what);
  return UniPoly(std::move(q));
}

// ---- generic division over K = Q(a,b)[z] / (F4) -------------------------
//
// Elements are kept in the cleared form (p + q*z) / A^e with A = 2a+1 the
// leading coefficient of F4, so that reducing z^2 = -(B z + C)/A never
// leaves the polynomial ring.

struct KElem {
  MultiPoly p, q;
  unsigned e = 0;
};

struct F4Coeffs {
  MultiPoly A, B, C;
};

const F4Coeffs& f4_coeffs() {
  static const F4Coeffs k = [] {
    const MultiPoly& f4 = f4_generic();
    return F4Coeffs{f4.coeff_wrt(Var::X, 2), f4.coeff_wrt(Var::X, 1),
                    f4.coeff_wrt(Var::X, 0)};
  }();
  return k;
}

KElem raise_to(KElem x, unsigned e) {
  const MultiPoly& A = f4_coeffs().A;
  while (x.e < e) {
    x.p = x.p * A;
    x.q = x.q * A;
    ++x.e;
  }
  return x;
}

KElem kadd(const KElem& x, const KElem& y) {
  unsigned e = std::max(x.e, y.e);
  KElem xs = raise_to(x, e);
  KElem ys = raise_to(y, e);
  return {xs.p + ys.p, xs.q + ys.q, e};
}

KElem kmul_z(const KElem& x) {
  const auto& f4 = f4_coeffs();
  return {-(f4.C * x.q), f4.A * x.p - f4.B * x.q, x.e + 1};
}

KElem kscale(const KElem& x, const MultiPoly& m) {
  return {x.p * m, x.q * m, x.e};
}

// Horner evaluation of a z-polynomial (coefficients in Q[a,b]) in K.
KElem k_of_zpoly(const std::vector<MultiPoly>& c) {
  KElem r{c.back(), MultiPoly(), 0};
  for (size_t k = c.size() - 1; k-- > 0;) r = kadd(kmul_z(r), KElem{c[k], MultiPoly(), 0});
  return r;
}

// Synthetic division of an x-polynomial with K coefficients by (x - z).
std::vector<KElem> divide_linear_k(const std::vector<KElem>& c) {
  size_t n = c.size() - 1;
  std::vector<KElem> q(n);
  KElem acc = c[n];
  for (size_t k = n; k-- > 0;) {
    q[k] = acc;
    acc = kadd(c[k], kmul_z(acc));
  }
  if (!acc.p.is_zero() || !acc.q.is_zero())
    fail(Errc::ConstructionFailure, "generic quotient division left a remainder");
  return q;
}

}  // namespace

const MultiPoly& g3_generic() {
  static const MultiPoly result = [] {
    const MultiPoly x = MultiPoly::variable(Var::x);
    const MultiPoly z = MultiPoly::variable(Var::z);
    MultiPoly xf1sq = MultiPoly::variable(Var::X) * f1_generic() * f1_generic();
    MultiPoly f2sq = f2_generic() * f2_generic();
    std::vector<MultiPoly> nc = xf1sq.coeffs_wrt(Var::X);  // degree 5
    std::vector<MultiPoly> dc = f2sq.coeffs_wrt(Var::X);   // degree 4
    KElem s2 = k_of_zpoly(dc);  // F2(z)^2
    KElem s1 = k_of_zpoly(nc);  // z F1(z)^2
    std::vector<KElem> G(6);
    for (size_t k = 0; k < 6; ++k) {
      KElem lhs = kscale(s2, nc[k]);
      KElem rhs = kscale(s1, k < dc.size() ? dc[k] : MultiPoly());
      rhs.p = -rhs.p;
      rhs.q = -rhs.q;
      G[k] = kadd(lhs, rhs);
    }
    std::vector<KElem> q = divide_linear_k(divide_linear_k(G));
    unsigned e = 0;
    for (const auto& c : q) e = std::max(e, c.e);
    MultiPoly sum;
    for (size_t k = 0; k < q.size(); ++k) {
      KElem c = raise_to(q[k], e);
      sum += (c.p + c.q * z) * MultiPoly::variable(Var::x, static_cast<uint16_t>(k));
    }
    // strip the common polynomial factor: the clearing only introduces powers
    // of the two leading factors 2a+1 and a, so trial division suffices (and
    // avoids a multivariate gcd on the full coefficients)
    for (const MultiPoly& f :
         {f4_coeffs().A, MultiPoly::variable(Var::a)}) {
      while (true) {
        auto stripped = exact_divide(sum, f);
        if (!stripped) break;
        sum = std::move(*stripped);
      }
    }
    sum = sum.integer_primitive();
    // orient so the cubic coefficient has positive leading term
    if (sum.coeff_wrt(Var::x, 3).leading_coeff() < Rational(0)) sum = -sum;
    return sum;
  }();
  return result;
}

UniPoly g3_oracle(const Scalar& a, const Scalar& b, const Scalar& z) {
  require_valid_scalars(a, b);
  UniPoly f1 = specialize(f1_generic(), a, b);
  UniPoly f2 = specialize(f2_generic(), a, b);
  UniPoly f4 = specialize(f4_generic(), a, b);
  check_root(f4, z);
  Scalar s1 = f1.eval(z), s2 = f2.eval(z);
  UniPoly x({Scalar(0), Scalar(1)});
  UniPoly G = (s2 * s2) * (x * f1 * f1) - (z * s1 * s1) * (f2 * f2);
  UniPoly q1 = divide_linear_exact(G, z, "(x - z) does not divide the quotient numerator");
  UniPoly q2 = divide_linear_exact(q1, z, "(x - z)^2 does not divide the quotient numerator");
  return q2;
}

UniPoly g3_from_paper(const Scalar& a, const Scalar& b, const Scalar& z) {
  require_valid_scalars(a, b);
  UniPoly f4 = specialize(f4_generic(), a, b);
  check_root(f4, z);
  std::map<Var, Scalar> at = {{Var::a, a}, {Var::b, b}, {Var::z, z}};
  std::vector<Scalar> c;
  for (const auto& coeff : tables::g3_display_coeffs()) c.push_back(coeff.eval(at));
  return UniPoly(std::move(c));
}

Genus2Curve curve_from_cover(const Scalar& a, const Scalar& b, const Scalar& z) {
  UniPoly g3 = g3_oracle(a, b, z);
  UniPoly x({Scalar(0), Scalar(1)});
  UniPoly xm1({Scalar(-1), Scalar(1)});
  UniPoly f = x * xm1 * g3;
  if (f.degree() != 5)
    fail(Errc::SingularModel, "model degenerated below degree 5");
  if (uni_discriminant(f).is_zero())
    fail(Errc::SingularModel, "x(x-1) g3(x) has a repeated root");
  return Genus2Curve{f.coeffs()};
}

Scalar legendre_j(const Scalar& lambda) {
  Scalar den = lambda * lambda * (lambda - Scalar(1)) * (lambda - Scalar(1));
  if (den.is_zero())
    fail(Errc::DegenerateSubcover, "lambda in {0, 1} has no j-invariant");
  Scalar n = lambda * lambda - lambda + Scalar(1);
  return Scalar(Rational(256)) * n * n * n / den;
}

EllipticSubcover subcover(const Scalar& a, const Scalar& b, const Scalar& z) {
  require_valid_scalars(a, b);
  UniPoly f1 = specialize(f1_generic(), a, b);
  UniPoly f2 = specialize(f2_generic(), a, b);
  UniPoly f4 = specialize(f4_generic(), a, b);
  check_root(f4, z);
  Scalar den = f2.eval(z);
  if (den.is_zero())
    fail(Errc::DegenerateSubcover, "F2(z) = 0: lambda escapes to infinity");
  Scalar s1 = f1.eval(z);
  Scalar lambda = z * s1 * s1 / (den * den);
  if (lambda.is_zero() || lambda == Scalar(1))
    fail(Errc::DegenerateSubcover,
         "phi(z) = " + lambda.str() + " is a degenerate branch point");
  return EllipticSubcover{lambda, legendre_j(lambda)};
}

namespace {

void require_factors_nonzero(
    const Rational& a,
    const std::vector<std::pair<std::string, MultiPoly>>& factors) {
  for (const auto& [name, f] : factors) {
    if (f.eval_partial({{Var::a, a}}).constant_value().is_zero())
      fail(Errc::ExcludedParameter, "excluded parameter: " + name + " = 0");
  }
}

}  // namespace

std::pair<Genus2Curve, EllipticSubcover> case1_curve(const Rational& a) {
  const MultiPoly va = MultiPoly::variable(Var::a);
  const std::vector<std::pair<std::string, MultiPoly>> excluded = {
      {"a", va},
      {"a - 2", va - 2},
      {"a + 2", va + 2},
      {"2a + 1", 2 * va + 1},
  };
  require_factors_nonzero(a, excluded);
  Rational b = a * a * Rational(1, 4);
  Scalar z = tables::case1().z.eval({{Var::a, Scalar(a)}});
  return {curve_from_cover(a, b, z), subcover(a, b, z)};
}

std::pair<Genus2Curve, EllipticSubcover> case2_curve(const Rational& a) {
  const MultiPoly va = MultiPoly::variable(Var::a);
  const std::vector<std::pair<std::string, MultiPoly>> excluded = {
      {"a", va},          {"9a - 8", 9 * va - 8}, {"a + 8", va + 8},
      {"2a + 1", 2 * va + 1}, {"3a - 1", 3 * va - 1}, {"a - 1", va - 1},
      {"a - 2", va - 2},
  };
  require_factors_nonzero(a, excluded);
  std::map<Var, Scalar> at = {{Var::a, Scalar(a)}};
  const auto& mc = tables::case2_model_coeffs();
  Scalar b3 = mc[0].eval(at), b2 = mc[1].eval(at), b1 = mc[2].eval(at);
  // the displayed constant coefficient has the wrong sign for the model to
  // be the x(x-1)-completed cover curve; the corrected model negates it
  // (the display itself is preserved in tables::case2_model_coeffs)
  Scalar b0 = -mc[3].eval(at);
  UniPoly cubic({b0, b1, b2, b3});
  UniPoly x({Scalar(0), Scalar(1)});
  UniPoly xm1({Scalar(-1), Scalar(1)});
  UniPoly f = x * xm1 * cubic;
  if (f.degree() != 5 || uni_discriminant(f).is_zero())
    fail(Errc::SingularModel, "specialized model is singular");
  Scalar z = tables::case2().z.eval(at);
  return {Genus2Curve{f.coeffs()}, subcover(a, a - Rational(1), z)};
}

std::pair<Genus2Curve, EllipticSubcover> case3_curve(const Rational& a) {
  require_factors_nonzero(a, tables::case3_nonvanishing());
  Scalar b = quadratic_roots(case3_condition(), Var::b, {{Var::a, a}}).first;
  std::map<Var, Scalar> at = {{Var::a, Scalar(a)}, {Var::b, b}};
  Scalar z = tables::case3_z().eval(at);
  Scalar c = tables::case3_quadratic_constant().eval({{Var::a, Scalar(a)}});
  UniPoly x({Scalar(0), Scalar(1)});
  UniPoly xm1({Scalar(-1), Scalar(1)});
  UniPoly quad({-c, Scalar(-1), Scalar(1)});
  UniPoly f = x * xm1 * UniPoly({-z, Scalar(1)}) * quad;
  if (uni_discriminant(f).is_zero())
    fail(Errc::SingularModel, "specialized model is singular");
  return {Genus2Curve{f.coeffs()}, subcover(a, b, z)};
}

Rational y3bar_j() {
  const MultiPoly& cond = case3_condition();
  MultiPoly A = cond.coeff_wrt(Var::b, 2);
  MultiPoly B = cond.coeff_wrt(Var::b, 1);
  MultiPoly C = cond.coeff_wrt(Var::b, 0);
  // sanity: the displayed rational points of the double cover
  for (long pb : {1L}) {
    for (long pa : {-2L, 2L}) {
      if (!cond.eval_partial({{Var::a, Rational(pa)}, {Var::b, Rational(pb)}}).is_zero())
        fail(Errc::ConstructionFailure, "double-root condition lost its rational points");
    }
  }
  // radicand of the quadratic formula for b, a polynomial in a of degree 3
  // (a degenerate quartic); classical quartic invariants
  MultiPoly rad = B * B - 4 * A * C;
  Rational q[5];
  for (int k = 0; k <= 4; ++k) {
    MultiPoly c = rad.coeff_wrt(Var::a, k);
    q[k] = c.is_zero() ? Rational(0) : c.constant_value();
  }
  Rational I = 12 * q[4] * q[0] - 3 * q[3] * q[1] + q[2] * q[2];
  Rational J = 72 * q[4] * q[2] * q[0] - 27 * q[4] * q[1] * q[1] -
               27 * q[3] * q[3] * q[0] + 9 * q[3] * q[2] * q[1] -
               2 * q[2] * q[2] * q[2];
  Rational i3 = I * I * I;
  Rational jq = Rational(6912) * i3 / (4 * i3 - J * J);
  // independent route: translate the rational point over a = -2 to the
  // origin, clear the cubic's leading coefficient into a Weierstrass model
  // Y^2 = X^3 + a2 X^2 + a4 X + a6, and read j off c4/c6
  MultiPoly shifted = rad.compose_affine(Var::a, Rational(1), Rational(-2));
  Rational y2 = shifted.coeff_wrt(Var::a, 0).constant_value();
  Integer y2n = y2.num(), y2d = y2.den();
  if (!mpz_perfect_square_p(y2n.get_mpz_t()) || !mpz_perfect_square_p(y2d.get_mpz_t()))
    fail(Errc::ConstructionFailure, "radicand is not a square over a = -2");
  Rational c3 = shifted.coeff_wrt(Var::a, 3).constant_value();
  Rational a2 = shifted.coeff_wrt(Var::a, 2).constant_value();
  Rational a4 = shifted.coeff_wrt(Var::a, 1).constant_value() * c3;
  Rational a6 = y2 * c3 * c3;
  Rational b2 = 4 * a2, b4 = 2 * a4, b6 = 4 * a6;
  Rational c4 = b2 * b2 - 24 * b4;
  Rational c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6;
  Rational c43 = c4 * c4 * c4;
  Rational jw = Rational(1728) * c43 / (c43 - c6 * c6);
  if (jq != jw)
    fail(Errc::ConstructionFailure, "quartic-invariant and Weierstrass reductions disagree");
  return jq;
}

}  // namespace g2cover
