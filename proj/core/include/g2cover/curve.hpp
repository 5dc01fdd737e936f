#pragma once

#include <utility>
#include <vector>

#include "g2cover/cover.hpp"
#include "g2cover/unipoly.hpp"

namespace g2cover {

// y^2 = f(x) with deg f in {5, 6} and f squarefree. A quintic f means one
// Weierstrass point sits at infinity; models are kept in whichever degree
// the construction produces.
struct Genus2Curve {
  std::vector<Scalar> f_coeffs;  // index = power of x
  int degree() const { return static_cast<int>(f_coeffs.size()) - 1; }
  UniPoly f() const { return UniPoly(f_coeffs); }
};

// Elliptic quotient in Legendre form s^2 = t(t-1)(t-lambda).
struct EllipticSubcover {
  Scalar lambda;
  Scalar j;
};

// j = 2^8 (l^2 - l + 1)^3 / (l^2 (l - 1)^2).
Scalar legendre_j(const Scalar& lambda);

// The cubic completing y^2 = x(x-1) g3(x), by the division construction:
// g3 = (x F1(x)^2 F2(z)^2 - z F1(z)^2 F2(x)^2) / (x - z)^2, both linear
// divisions exact. Preconditions: valid (a, b) parameters, F4(z) = 0 and
// z != 1. This is the authoritative constructor; the displayed coefficient
// table is kept only as a cross-check (tables::g3_display_coeffs).
UniPoly g3_oracle(const Scalar& a, const Scalar& b, const Scalar& z);

// The displayed cubic evaluated at (a, b, z); same preconditions. Known to
// differ from the oracle by an overall unit of Q(a, b) and, in the constant
// coefficient, by the dropped malformed monomial.
UniPoly g3_from_paper(const Scalar& a, const Scalar& b, const Scalar& z);

// The division quotient computed once over Q(a,b)[z]/(F4), denominators
// cleared and content removed: a polynomial in (x, z, a, b), linear in z.
const MultiPoly& g3_generic();

// The quintic model f = x(x-1) g3 with g3 from g3_oracle.
Genus2Curve curve_from_cover(const Scalar& a, const Scalar& b, const Scalar& z);

// lambda = phi(z) exactly, plus its j. Degenerate-subcover error when
// phi(z) lands in {0, 1} or F2(z) = 0 (lambda escapes to infinity).
EllipticSubcover subcover(const Scalar& a, const Scalar& b, const Scalar& z);

// One-parameter families: 4b = a^2, b = a - 1, and Disc_X(F4) = 0. Each
// returns the specialized model together with its subcover at the family's
// displayed z. The third family's parameter b is the first root of the
// double-root condition viewed as a quadratic in b, so its model and
// subcover generally live in a quadratic extension.
std::pair<Genus2Curve, EllipticSubcover> case1_curve(const Rational& a);
std::pair<Genus2Curve, EllipticSubcover> case2_curve(const Rational& a);
std::pair<Genus2Curve, EllipticSubcover> case3_curve(const Rational& a);

// j-invariant of the genus-1 double cover b -> a cut out by the
// F4-double-root condition: classical quartic invariants of the radicand,
// cross-checked against a Weierstrass reduction at the curve's rational
// point over a = -2. The two routes must agree exactly.
Rational y3bar_j();

}  // namespace g2cover
