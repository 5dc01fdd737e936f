#include "g2cover/igusa.hpp"

#include <vector>

#include "g2cover/errors.hpp"
#include "g2cover/numeric.hpp"
#include "g2cover/unipoly.hpp"

namespace g2cover {

namespace {

// Covariant of the binary form of formal order m, dehomogenized to h(x).
// The order is bookkeeping for the Z-derivative: with F(X,Z) homogeneous of
// degree m and h(x) = F(x,1), Euler's relation gives
//   dF/dX  <->  h'(x)          dF/dZ  <->  m*h(x) - x*h'(x)
// so transvectants never need a second variable.
struct Cov {
  UniPoly h;
  int order;
};

const UniPoly& x_poly() {
  static const UniPoly x({Scalar(0), Scalar(1)});
  return x;
}

Cov diff_x(const Cov& f) { return {f.h.derivative(), f.order - 1}; }

Cov diff_z(const Cov& f) {
  return {Scalar(f.order) * f.h - x_poly() * f.h.derivative(), f.order - 1};
}

Cov partial(Cov f, int ix, int iz) {
  for (int k = 0; k < iz; ++k) f = diff_z(f);
  for (int k = 0; k < ix; ++k) f = diff_x(f);
  return f;
}

long factorial(int n) {
  long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

long binomial(int n, int k) {
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// k-th transvectant with the normalized prefactor (m-k)!(n-k)!/(m!n!)
Cov transvectant(const Cov& f, const Cov& g, int k) {
  UniPoly sum;
  for (int i = 0; i <= k; ++i) {
    UniPoly term = partial(f, k - i, i).h * partial(g, i, k - i).h;
    Scalar c(Rational((i % 2 == 0 ? 1 : -1) * binomial(k, i)));
    sum = sum + c * term;
  }
  Rational pref(factorial(f.order - k) * factorial(g.order - k),
                factorial(f.order) * factorial(g.order));
  return {Scalar(pref) * sum, f.order + g.order - 2 * k};
}

Scalar constant_of(const Cov& c) {
  if (c.h.degree() > 0)
    fail(Errc::ConstructionFailure, "transvectant expected to be constant");
  return c.h.is_zero() ? Scalar(0) : c.h.coeff(0);
}

}  // namespace

IgusaInvariants igusa_from_curve(const Genus2Curve& c) {
  UniPoly f = c.f();
  if (f.is_zero()) fail(Errc::InvalidInput, "zero polynomial has no invariants");
  int deg = f.degree();
  if (deg != 5 && deg != 6)
    fail(Errc::InvalidInput, "genus 2 model must have degree 5 or 6");

  Cov F{f, 6};
  Scalar m2 = constant_of(transvectant(F, F, 6));
  Cov i4 = transvectant(F, F, 4);
  Scalar m4 = constant_of(transvectant(i4, i4, 4));
  Cov delta = transvectant(i4, i4, 2);
  Scalar m6 = constant_of(transvectant(i4, delta, 4));

  IgusaInvariants inv;
  inv.J2 = Scalar(-120) * m2;
  inv.J4 = Scalar(-720) * m2 * m2 + Scalar(6750) * m4;
  inv.J6 = Scalar(8640) * m2 * m2 * m2 - Scalar(108000) * m2 * m4 +
           Scalar(202500) * m6;
  // disc of the degree-6 form; a quintic is the sextic with a root at
  // infinity, which contributes the squared leading coefficient
  inv.J10 = deg == 6 ? uni_discriminant(f) : f.lc() * f.lc() * uni_discriminant(f);
  return inv;
}

AbsoluteInvariants absolute(const IgusaInvariants& inv) {
  if (inv.J2.is_zero())
    fail(Errc::J2Zero, "absolute invariants are undefined on the J2 = 0 stratum");
  Scalar j2p2 = inv.J2 * inv.J2;
  Scalar j2p3 = j2p2 * inv.J2;
  AbsoluteInvariants abs;
  abs.i1 = Scalar(144) * inv.J4 / j2p2;
  abs.i2 = Scalar(-1728) * (inv.J2 * inv.J4 - Scalar(3) * inv.J6) / j2p3;
  abs.i3 = Scalar(486) * inv.J10 / (j2p3 * j2p2);
  return abs;
}

bool same_point(const Genus2Curve& c1, const Genus2Curve& c2) {
  AbsoluteInvariants a1 = absolute(igusa_from_curve(c1));
  AbsoluteInvariants a2 = absolute(igusa_from_curve(c2));
  return a1.i1 == a2.i1 && a1.i2 == a2.i2 && a1.i3 == a2.i3;
}

ReducedAutGroup reduced_aut_group_numeric(const Genus2Curve& c,
                                          long precision_bits, double tol) {
  UniPoly f = c.f();
  if (f.is_zero() || f.degree() < 5)
    fail(Errc::InvalidInput, "genus 2 model must have degree 5 or 6");
  if (uni_discriminant(f).is_zero())
    fail(Errc::InvalidInput, "branch points must be distinct");
  if (precision_bits < 64) fail(Errc::InvalidInput, "precision below 64 bits");

  std::vector<MpComplex> roots = complex_roots(f, precision_bits);
  StabilizerResult stab = mobius_stabilizer(roots, f.degree() == 5, tol);

  ReducedAutGroup out;
  out.order = stab.order;
  out.closure_verified = stab.closed;
  switch (stab.order) {
    case 1:
      out.label = "generic hyperelliptic involution only";
      break;
    case 2:
      out.label = "V4 candidate";
      break;
    case 4:
    case 6:
      out.label = "manual review";
      break;
    default:
      out.label = "dihedral or special";
      break;
  }
  return out;
}

}  // namespace g2cover
