#pragma once

#include <optional>
#include <utility>

#include "g2cover/multipoly.hpp"
#include "g2cover/scalar.hpp"

namespace g2cover {

// Division of p by q viewed in (Q[rest])[v]: succeeds when every step's
// leading-coefficient division is exact. p = quot*q + rem with
// deg_v(rem) < deg_v(q).
struct DivRem {
  MultiPoly quot;
  MultiPoly rem;
};
std::optional<DivRem> divrem_wrt(const MultiPoly& p, const MultiPoly& q, Var v);

// Whole-ring exact division; nullopt when q does not divide p.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q);

// Pseudo-remainder: prem(p, q, v) = lc_v(q)^(deg p - deg q + 1) * p  mod q,
// the uniform-multiplier convention.
MultiPoly prem(const MultiPoly& p, const MultiPoly& q, Var v);

// Multivariate gcd (primitive PRS), canonicalized to coprime integer
// coefficients with positive leading coefficient. gcd(0,0) = 0.
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

// Sylvester resultant eliminating v, computed by fraction-free (Bareiss)
// elimination. Convention: Res_v(p, q) = det of the Sylvester matrix whose
// first deg(q) rows carry p's coefficients, so Res_v(X^2-1, X-2) = 3 and
// Res_v(v - c1, v - c2) = c1 - c2.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v);

// Disc_v(p) = (-1)^(n(n-1)/2) * Res_v(p, dp/dv) / lc_v(p), n = deg_v(p).
MultiPoly discriminant(const MultiPoly& p, Var v);

// Exact polynomial square root: s with s*s = p, when one exists. Works in
// any number of variables; for monic univariate quartics the closed
// degree-4 criterion is used as a fast path (and is checked against the
// general extraction by the test suite).
std::optional<MultiPoly> poly_sqrt(const MultiPoly& p);

// Both roots of a quadratic in v after substituting `point` for every other
// variable: a rational pair when the discriminant is a square, otherwise a
// conjugate pair in Q(sqrt(d)) with d the squarefree part of the
// discriminant.
std::pair<Scalar, Scalar> quadratic_roots(const MultiPoly& p, Var v,
                                          const std::map<Var, Rational>& point);

}  // namespace g2cover
