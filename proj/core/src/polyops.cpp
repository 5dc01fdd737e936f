#include "g2cover/polyops.hpp"

#include <algorithm>

#include "g2cover/errors.hpp"

namespace g2cover {

namespace {

bool mono_divides(const Mono& d, const Mono& m) {
  for (size_t i = 0; i < kNumVars; ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Mono mono_quot(const Mono& m, const Mono& d) {
  Mono q{};
  for (size_t i = 0; i < kNumVars; ++i) q[i] = static_cast<uint16_t>(m[i] - d[i]);
  return q;
}

}  // namespace

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return MultiPoly();
  const auto& ql = q.terms().front();
  MultiPoly rest = p;
  std::vector<MultiPoly::Term> quot;
  while (!rest.is_zero()) {
    const auto& rl = rest.terms().front();
    if (!mono_divides(ql.first, rl.first)) return std::nullopt;
    MultiPoly::Term t{mono_quot(rl.first, ql.first), rl.second / ql.second};
    rest = rest - MultiPoly::monomial(t.first, t.second) * q;
    quot.push_back(std::move(t));
  }
  return MultiPoly::from_terms(std::move(quot));
}

std::optional<DivRem> divrem_wrt(const MultiPoly& p, const MultiPoly& q, Var v) {
  int dq = q.degree(v);
  if (q.is_zero()) return std::nullopt;
  MultiPoly lcq = q.leading_coeff_wrt(v);
  MultiPoly rem = p;
  MultiPoly quot;
  while (!rem.is_zero() && rem.degree(v) >= dq) {
    int dr = rem.degree(v);
    auto step = exact_divide(rem.coeff_wrt(v, dr), lcq);
    if (!step) return std::nullopt;
    MultiPoly shift = *step * MultiPoly::variable(v, static_cast<uint16_t>(dr - dq));
    quot += shift;
    rem -= shift * q;
    if (!rem.is_zero() && rem.degree(v) == dr)
      fail(Errc::ConstructionFailure, "division failed to reduce degree");
  }
  return DivRem{std::move(quot), std::move(rem)};
}

MultiPoly prem(const MultiPoly& p, const MultiPoly& q, Var v) {
  int dq = q.degree(v);
  if (dq < 0) fail(Errc::InvalidInput, "pseudo-remainder by zero");
  MultiPoly lcq = q.leading_coeff_wrt(v);
  MultiPoly rem = p;
  int steps_needed = std::max(0, p.degree(v) - dq + 1);
  int steps = 0;
  while (!rem.is_zero() && rem.degree(v) >= dq) {
    int dr = rem.degree(v);
    MultiPoly lead = rem.coeff_wrt(v, dr);
    rem = lcq * rem - lead * MultiPoly::variable(v, static_cast<uint16_t>(dr - dq)) * q;
    ++steps;
    if (!rem.is_zero() && rem.degree(v) >= dr)
      fail(Errc::ConstructionFailure, "pseudo-division failed to reduce degree");
  }
  // uniform multiplier lc^(deg p - deg q + 1)
  for (; steps < steps_needed; ++steps) rem = lcq * rem;
  return rem;
}

namespace {

// gcd of the coefficients of p wrt v (a polynomial in the other variables)
MultiPoly content_wrt(const MultiPoly& p, Var v) {
  MultiPoly g;
  for (const auto& c : p.coeffs_wrt(v)) {
    if (c.is_zero()) continue;
    g = poly_gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

std::optional<Var> first_var(const MultiPoly& p) {
  for (size_t i = 0; i < kNumVars; ++i)
    if (p.uses(static_cast<Var>(i))) return static_cast<Var>(i);
  return std::nullopt;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) return q.is_zero() ? q : q.integer_primitive();
  if (q.is_zero()) return p.integer_primitive();
  if (p.is_constant() || q.is_constant()) return MultiPoly(Rational(1));

  // main variable: first universe variable used by both; if they share no
  // variable the gcd is a constant
  Var v = Var::X;
  bool found = false;
  for (size_t i = 0; i < kNumVars && !found; ++i) {
    Var cand = static_cast<Var>(i);
    if (p.uses(cand) && q.uses(cand)) {
      v = cand;
      found = true;
    }
  }
  if (!found) return MultiPoly(Rational(1));

  MultiPoly cp = content_wrt(p, v), cq = content_wrt(q, v);
  // primitive parts must also drop the integer content, or the pseudo-
  // remainder multipliers compound and the coefficients explode
  MultiPoly a = exact_divide(p, cp)->integer_primitive();
  MultiPoly b = exact_divide(q, cq)->integer_primitive();
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  // primitive PRS
  while (true) {
    MultiPoly r = prem(a, b, v);
    if (r.is_zero()) break;
    MultiPoly cr = content_wrt(r, v);
    a = std::move(b);
    b = exact_divide(r, cr)->integer_primitive();
    if (b.degree(v) == 0) {
      b = MultiPoly(Rational(1));
      break;
    }
  }
  return (poly_gcd(cp, cq) * b).integer_primitive();
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, Var v) {
  if (p.is_zero() && q.is_zero()) fail(Errc::InvalidInput, "resultant of two zero polynomials");
  int m = std::max(p.degree(v), 0), n = std::max(q.degree(v), 0);
  if (m == 0 && n == 0) return MultiPoly(Rational(1));
  auto pc = p.coeffs_wrt(v), qc = q.coeffs_wrt(v);
  size_t size = static_cast<size_t>(m + n);
  // Sylvester matrix: n rows of p's coefficients, then m rows of q's
  std::vector<std::vector<MultiPoly>> M(size, std::vector<MultiPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[r][r + (m - k)] = k < static_cast<int>(pc.size()) ? pc[k] : MultiPoly();
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      M[n + r][r + (n - k)] = k < static_cast<int>(qc.size()) ? qc[k] : MultiPoly();

  // fraction-free Gaussian elimination (Bareiss): every division is exact
  int sign = 1;
  MultiPoly prev(Rational(1));
  for (size_t k = 0; k + 1 < size; ++k) {
    if (M[k][k].is_zero()) {
      size_t swap_row = k + 1;
      while (swap_row < size && M[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == size) return MultiPoly();  // singular: resultant 0
      std::swap(M[k], M[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < size; ++i) {
      for (size_t j = k + 1; j < size; ++j) {
        MultiPoly numer = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        auto d = exact_divide(numer, prev);
        if (!d) fail(Errc::ConstructionFailure, "fraction-free elimination: inexact division");
        M[i][j] = std::move(*d);
      }
      M[i][k] = MultiPoly();
    }
    prev = M[k][k];
  }
  MultiPoly det = M[size - 1][size - 1];
  return sign < 0 ? -det : det;
}

MultiPoly discriminant(const MultiPoly& p, Var v) {
  int n = p.degree(v);
  if (n < 2) fail(Errc::InvalidInput, "discriminant needs degree >= 2");
  MultiPoly res = resultant(p, p.derivative(v), v);
  MultiPoly lc = p.leading_coeff_wrt(v);
  auto quot = exact_divide(res, lc);
  if (!quot) fail(Errc::ConstructionFailure, "Res(p, p') not divisible by lc(p)");
  bool negate = (static_cast<long>(n) * (n - 1) / 2) % 2 == 1;
  return negate ? -*quot : *quot;
}

namespace {

// closed criterion for monic univariate quartics: v^4 + A v^3 + B v^2 + C v + D
// is a square iff 8C = A(4B - A^2) and 64D = (4B - A^2)^2, with square root
// v^2 + (A/2) v + (4B - A^2)/8
std::optional<MultiPoly> quartic_fast_path(const MultiPoly& p, Var v) {
  Rational A = p.coeff_wrt(v, 3).constant_value();
  Rational B = p.coeff_wrt(v, 2).constant_value();
  Rational C = p.coeff_wrt(v, 1).constant_value();
  Rational D = p.coeff_wrt(v, 0).constant_value();
  Rational E = Rational(4) * B - A * A;
  if (Rational(8) * C != A * E) return std::nullopt;
  if (Rational(64) * D != E * E) return std::nullopt;
  return MultiPoly::variable(v, 2) + (A / Rational(2)) * MultiPoly::variable(v) +
         MultiPoly(E / Rational(8));
}

bool is_univariate_in(const MultiPoly& p, Var v) {
  for (size_t i = 0; i < kNumVars; ++i)
    if (static_cast<Var>(i) != v && p.uses(static_cast<Var>(i))) return false;
  return true;
}

}  // namespace

std::optional<MultiPoly> poly_sqrt(const MultiPoly& p) {
  if (p.is_zero()) return MultiPoly();
  if (p.is_constant()) {
    auto r = p.constant_value().sqrt();
    if (!r) return std::nullopt;
    return MultiPoly(*r);
  }
  auto mv = first_var(p);
  Var v = *mv;

  // monic univariate quartic: the closed criterion is exact (a monic quartic
  // is a square iff it passes), so no fallback is needed
  if (p.degree(v) == 4 && is_univariate_in(p, v) && p.leading_coeff_wrt(v) == MultiPoly(1))
    return quartic_fast_path(p, v);

  int d = p.degree(v);
  if (d % 2 != 0) return std::nullopt;
  int h = d / 2;
  auto cs = p.coeffs_wrt(v);
  auto top = poly_sqrt(cs[d]);
  if (!top) return std::nullopt;
  std::vector<MultiPoly> s(static_cast<size_t>(h) + 1);
  s[h] = *top;
  MultiPoly two_top = Rational(2) * s[h];
  for (int k = h - 1; k >= 0; --k) {
    // coefficient of v^(h+k) in s^2 is sum_{i+j=h+k} s_i s_j = 2 s_h s_k + rest
    MultiPoly rest;
    for (int i = k + 1; i <= h - 1; ++i) {
      int j = h + k - i;
      if (j > h || j < 0 || j <= i) continue;
      rest += Rational(2) * s[i] * s[j];
    }
    for (int i = k + 1; i <= h - 1; ++i)
      if (h + k - i == i) rest += s[i] * s[i];
    MultiPoly target = (h + k < static_cast<int>(cs.size()) ? cs[h + k] : MultiPoly()) - rest;
    auto sk = exact_divide(target, two_top);
    if (!sk) return std::nullopt;
    s[k] = std::move(*sk);
  }
  MultiPoly root;
  for (int k = 0; k <= h; ++k) root += s[k] * MultiPoly::variable(v, static_cast<uint16_t>(k));
  if (root * root != p) return std::nullopt;
  return root;
}

std::pair<Scalar, Scalar> quadratic_roots(const MultiPoly& p, Var v,
                                          const std::map<Var, Rational>& point) {
  MultiPoly sub = p.eval_partial(point);
  if (sub.degree(v) != 2)
    fail(Errc::DegenerateQuadratic,
         "leading coefficient vanished: degree " + std::to_string(sub.degree(v)) + " after substitution");
  Rational A = sub.coeff_wrt(v, 2).constant_value();
  Rational B = sub.coeff_wrt(v, 1).constant_value();
  Rational C = sub.coeff_wrt(v, 0).constant_value();
  Rational disc = B * B - Rational(4) * A * C;
  Rational two_a = Rational(2) * A;
  if (auto r = disc.sqrt()) {
    return {Scalar((-B + *r) / two_a), Scalar((-B - *r) / two_a)};
  }
  // disc = d * s^2 with d squarefree (num/den = num*den / den^2, so the
  // squarefree part of num*den is the right d); roots (-B +- s*sqrt(d)) / 2A
  Integer d = squarefree_part(disc.num() * disc.den());
  Rational ratio = disc / Rational(d, Integer(1));  // = s^2, a positive rational square
  auto s = ratio.sqrt();
  if (!s) fail(Errc::ConstructionFailure, "squarefree decomposition failed");
  Rational sc = *s / two_a;
  Rational pc = -B / two_a;
  return {Scalar(QuadExtScalar(pc, sc, d)), Scalar(QuadExtScalar(pc, -sc, d))};
}

}  // namespace g2cover
