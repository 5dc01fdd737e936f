#include "g2cover/numeric.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "g2cover/errors.hpp"
#include "g2cover/quadext.hpp"

namespace g2cover {

namespace {

mpfr_prec_t join(const MpComplex& x, const MpComplex& y) {
  return std::max(x.prec(), y.prec());
}

// scoped real temporary
struct Real {
  mpfr_t v;
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Real() { mpfr_clear(v); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
};

}  // namespace

MpComplex::MpComplex(mpfr_prec_t prec) {
  mpfr_init2(re_, prec);
  mpfr_init2(im_, prec);
  mpfr_set_zero(re_, 1);
  mpfr_set_zero(im_, 1);
}

MpComplex::MpComplex(const MpComplex& o) {
  mpfr_init2(re_, o.prec());
  mpfr_init2(im_, o.prec());
  mpfr_set(re_, o.re_, MPFR_RNDN);
  mpfr_set(im_, o.im_, MPFR_RNDN);
}

MpComplex::MpComplex(MpComplex&& o) noexcept {
  mpfr_init2(re_, o.prec());
  mpfr_init2(im_, o.prec());
  mpfr_swap(re_, o.re_);
  mpfr_swap(im_, o.im_);
}

MpComplex& MpComplex::operator=(const MpComplex& o) {
  if (this != &o) {
    mpfr_set_prec(re_, o.prec());
    mpfr_set_prec(im_, o.prec());
    mpfr_set(re_, o.re_, MPFR_RNDN);
    mpfr_set(im_, o.im_, MPFR_RNDN);
  }
  return *this;
}

MpComplex& MpComplex::operator=(MpComplex&& o) noexcept {
  if (this != &o) {
    mpfr_swap(re_, o.re_);
    mpfr_swap(im_, o.im_);
  }
  return *this;
}

MpComplex::~MpComplex() {
  mpfr_clear(re_);
  mpfr_clear(im_);
}

MpComplex MpComplex::of(const Rational& re, mpfr_prec_t prec) {
  MpComplex r(prec);
  mpfr_set_q(r.re_, re.raw().get_mpq_t(), MPFR_RNDN);
  return r;
}

MpComplex MpComplex::of(const Scalar& s, mpfr_prec_t prec) {
  if (s.is_rational()) return of(s.rational(), prec);
  const QuadExtScalar& q = s.quad();
  MpComplex root(prec);
  Real d(prec);
  mpfr_set_z(d.v, Integer(q.d()).get_mpz_t(), MPFR_RNDN);
  if (mpfr_sgn(d.v) >= 0) {
    mpfr_sqrt(root.re_, d.v, MPFR_RNDN);
  } else {
    mpfr_neg(d.v, d.v, MPFR_RNDN);
    mpfr_sqrt(root.im_, d.v, MPFR_RNDN);
  }
  return of(q.p(), prec) + of(q.q(), prec) * root;
}

MpComplex MpComplex::make(double re, double im, mpfr_prec_t prec) {
  MpComplex r(prec);
  mpfr_set_d(r.re_, re, MPFR_RNDN);
  mpfr_set_d(r.im_, im, MPFR_RNDN);
  return r;
}

bool MpComplex::is_zero() const { return mpfr_zero_p(re_) && mpfr_zero_p(im_); }

MpComplex MpComplex::conjugate() const {
  MpComplex r(*this);
  mpfr_neg(r.im_, r.im_, MPFR_RNDN);
  return r;
}

MpComplex MpComplex::sqrt() const {
  // principal branch via |z| and half-angle identities:
  // sqrt(z) = sqrt((|z|+re)/2) + i*sign(im)*sqrt((|z|-re)/2)
  mpfr_prec_t p = prec();
  MpComplex r(p);
  Real mag(p), t(p);
  mpfr_hypot(mag.v, re_, im_, MPFR_RNDN);
  mpfr_add(t.v, mag.v, re_, MPFR_RNDN);
  mpfr_div_2ui(t.v, t.v, 1, MPFR_RNDN);
  mpfr_sqrt(r.re_, t.v, MPFR_RNDN);
  mpfr_sub(t.v, mag.v, re_, MPFR_RNDN);
  mpfr_div_2ui(t.v, t.v, 1, MPFR_RNDN);
  mpfr_sqrt(r.im_, t.v, MPFR_RNDN);
  if (mpfr_sgn(im_) < 0) mpfr_neg(r.im_, r.im_, MPFR_RNDN);
  return r;
}

double MpComplex::abs_double() const {
  Real mag(prec());
  mpfr_hypot(mag.v, re_, im_, MPFR_RNDN);
  return mpfr_get_d(mag.v, MPFR_RNDN);
}

std::string MpComplex::str(int digits) const {
  char* rs = nullptr;
  char* is = nullptr;
  mpfr_asprintf(&rs, "%.*Rg", digits, re_);
  mpfr_asprintf(&is, "%.*Rg", digits, im_);
  std::string out = std::string(rs) + (mpfr_sgn(im_) < 0 ? " " : " +") + is + "i";
  mpfr_free_str(rs);
  mpfr_free_str(is);
  return out;
}

MpComplex operator+(const MpComplex& x, const MpComplex& y) {
  MpComplex r(join(x, y));
  mpfr_add(r.re_, x.re_, y.re_, MPFR_RNDN);
  mpfr_add(r.im_, x.im_, y.im_, MPFR_RNDN);
  return r;
}

MpComplex operator-(const MpComplex& x, const MpComplex& y) {
  MpComplex r(join(x, y));
  mpfr_sub(r.re_, x.re_, y.re_, MPFR_RNDN);
  mpfr_sub(r.im_, x.im_, y.im_, MPFR_RNDN);
  return r;
}

MpComplex operator*(const MpComplex& x, const MpComplex& y) {
  mpfr_prec_t p = join(x, y);
  MpComplex r(p);
  Real t1(p), t2(p);
  mpfr_mul(t1.v, x.re_, y.re_, MPFR_RNDN);
  mpfr_mul(t2.v, x.im_, y.im_, MPFR_RNDN);
  mpfr_sub(r.re_, t1.v, t2.v, MPFR_RNDN);
  mpfr_mul(t1.v, x.re_, y.im_, MPFR_RNDN);
  mpfr_mul(t2.v, x.im_, y.re_, MPFR_RNDN);
  mpfr_add(r.im_, t1.v, t2.v, MPFR_RNDN);
  return r;
}

MpComplex operator/(const MpComplex& x, const MpComplex& y) {
  mpfr_prec_t p = join(x, y);
  if (y.is_zero()) fail(Errc::InvalidInput, "complex division by zero");
  MpComplex num = x * y.conjugate();
  MpComplex r(p);
  Real den(p), t(p);
  mpfr_mul(den.v, y.re_, y.re_, MPFR_RNDN);
  mpfr_mul(t.v, y.im_, y.im_, MPFR_RNDN);
  mpfr_add(den.v, den.v, t.v, MPFR_RNDN);
  mpfr_div(r.re_, num.re_, den.v, MPFR_RNDN);
  mpfr_div(r.im_, num.im_, den.v, MPFR_RNDN);
  return r;
}

MpComplex MpComplex::operator-() const {
  MpComplex r(*this);
  mpfr_neg(r.re_, r.re_, MPFR_RNDN);
  mpfr_neg(r.im_, r.im_, MPFR_RNDN);
  return r;
}

namespace {

// |x|^2 into out
void abs2(mpfr_t out, const MpComplex& x) {
  Real t(mpfr_get_prec(out));
  mpfr_mul(out, x.re(), x.re(), MPFR_RNDN);
  mpfr_mul(t.v, x.im(), x.im(), MPFR_RNDN);
  mpfr_add(out, out, t.v, MPFR_RNDN);
}

MpComplex horner(const std::vector<MpComplex>& c, const MpComplex& z) {
  MpComplex acc = c.back();
  for (size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

}  // namespace

std::vector<MpComplex> complex_roots(const std::vector<MpComplex>& coeffs) {
  if (coeffs.size() < 2) fail(Errc::InvalidInput, "roots of a constant requested");
  if (coeffs.back().is_zero())
    fail(Errc::InvalidInput, "leading coefficient is zero");
  mpfr_prec_t p = coeffs.front().prec();
  for (const auto& c : coeffs) p = std::max(p, c.prec());
  size_t n = coeffs.size() - 1;

  std::vector<MpComplex> c;
  c.reserve(coeffs.size());
  for (const auto& k : coeffs) c.push_back(k / coeffs.back());

  // seed roots on a slightly irrational spiral so no starting point is a
  // symmetry axis of the target set
  std::vector<MpComplex> z;
  MpComplex seed = MpComplex::make(0.4, 0.9, p);
  MpComplex acc = seed;
  for (size_t k = 0; k < n; ++k) {
    z.push_back(acc);
    acc = acc * seed;
  }

  Real step2(p), worst2(p), thresh(p);
  // convergence: every correction below 2^-(p-24) in magnitude
  mpfr_set_ui_2exp(thresh.v, 1, -2 * (static_cast<long>(p) - 24), MPFR_RNDN);

  for (int iter = 0; iter < 2000; ++iter) {
    mpfr_set_zero(worst2.v, 1);
    for (size_t k = 0; k < n; ++k) {
      MpComplex denom = MpComplex::of(Rational(1), p);
      for (size_t j = 0; j < n; ++j)
        if (j != k) denom = denom * (z[k] - z[j]);
      MpComplex delta = horner(c, z[k]) / denom;
      z[k] = z[k] - delta;
      abs2(step2.v, delta);
      if (mpfr_cmp(step2.v, worst2.v) > 0) mpfr_set(worst2.v, step2.v, MPFR_RNDN);
    }
    if (mpfr_cmp(worst2.v, thresh.v) < 0) return z;
  }
  fail(Errc::Precision, "root refinement did not converge at this precision");
}

std::vector<MpComplex> complex_roots(const UniPoly& f, mpfr_prec_t prec) {
  if (f.is_zero()) fail(Errc::InvalidInput, "roots of the zero polynomial requested");
  std::vector<MpComplex> c;
  c.reserve(f.coeffs().size());
  for (const auto& s : f.coeffs()) c.push_back(MpComplex::of(s, prec));
  return complex_roots(c);
}

MpComplex eval_complex(const MultiPoly& p, const std::map<Var, MpComplex>& at) {
  mpfr_prec_t prec = 128;
  for (const auto& [v, val] : at) prec = std::max(prec, val.prec());
  MpComplex sum(prec);
  for (const auto& [mono, coeff] : p.terms()) {
    MpComplex t = MpComplex::of(coeff, prec);
    for (size_t i = 0; i < kNumVars; ++i) {
      for (uint16_t e = 0; e < mono[i]; ++e) {
        auto it = at.find(static_cast<Var>(i));
        if (it == at.end())
          fail(Errc::InvalidInput, "evaluation point misses a used variable");
        t = t * it->second;
      }
    }
    sum = sum + t;
  }
  return sum;
}

namespace {

// point on the projective line as a homogeneous pair
struct P1 {
  MpComplex x, y;
};

MpComplex cross(const P1& a, const P1& b) { return a.x * b.y - b.x * a.y; }

// chordal distance |x1 y2 - x2 y1| / (|p1| |p2|) into out
void chordal(mpfr_t out, const P1& a, const P1& b) {
  mpfr_prec_t p = mpfr_get_prec(out);
  Real na(p), nb(p), t(p);
  abs2(na.v, a.x);
  abs2(t.v, a.y);
  mpfr_add(na.v, na.v, t.v, MPFR_RNDN);
  abs2(nb.v, b.x);
  abs2(t.v, b.y);
  mpfr_add(nb.v, nb.v, t.v, MPFR_RNDN);
  mpfr_mul(na.v, na.v, nb.v, MPFR_RNDN);
  mpfr_sqrt(na.v, na.v, MPFR_RNDN);
  abs2(t.v, cross(a, b));
  mpfr_sqrt(t.v, t.v, MPFR_RNDN);
  mpfr_div(out, t.v, na.v, MPFR_RNDN);
}

struct Mat {
  MpComplex a, b, c, d;
};

// Moebius map sending (p0, p1, p2) to (0, 1, infinity), as a matrix acting
// on homogeneous pairs: w maps to (cross(w,p0)*cross(p1,p2) : cross(w,p2)*cross(p1,p0))
Mat to_standard(const P1& p0, const P1& p1, const P1& p2) {
  MpComplex k12 = cross(p1, p2);
  MpComplex k10 = cross(p1, p0);
  return {k12 * p0.y, -(k12 * p0.x), k10 * p2.y, -(k10 * p2.x)};
}

Mat compose_adj(const Mat& q, const Mat& b) {
  // adj(q) * b
  Mat r;
  r.a = q.d * b.a - q.b * b.c;
  r.b = q.d * b.b - q.b * b.d;
  r.c = q.a * b.c - q.c * b.a;
  r.d = q.a * b.d - q.c * b.b;
  return r;
}

P1 apply(const Mat& m, const P1& p) {
  return {m.a * p.x + m.b * p.y, m.c * p.x + m.d * p.y};
}

}  // namespace

StabilizerResult mobius_stabilizer(const std::vector<MpComplex>& finite_points,
                                   bool include_infinity, double tol) {
  mpfr_prec_t p = 128;
  for (const auto& z : finite_points) p = std::max(p, z.prec());
  std::vector<P1> pts;
  for (const auto& z : finite_points)
    pts.push_back({z, MpComplex::of(Rational(1), p)});
  if (include_infinity)
    pts.push_back({MpComplex::of(Rational(1), p), MpComplex(p)});
  size_t n = pts.size();
  if (n < 3) fail(Errc::InvalidInput, "stabilizer needs at least three points");

  Real tolf(p), dist(p), sep(p);
  mpfr_set_d(tolf.v, tol, MPFR_RNDN);

  // the points must be separated by more than twice the matching tolerance
  // for nearest-point matching to be unambiguous
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      chordal(dist.v, pts[i], pts[j]);
      mpfr_mul_2ui(sep.v, tolf.v, 1, MPFR_RNDN);
      if (mpfr_cmp(dist.v, sep.v) <= 0)
        fail(Errc::InvalidInput, "point set collides within the matching tolerance");
    }

  Mat base = to_standard(pts[0], pts[1], pts[2]);
  std::set<std::vector<int>> perms;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        Mat m = compose_adj(to_standard(pts[i], pts[j], pts[k]), base);
        std::vector<int> perm(n, -1);
        bool ok = true;
        for (size_t l = 0; l < n && ok; ++l) {
          P1 img = apply(m, pts[l]);
          int hit = -1;
          for (size_t t = 0; t < n; ++t) {
            chordal(dist.v, img, pts[t]);
            if (mpfr_cmp(dist.v, tolf.v) < 0) {
              hit = static_cast<int>(t);
              break;
            }
          }
          if (hit < 0) ok = false;
          perm[l] = hit;
        }
        if (!ok) continue;
        std::vector<bool> seen(n, false);
        for (int t : perm) {
          if (t < 0 || seen[t]) {
            ok = false;
            break;
          }
          seen[t] = true;
        }
        if (ok) perms.insert(perm);
      }

  StabilizerResult res;
  res.order = static_cast<int>(perms.size());
  res.closed = true;
  std::vector<int> identity(n);
  for (size_t i = 0; i < n; ++i) identity[i] = static_cast<int>(i);
  if (!perms.count(identity)) res.closed = false;
  for (const auto& f : perms)
    for (const auto& g : perms) {
      std::vector<int> fg(n);
      for (size_t i = 0; i < n; ++i) fg[i] = f[static_cast<size_t>(g[i])];
      if (!perms.count(fg)) res.closed = false;
    }
  return res;
}

}  // namespace g2cover
