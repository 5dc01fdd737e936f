#pragma once

#include <mpfr.h>

#include <map>
#include <string>
#include <vector>

#include "g2cover/multipoly.hpp"
#include "g2cover/scalar.hpp"
#include "g2cover/unipoly.hpp"

namespace g2cover {

// Arbitrary-precision complex value on top of MPFR. Value semantics; the
// working precision is fixed at construction and propagates through
// arithmetic as the larger operand precision.
class MpComplex {
 public:
  MpComplex() : MpComplex(128) {}
  explicit MpComplex(mpfr_prec_t prec);
  MpComplex(const MpComplex& o);
  MpComplex(MpComplex&& o) noexcept;
  MpComplex& operator=(const MpComplex& o);
  MpComplex& operator=(MpComplex&& o) noexcept;
  ~MpComplex();

  static MpComplex of(const Rational& re, mpfr_prec_t prec);
  // quadratic-extension values embed via the principal branch of sqrt(d),
  // so negative d lands on the positive imaginary axis
  static MpComplex of(const Scalar& s, mpfr_prec_t prec);
  static MpComplex make(double re, double im, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(re_); }
  mpfr_srcptr re() const { return re_; }
  mpfr_srcptr im() const { return im_; }

  bool is_zero() const;
  MpComplex conjugate() const;
  MpComplex sqrt() const;  // principal branch
  double abs_double() const;
  std::string str(int digits = 20) const;

  friend MpComplex operator+(const MpComplex& x, const MpComplex& y);
  friend MpComplex operator-(const MpComplex& x, const MpComplex& y);
  friend MpComplex operator*(const MpComplex& x, const MpComplex& y);
  friend MpComplex operator/(const MpComplex& x, const MpComplex& y);
  MpComplex operator-() const;

 private:
  mpfr_t re_, im_;
};

// All simple roots of a dense complex polynomial (coefficients ascending,
// nonzero leading coefficient), by the simultaneous Weierstrass iteration.
// Non-convergence (e.g. a repeated root) raises the precision error.
std::vector<MpComplex> complex_roots(const std::vector<MpComplex>& coeffs);
std::vector<MpComplex> complex_roots(const UniPoly& f, mpfr_prec_t prec);

MpComplex eval_complex(const MultiPoly& p, const std::map<Var, MpComplex>& at);

struct StabilizerResult {
  int order = 0;
  // the accepted maps, as permutations of the point set, form a group:
  // closed under composition and containing the identity
  bool closed = false;
};

// Order of the group of Moebius transformations permuting the given point
// set on the projective line. Candidates are the maps sending the first
// three points onto every ordered triple; a candidate is accepted when it
// permutes the whole set within tol in the chordal metric.
StabilizerResult mobius_stabilizer(const std::vector<MpComplex>& finite_points,
                                   bool include_infinity, double tol);

}  // namespace g2cover
