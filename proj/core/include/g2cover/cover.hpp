#pragma once

#include <string>
#include <utility>
#include <vector>

#include "g2cover/ratfunc.hpp"
#include "g2cover/report.hpp"
#include "g2cover/scalar.hpp"

namespace g2cover {

// Parameters of the normalized degree-5 cover. Valid parameters satisfy
// a != 0, b != 0, a+b+1 != 0 and 2a+1 != 0 (the last keeps F4 quadratic).
struct CoverParams {
  Rational a;
  Rational b;
};

enum class RamificationCase { NonDegenerate, I, II, III };

const char* ramification_name(RamificationCase c);

// The cover phi = X*F1^2/F2^2 together with its companion polynomials.
// F1..F4 are univariate in X (coefficients rational once params are fixed).
struct CoverData {
  CoverParams params;
  MultiPoly F1, F2, F3, F4;
  RatFunc phi;
  RamificationCase case_tag = RamificationCase::NonDegenerate;
};

// Generic polynomials over Q[X, a, b]; every numeric object is a
// substitution into these, so there is a single source for the formulas.
const MultiPoly& f1_generic();
const MultiPoly& f2_generic();
const MultiPoly& f3_generic();
const MultiPoly& f4_generic();
const RatFunc& phi_generic();

// Left side of the case-III condition: the quadratic factor of Disc_X(F4)
// that is not forced by the parameter exclusions (Disc_X(F4) = a * this).
const MultiPoly& case3_condition();

// The nine nonvanishing factors whose product is Delta(a, b), in display
// order, each named by its formula.
const std::vector<std::pair<std::string, MultiPoly>>& delta_factors();

// Throws an excluded-parameter error naming the violated factor.
void require_valid(const CoverParams& p);

CoverData build_cover(const CoverParams& p);

// X*F1^2 - (X-1)*F3^2 - F2^2 == 0, checked symbolically over Q[X,a,b] and
// again after substituting the cover's parameters.
CheckReport verify_square_identity(const CoverData& c);

// phi' = constant * F1*F3*F4 / F2^3; the constant is recorded (1 for the
// generic cover; specialization can rescale the canonical forms).
CheckReport derivative_factorization(const CoverData& c);

// Case tests in order I (4b = a^2), II (b = a-1), III (case3_condition = 0);
// otherwise NonDegenerate. Pure condition evaluation: callers that need the
// parameter invariants enforce them separately (build_cover does).
RamificationCase classify_case(const CoverParams& p);
std::vector<RamificationCase> satisfied_cases(const CoverParams& p);

// Value of the product of the nine exclusion factors.
Rational delta(const CoverParams& p);

// S3 action. A group element is a word over the letters 's' (sigma) and
// 't' (tau), applied left to right; the empty word is the identity.
CoverParams s3_on_params(const CoverParams& p, const std::string& word);
struct Triple {
  Rational a;
  Rational b;
  Scalar z;
};
Triple s3_on_triple(const Triple& t, const std::string& word);

// The six parameter maps as rational functions of (a, b), covering one full
// S3 orbit: words "", "s", "t", "st", "ts", "sts".
const std::vector<std::string>& s3_words();

// The fixed-field generators u, v.
std::pair<Rational, Rational> uv_invariants(const CoverParams& p);
std::pair<RatFunc, RatFunc> uv_generic();

struct F4Roots {
  std::pair<Scalar, Scalar> roots;
  bool first_is_one = false;
  bool second_is_one = false;
};
F4Roots f4_roots(const CoverParams& p);

}  // namespace g2cover
