#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "g2cover/multipoly.hpp"
#include "g2cover/ratfunc.hpp"

// Verbatim transcriptions of the display formulas the constructions are
// cross-checked against. Everything here is data: the library never derives
// results from these tables outside of verification paths and the
// specialized-family constructors that are defined by them. Each entry's
// checksum is pinned by a test so accidental edits get caught.
namespace g2cover::tables {

// Coefficients of the displayed cubic g3, index = power of x; each entry is
// z-linear in the variables (a, b, z). The x^0 display contains one
// malformed monomial in the source; it is dropped here, not guessed, and
// g3_display_defect() records the term the division construction produces
// in its place.
const std::vector<MultiPoly>& g3_display_coeffs();
const MultiPoly& g3_display_defect();  // -12 a b^4 z

// Displays attached to the one-parameter families. z, lambda and T are
// rational functions of a; the absolute-invariant displays i1, i2, i3 and
// the elliptic j are rational functions of T with the J2 scale polynomial
// appearing in their denominators.
struct CaseDisplays {
  RatFunc z;
  RatFunc lambda;
  RatFunc T;
  RatFunc i1, i2, i3;
  MultiPoly J2;
  RatFunc j;
};
const CaseDisplays& case1();
const CaseDisplays& case2();

// Displayed cubic coefficients b3, b2, b1, b0 (variable a, displayed signs)
// of the b = a - 1 family model.
const std::vector<MultiPoly>& case2_model_coeffs();

// The F4-double-root family: displayed quadratic factor x^2 - x - q(a) of
// the sextic model, the displayed F4 root z(a, b), and the displayed
// nonvanishing factors (variable a).
const RatFunc& case3_quadratic_constant();
const RatFunc& case3_z();
const std::vector<std::pair<std::string, MultiPoly>>& case3_nonvanishing();

// V4-locus classification polynomials as (factor, multiplicity) lists in
// display order; variable T for the first two families, a for the third.
const std::vector<std::pair<MultiPoly, int>>& v4_factors_case1();
const std::vector<std::pair<MultiPoly, int>>& v4_factors_case2();
const std::vector<std::pair<MultiPoly, int>>& v4_factors_case3();

// Degree-2-in-w relation coefficients over (u, v), and the displayed
// factorization of its discriminant.
const MultiPoly& w_relation_c2();
const MultiPoly& w_relation_c1();
const MultiPoly& w_relation_c0();
const MultiPoly& delta_w_display();

// w = (z^2 - z + 1)^3 / (z^2 (z - 1)^2)
const RatFunc& w_of_z();
// 2u + v - 16, the (u, v)-line cut out by the F4-double-root condition
const MultiPoly& uv_line();

// Name -> checksum of every polynomial above (rational functions appear as
// .num / .den pairs). Pinned by tests.
const std::vector<std::pair<std::string, size_t>>& table_checksums();

}  // namespace g2cover::tables
