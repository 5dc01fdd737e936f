#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2cover/cover.hpp"
#include "g2cover/multipoly.hpp"
#include "g2cover/rational.hpp"
#include "g2cover/report.hpp"
#include "g2cover/scalar.hpp"

namespace g2cover {

// Rational parameter of a one-dimensional sublocus together with the family
// it parametrizes. `note` is empty except at flagged boundary inputs where
// the value is defined but some other part of the construction degenerates.
struct TParam {
  Rational T;
  RamificationCase family = RamificationCase::I;
  std::string note;
};

// Invariants of one locus member. j is empty exactly where the displayed
// j-formula has a pole: there the elliptic quotient degenerates while the
// i-coordinates (with their J2-power denominators) still evaluate.
struct LocusPoint {
  Rational i1, i2, i3;
  std::optional<Rational> j;
};

// Displayed absolute invariants and elliptic j of the two one-parameter
// families, evaluated exactly. The scale polynomial J2(T) sits in the
// denominators, so it must not vanish.
LocusPoint y1_formulas(const Rational& T);
LocusPoint y2_formulas(const Rational& T);

// T = ((a-2)/(5(a+2)))^2 for the first family, (a/(a-2))^2 for the second.
TParam t_of_a(const Rational& a, RamificationCase family);

// w = (z^2 - z + 1)^3 / (z^2 (z - 1)^2); undefined at z in {0, 1}
Scalar w_of_z(const Scalar& z);

struct WRelation {
  MultiPoly c0, c1, c2;  // c2 w^2 + c1 w + c0 = 0, coefficients in (u, v)
};
const WRelation& w_relation();

// Checks that both F4 roots z of the cover at (a, b) satisfy the quadratic
// w-relation at (u(a,b), v(a,b)) exactly, including the Vieta pairing of
// the two w-values.
CheckReport verify_theorem3(const Rational& a, const Rational& b);

// Compares the discriminant c1^2 - 4 c0 c2 of the w-relation against its
// displayed factorization: exact divisibility with a perfect-square
// cofactor (discriminants of quadratic extensions are defined up to
// squares). Quotient and constant are recorded in the report.
CheckReport delta_w_check();

// Exact zero test of the double-root locus equation in (a, b), and of the
// line 2u + v - 16 = 0 it maps to in the (u, v) coordinates.
bool y3_membership(const Rational& a, const Rational& b);
bool y3_uv_constraint(const Rational& u, const Rational& v);

// Product of the transcribed classification factors (variable T for the
// first two families, a for the third, with displayed multiplicities).
MultiPoly classification_poly(RamificationCase family);
bool is_v4_point(const Rational& param, RamificationCase family);

// Inverts the displayed formulas: clears denominators in i1/i2/i3 and takes
// the gcd of the three resulting polynomials in T; the unique common root
// is the parameter. Round-trips through y1/y2_formulas before returning.
TParam recover_parameter(const Rational& i1, const Rational& i2,
                         const Rational& i3, RamificationCase family);

enum class PermGroup { S5, A5 };

// One branch-point class is the multiset of nontrivial cycle lengths, e.g.
// {2,2} for a double transposition; fixed points are implied.
using CycleType = std::vector<int>;

struct NielsenCount {
  PermGroup group = PermGroup::S5;
  std::vector<CycleType> types;
  long tuples = 0;   // generating tuples with identity product
  long classes = 0;  // orbits under simultaneous S5-conjugation
  // for the A5 group the count modulo A5-conjugation is reported alongside
  // (the two conventions differ exactly by orbit fusion under odd elements)
  long classes_mod_a5 = 0;
};

NielsenCount nielsen_count(PermGroup group, const std::vector<CycleType>& types);

}  // namespace g2cover
