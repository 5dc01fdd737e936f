#pragma once

#include <string>

#include "g2cover/curve.hpp"
#include "g2cover/scalar.hpp"

namespace g2cover {

// Weighted invariants of the binary sextic attached to y^2 = f(x); under
// f -> r*f each J_2k scales by r^k. J10 is the discriminant of f (times the
// squared leading coefficient for quintics, which are handled as sextics
// with a root at infinity).
struct IgusaInvariants {
  Scalar J2, J4, J6, J10;
};

// Inhomogeneous moduli coordinates, defined when J2 != 0.
struct AbsoluteInvariants {
  Scalar i1, i2, i3;
};

IgusaInvariants igusa_from_curve(const Genus2Curve& c);
AbsoluteInvariants absolute(const IgusaInvariants& inv);

// true iff the two curves hit the same moduli point (equal absolute
// invariants); both must have J2 != 0
bool same_point(const Genus2Curve& c1, const Genus2Curve& c2);

struct ReducedAutGroup {
  int order = 0;
  std::string label;
  bool closure_verified = false;
};

// Numeric corroboration of the reduced automorphism group: the order of the
// Moebius stabilizer of the six branch points, computed in floating point at
// the given precision. Exactness lives elsewhere; this only labels candidates
// (1 -> generic, 2 -> extra involution, 4/6 -> manual review, larger ->
// dihedral or special).
ReducedAutGroup reduced_aut_group_numeric(const Genus2Curve& c,
                                          long precision_bits = 128,
                                          double tol = 1e-20);

}  // namespace g2cover
