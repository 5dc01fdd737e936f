#pragma once

#include <string>

#include "g2cover/cover.hpp"
#include "g2cover/curve.hpp"
#include "g2cover/igusa.hpp"
#include "g2cover/loci.hpp"
#include "g2cover/multipoly.hpp"
#include "g2cover/report.hpp"

// Canonical JSON text for every publishable object. All functions return a
// serialized JSON value (objects with alphabetically ordered keys), so
// identical inputs always produce byte-identical output. Scalars follow the
// "p/q" convention; values in a quadratic extension appear as
// {"p": .., "q": .., "d": ..} meaning p + q*sqrt(d); polynomials are ordered
// term lists [[exponent-vector, "p/q"], ...] in the canonical term order.
namespace g2cover::serialize {

std::string rational(const Rational& r);       // bare string, no JSON quotes
std::string scalar(const Scalar& s);           // JSON value
std::string poly(const MultiPoly& p);          // JSON array of terms
std::string cover(const CoverData& c);
std::string curve(const Genus2Curve& c);       // {"degree", "coeffs", "field"}
std::string subcover(const EllipticSubcover& e);
std::string igusa(const IgusaInvariants& inv);
std::string absolute(const AbsoluteInvariants& inv);
std::string report(const CheckReport& rep);
std::string nielsen(const NielsenCount& n);
std::string tparam(const TParam& t);
std::string locus_point(const LocusPoint& p);  // "j" is null at a j-pole

}  // namespace g2cover::serialize
