#include "g2cover/serialize.hpp"

#include <json.hpp>

#include "g2cover/errors.hpp"

namespace g2cover::serialize {

namespace {

using nlohmann::json;

json jrational(const Rational& r) { return r.str(); }

json jscalar(const Scalar& s) {
  if (s.is_rational()) return jrational(s.rational());
  const QuadExtScalar& q = s.quad();
  return json{{"p", q.p().str()}, {"q", q.q().str()}, {"d", q.d().get_str()}};
}

json jpoly(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    json exps = json::array();
    for (uint16_t e : mono) exps.push_back(e);
    terms.push_back(json::array({exps, coeff.str()}));
  }
  return terms;
}

json jcurve(const Genus2Curve& c) {
  // a single quadratic context covers every coefficient, so the field tag is
  // hoisted out and extension coefficients shrink to [p, q] pairs
  Integer d(0);
  for (const Scalar& s : c.f_coeffs)
    if (!s.is_rational()) {
      if (d != 0 && d != s.quad().d())
        fail(Errc::MixedExtension, "curve coefficients span two extensions");
      d = s.quad().d();
    }
  json coeffs = json::array();
  for (const Scalar& s : c.f_coeffs) {
    if (d == 0) {
      coeffs.push_back(s.rational().str());
    } else {
      QuadExtScalar q = s.as_quad();
      coeffs.push_back(json::array({q.p().str(), q.q().str()}));
    }
  }
  json field = d == 0 ? json("Q") : json{{"quad_ext_d", d.get_str()}};
  return json{{"degree", c.degree()}, {"coeffs", coeffs}, {"field", field}};
}

json jreport(const CheckReport& rep) {
  json constants = json::object();
  for (const auto& [k, v] : rep.constants) constants[k] = v;
  return json{{"check", rep.check},
              {"status", rep.pass ? "pass" : "fail"},
              {"residual", rep.residual},
              {"constants", constants}};
}

}  // namespace

std::string rational(const Rational& r) { return r.str(); }

std::string scalar(const Scalar& s) { return jscalar(s).dump(); }

std::string poly(const MultiPoly& p) { return jpoly(p).dump(); }

std::string cover(const CoverData& c) {
  json out{{"a", c.params.a.str()},
           {"b", c.params.b.str()},
           {"F1", jpoly(c.F1)},
           {"F2", jpoly(c.F2)},
           {"F3", jpoly(c.F3)},
           {"F4", jpoly(c.F4)},
           {"phi_num", jpoly(c.phi.num())},
           {"phi_den", jpoly(c.phi.den())},
           {"case", ramification_name(c.case_tag)}};
  return out.dump();
}

std::string curve(const Genus2Curve& c) { return jcurve(c).dump(); }

std::string subcover(const EllipticSubcover& e) {
  return json{{"lambda", jscalar(e.lambda)}, {"j", jscalar(e.j)}}.dump();
}

std::string igusa(const IgusaInvariants& inv) {
  return json{{"J2", jscalar(inv.J2)},
              {"J4", jscalar(inv.J4)},
              {"J6", jscalar(inv.J6)},
              {"J10", jscalar(inv.J10)}}
      .dump();
}

std::string absolute(const AbsoluteInvariants& inv) {
  return json{{"i1", jscalar(inv.i1)},
              {"i2", jscalar(inv.i2)},
              {"i3", jscalar(inv.i3)}}
      .dump();
}

std::string report(const CheckReport& rep) { return jreport(rep).dump(); }

std::string nielsen(const NielsenCount& n) {
  json types = json::array();
  for (const CycleType& ct : n.types) {
    json one = json::array();
    for (int len : ct) one.push_back(len);
    types.push_back(one);
  }
  return json{{"group", n.group == PermGroup::S5 ? "S5" : "A5"},
              {"types", types},
              {"tuples", n.tuples},
              {"classes", n.classes},
              {"classes_mod_a5", n.classes_mod_a5}}
      .dump();
}

std::string tparam(const TParam& t) {
  json out{{"T", t.T.str()}, {"case", ramification_name(t.family)}};
  if (!t.note.empty()) out["note"] = t.note;
  return out.dump();
}

std::string locus_point(const LocusPoint& p) {
  json out{{"i1", p.i1.str()},
           {"i2", p.i2.str()},
           {"i3", p.i3.str()},
           {"j", p.j ? json(p.j->str()) : json(nullptr)}};
  return out.dump();
}

}  // namespace g2cover::serialize
