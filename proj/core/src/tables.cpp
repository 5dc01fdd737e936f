#include "g2cover/tables.hpp"

#include <cstddef>

#include "g2cover/errors.hpp"

namespace g2cover::tables {
namespace {

Rational R(const char* s) {
  auto r = Rational::parse(s);
  if (!r) fail(Errc::InvalidInput, std::string("bad table literal: ") + s);
  return *r;
}

struct Item1 {
  const char* c;
  int e0;
};
struct Item2 {
  const char* c;
  int e0, e1;
};
struct Item3 {
  const char* c;
  int e0, e1, e2;
};

template <size_t N>
MultiPoly build(const Item1 (&items)[N], Var v0) {
  std::vector<MultiPoly::Term> ts;
  ts.reserve(N);
  for (const auto& it : items) {
    Mono m{};
    m[static_cast<size_t>(v0)] = static_cast<uint16_t>(it.e0);
    ts.push_back({m, R(it.c)});
  }
  return MultiPoly::from_terms(std::move(ts));
}

template <size_t N>
MultiPoly build(const Item2 (&items)[N], Var v0, Var v1) {
  std::vector<MultiPoly::Term> ts;
  ts.reserve(N);
  for (const auto& it : items) {
    Mono m{};
    m[static_cast<size_t>(v0)] = static_cast<uint16_t>(it.e0);
    m[static_cast<size_t>(v1)] = static_cast<uint16_t>(it.e1);
    ts.push_back({m, R(it.c)});
  }
  return MultiPoly::from_terms(std::move(ts));
}

template <size_t N>
MultiPoly build(const Item3 (&items)[N], Var v0, Var v1, Var v2) {
  std::vector<MultiPoly::Term> ts;
  ts.reserve(N);
  for (const auto& it : items) {
    Mono m{};
    m[static_cast<size_t>(v0)] = static_cast<uint16_t>(it.e0);
    m[static_cast<size_t>(v1)] = static_cast<uint16_t>(it.e1);
    m[static_cast<size_t>(v2)] = static_cast<uint16_t>(it.e2);
    ts.push_back({m, R(it.c)});
  }
  return MultiPoly::from_terms(std::move(ts));
}

#include "tables_data.inc"

MultiPoly V(Var v) { return MultiPoly::variable(v); }

const MultiPoly kA = V(Var::a);
const MultiPoly kB = V(Var::b);
const MultiPoly kZ = V(Var::z);
const MultiPoly kT = V(Var::T);
const MultiPoly kU = V(Var::u);
const MultiPoly kV = V(Var::v);

}  // namespace

const std::vector<MultiPoly>& g3_display_coeffs() {
  static const std::vector<MultiPoly> t = {
      (-1) * kB.pow(4) * build(kG3A0Inner, Var::a, Var::b, Var::z),
      (-1) * kB.pow(2) * build(kG3A1Inner, Var::a, Var::b, Var::z),
      build(kG3A2, Var::a, Var::b, Var::z),
      (2 * kA + 1) * build(kG3A3Inner, Var::a, Var::b, Var::z),
  };
  return t;
}

const MultiPoly& g3_display_defect() {
  static const MultiPoly t = (-12) * kA * kB.pow(4) * kZ;
  return t;
}

const CaseDisplays& case1() {
  static const CaseDisplays t = [] {
    CaseDisplays d;
    d.z = RatFunc(kA * (8 + kA), 4 * (2 * kA + 1));
    d.lambda = RatFunc(4 * (2 * kA + 1).pow(3) * (kA * kA + 4 * kA + 8).pow(2),
                       (2 - kA).pow(5) * (kA + 2).pow(3));
    d.T = RatFunc((kA - 2).pow(2), 25 * (kA + 2).pow(2));
    d.J2 = build(kY1J2, Var::T);
    d.i1 = RatFunc(45 * build(kY1P1, Var::T), d.J2.pow(2));
    d.i2 = RatFunc(135 * build(kY1P2, Var::T), d.J2.pow(3));
    d.i3 = RatFunc(Rational(49766400) * kT * (9 * kT - 1).pow(5) *
                       (25 * kT * kT + 6 * kT + 1).pow(5) * (25 * kT - 1).pow(7),
                   d.J2.pow(5));
    d.j = RatFunc(build(kY1JNumBase, Var::T).pow(3),
                  4096 * kT.pow(5) * (25 * kT - 1).pow(2) *
                      (25 * kT * kT + 6 * kT + 1).pow(4) * (9 * kT - 1).pow(6));
    return d;
  }();
  return t;
}

const CaseDisplays& case2() {
  static const CaseDisplays t = [] {
    CaseDisplays d;
    d.z = RatFunc((3 * kA - 1) * (kA - 1), 2 * kA + 1);
    d.lambda = RatFunc((3 * kA - 1).pow(3) * (kA + 8).pow(2) * (kA - 1),
                       27 * kA * (kA - 2).pow(5));
    d.T = RatFunc(kA.pow(2), (kA - 2).pow(2));
    d.J2 = build(kY2J2, Var::T);
    d.i1 = RatFunc((-9) * build(kY2P1, Var::T), d.J2.pow(2));
    d.i2 = RatFunc(Rational(-27, 8) * build(kY2P2, Var::T), d.J2.pow(3));
    d.i3 = RatFunc(Rational(-59049, 4096) * kT.pow(2) * (25 * kT - 1).pow(5) *
                       (25 * kT - 16).pow(5) * (kT - 1).pow(7),
                   d.J2.pow(5));
    d.j = RatFunc(build(kY2JNumBase, Var::T).pow(3),
                  729 * kT * (kT - 1).pow(2) * (25 * kT - 16).pow(4) *
                      (25 * kT - 1).pow(6));
    return d;
  }();
  return t;
}

const std::vector<MultiPoly>& case2_model_coeffs() {
  static const std::vector<MultiPoly> t = {
      (2 * kA + 1) * (9 * kA - 8).pow(2),
      build(kCase2B2, Var::a),
      build(kCase2B1, Var::a),
      (kA + 8).pow(2) * (kA - 1).pow(3) * (3 * kA - 1),
  };
  return t;
}

const RatFunc& case3_quadratic_constant() {
  static const RatFunc t(3 * kA * (kA * kA - 4), 4 * (2 * kA + 1) * (kA - 4));
  return t;
}

const RatFunc& case3_z() {
  static const RatFunc t(kA * kA + 2 * kA * kB + 2 * kA - 2 * kB, 2 * (2 * kA + 1));
  return t;
}

const std::vector<std::pair<std::string, MultiPoly>>& case3_nonvanishing() {
  static const std::vector<std::pair<std::string, MultiPoly>> t = [] {
    const std::vector<MultiPoly> fs = {
        kA,
        kA * kA - 4,
        2 * kA + 1,
        3 * kA.pow(3) - 12 * kA - 1,
        kA - 4,
        build(kCase3Quintic, Var::a),
    };
    std::vector<std::pair<std::string, MultiPoly>> out;
    for (const auto& f : fs) out.push_back({f.str(), f});
    return out;
  }();
  return t;
}

const std::vector<std::pair<MultiPoly, int>>& v4_factors_case1() {
  static const std::vector<std::pair<MultiPoly, int>> t = {
      {build(kV4Case1F0, Var::T), 1}, {build(kV4Case1F1, Var::T), 1},
      {build(kV4Case1F2, Var::T), 1}, {build(kV4Case1F3, Var::T), 1},
      {build(kV4Case1F4, Var::T), 1}, {build(kV4Case1F5, Var::T), 1},
      {build(kV4Case1F6, Var::T), 1},
  };
  return t;
}

const std::vector<std::pair<MultiPoly, int>>& v4_factors_case2() {
  static const std::vector<std::pair<MultiPoly, int>> t = {
      {build(kV4Case2F0, Var::T), 1}, {build(kV4Case2F1, Var::T), 1},
      {build(kV4Case2F2, Var::T), 1}, {build(kV4Case2F3, Var::T), 1},
      {build(kV4Case2F4, Var::T), 1}, {build(kV4Case2F5, Var::T), 1},
      {build(kV4Case2F6, Var::T), 1},
  };
  return t;
}

const std::vector<std::pair<MultiPoly, int>>& v4_factors_case3() {
  static const std::vector<std::pair<MultiPoly, int>> t = {
      {build(kV4Case3F0, Var::a), 1}, {build(kV4Case3F1, Var::a), 2},
      {build(kV4Case3F2, Var::a), 2}, {build(kV4Case3F3, Var::a), 1},
      {build(kV4Case3F4, Var::a), 1}, {build(kV4Case3F5, Var::a), 1},
      {build(kV4Case3F6, Var::a), 1}, {build(kV4Case3F7, Var::a), 1},
  };
  return t;
}

const MultiPoly& w_relation_c2() {
  static const MultiPoly t = 64 * kV.pow(2) * (kU - 4 * kV + 1).pow(2);
  return t;
}

const MultiPoly& w_relation_c1() {
  static const MultiPoly t = (-4) * kV * build(kWRelC1Inner, Var::u, Var::v);
  return t;
}

const MultiPoly& w_relation_c0() {
  static const MultiPoly t =
      (kU * kU + 4 * kV * kU + 4 * kV * kV - 48 * kV).pow(3);
  return t;
}

const MultiPoly& delta_w_display() {
  static const MultiPoly t = 16 * (kV - 16 + 2 * kU) *
                             build(kDeltaWCubic, Var::u, Var::v) *
                             (kU - 4 * kV - 2).pow(2) *
                             (16 * kV - 4 * kU * kV + kU * kU).pow(2) * kV.pow(2);
  return t;
}

const RatFunc& w_of_z() {
  static const RatFunc t((kZ * kZ - kZ + 1).pow(3), kZ.pow(2) * (kZ - 1).pow(2));
  return t;
}

const MultiPoly& uv_line() {
  static const MultiPoly t = 2 * kU + kV - 16;
  return t;
}

const std::vector<std::pair<std::string, size_t>>& table_checksums() {
  static const std::vector<std::pair<std::string, size_t>> t = [] {
    std::vector<std::pair<std::string, size_t>> out;
    auto poly = [&](const std::string& name, const MultiPoly& p) {
      out.push_back({name, p.checksum()});
    };
    auto rf = [&](const std::string& name, const RatFunc& f) {
      poly(name + ".num", f.num());
      poly(name + ".den", f.den());
    };
    const auto& g3 = g3_display_coeffs();
    for (size_t k = 0; k < g3.size(); ++k)
      poly("g3_display.a" + std::to_string(k), g3[k]);
    poly("g3_display.defect", g3_display_defect());
    auto cases = [&](const std::string& name, const CaseDisplays& d) {
      rf(name + ".z", d.z);
      rf(name + ".lambda", d.lambda);
      rf(name + ".T", d.T);
      rf(name + ".i1", d.i1);
      rf(name + ".i2", d.i2);
      rf(name + ".i3", d.i3);
      poly(name + ".J2", d.J2);
      rf(name + ".j", d.j);
    };
    cases("case1", case1());
    cases("case2", case2());
    const auto& m2 = case2_model_coeffs();
    static const char* kB2Names[] = {"b3", "b2", "b1", "b0"};
    for (size_t k = 0; k < m2.size(); ++k)
      poly(std::string("case2_model.") + kB2Names[k], m2[k]);
    rf("case3.quadratic_constant", case3_quadratic_constant());
    rf("case3.z", case3_z());
    const auto& nv = case3_nonvanishing();
    for (size_t k = 0; k < nv.size(); ++k)
      poly("case3.nonvanishing." + std::to_string(k), nv[k].second);
    auto v4 = [&](const std::string& name,
                  const std::vector<std::pair<MultiPoly, int>>& fs) {
      for (size_t k = 0; k < fs.size(); ++k)
        poly(name + "." + std::to_string(k), fs[k].first);
    };
    v4("v4_case1", v4_factors_case1());
    v4("v4_case2", v4_factors_case2());
    v4("v4_case3", v4_factors_case3());
    poly("w_relation.c2", w_relation_c2());
    poly("w_relation.c1", w_relation_c1());
    poly("w_relation.c0", w_relation_c0());
    poly("delta_w", delta_w_display());
    rf("w_of_z", w_of_z());
    poly("uv_line", uv_line());
    return out;
  }();
  return t;
}

}  // namespace g2cover::tables
