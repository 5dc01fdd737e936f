#include "g2cover/multipoly.hpp"

#include <algorithm>
#include <numeric>

#include "g2cover/errors.hpp"

namespace g2cover {

namespace {
constexpr const char* kVarNames[kNumVars] = {"X", "x", "t", "z", "a", "b", "u", "v", "w", "T"};
}

const char* var_name(Var v) { return kVarNames[static_cast<size_t>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
  for (size_t i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

int total_degree(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool mono_less(const Mono& m1, const Mono& m2) {
  int d1 = total_degree(m1), d2 = total_degree(m2);
  if (d1 != d2) return d1 < d2;
  for (size_t i = 0; i < kNumVars; ++i)
    if (m1[i] != m2[i]) return m1[i] < m2[i];
  return false;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({Mono{}, c});
}

MultiPoly MultiPoly::variable(Var v, uint16_t power) {
  Mono m{};
  m[static_cast<size_t>(v)] = power;
  return monomial(m, Rational(1));
}

MultiPoly MultiPoly::monomial(const Mono& m, const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& s, const Term& t) { return mono_less(t.first, s.first); });
  MultiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first)
      p.terms_.back().second += t.second;
    else
      p.terms_.push_back(std::move(t));
    if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
  }
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && g2cover::total_degree(terms_[0].first) == 0);
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) fail(Errc::InvalidInput, "polynomial is not constant: " + str());
  return terms_[0].second;
}

bool MultiPoly::uses(Var v) const {
  for (auto& [m, c] : terms_)
    if (m[static_cast<size_t>(v)] > 0) return true;
  return false;
}

int MultiPoly::degree(Var v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[static_cast<size_t>(v)]));
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  // descending graded order: the first term carries the total degree
  return g2cover::total_degree(terms_[0].first);
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) fail(Errc::InvalidInput, "leading coefficient of zero");
  return terms_[0].second;
}

MultiPoly MultiPoly::leading_coeff_wrt(Var v) const { return coeff_wrt(v, degree(v)); }

MultiPoly MultiPoly::coeff_wrt(Var v, int power) const {
  std::vector<Term> out;
  size_t vi = static_cast<size_t>(v);
  for (auto& [m, c] : terms_)
    if (m[vi] == power) {
      Mono stripped = m;
      stripped[vi] = 0;
      out.push_back({stripped, c});
    }
  return from_terms(std::move(out));
}

std::vector<MultiPoly> MultiPoly::coeffs_wrt(Var v) const {
  int d = degree(v);
  std::vector<MultiPoly> out(static_cast<size_t>(std::max(0, d) + 1));
  size_t vi = static_cast<size_t>(v);
  std::vector<std::vector<Term>> buckets(out.size());
  for (auto& [m, c] : terms_) {
    Mono stripped = m;
    stripped[vi] = 0;
    buckets[m[vi]].push_back({stripped, c});
  }
  for (size_t i = 0; i < out.size(); ++i) out[i] = from_terms(std::move(buckets[i]));
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  // merge of two sorted term lists
  MultiPoly out;
  out.terms_.reserve(p.terms_.size() + q.terms_.size());
  size_t i = 0, j = 0;
  while (i < p.terms_.size() && j < q.terms_.size()) {
    const auto& tp = p.terms_[i];
    const auto& tq = q.terms_[j];
    if (tp.first == tq.first) {
      Rational c = tp.second + tq.second;
      if (!c.is_zero()) out.terms_.push_back({tp.first, c});
      ++i, ++j;
    } else if (mono_less(tq.first, tp.first)) {
      out.terms_.push_back(tp);
      ++i;
    } else {
      out.terms_.push_back(tq);
      ++j;
    }
  }
  for (; i < p.terms_.size(); ++i) out.terms_.push_back(p.terms_[i]);
  for (; j < q.terms_.size(); ++j) out.terms_.push_back(q.terms_[j]);
  return out;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) { return p + (-q); }

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return MultiPoly();
  auto grlex_desc = [](const Mono& m1, const Mono& m2) { return mono_less(m2, m1); };
  std::map<Mono, Rational, decltype(grlex_desc)> acc(grlex_desc);
  for (auto& [mp, cp] : p.terms_)
    for (auto& [mq, cq] : q.terms_) {
      Mono m;
      for (size_t k = 0; k < kNumVars; ++k) {
        unsigned e = static_cast<unsigned>(mp[k]) + mq[k];
        if (e > 0xffff) fail(Errc::InvalidInput, "exponent overflow");
        m[k] = static_cast<uint16_t>(e);
      }
      auto [it, fresh] = acc.emplace(m, cp * cq);
      if (!fresh) it->second += cp * cq;
    }
  MultiPoly out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_.push_back({m, c});
  return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  if (c.is_zero()) return MultiPoly();
  MultiPoly out = p;
  for (auto& [m, k] : out.terms_) k *= c;
  return out;
}

MultiPoly operator*(const MultiPoly& p, const Rational& c) { return c * p; }

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc(Rational(1));
  MultiPoly base = *this;
  for (unsigned k = e; k > 0; k >>= 1) {
    if (k & 1) acc = acc * base;
    if (k > 1) base = base * base;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(Var v) const {
  size_t vi = static_cast<size_t>(v);
  std::vector<Term> out;
  for (auto& [m, c] : terms_)
    if (m[vi] > 0) {
      Mono d = m;
      d[vi] -= 1;
      out.push_back({d, c * Rational(static_cast<long>(m[vi]))});
    }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::eval_partial(const std::map<Var, Rational>& point) const {
  std::vector<Term> out;
  for (auto& [m, c] : terms_) {
    Rational k = c;
    Mono rest = m;
    for (auto& [v, val] : point) {
      size_t vi = static_cast<size_t>(v);
      if (m[vi] > 0) {
        k *= val.pow(m[vi]);
        rest[vi] = 0;
      }
    }
    if (!k.is_zero()) out.push_back({rest, k});
  }
  return from_terms(std::move(out));
}

Scalar MultiPoly::eval(const std::map<Var, Scalar>& point) const {
  Scalar acc{Rational(0)};
  for (auto& [m, c] : terms_) {
    Scalar term{c};
    for (size_t vi = 0; vi < kNumVars; ++vi)
      if (m[vi] > 0) {
        auto it = point.find(static_cast<Var>(vi));
        if (it == point.end())
          fail(Errc::InvalidInput, std::string("unassigned variable ") + kVarNames[vi]);
        term = term * it->second.pow(m[vi]);
      }
    acc = acc + term;
  }
  return acc;
}

MultiPoly MultiPoly::compose_affine(Var v, const Rational& alpha, const Rational& beta) const {
  MultiPoly image = alpha * MultiPoly::variable(v) + MultiPoly(beta);
  return subst(v, image);
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& value) const {
  // Horner over the coefficients in v
  auto cs = coeffs_wrt(v);
  if (cs.empty()) return MultiPoly();
  MultiPoly acc;
  for (size_t i = cs.size(); i-- > 0;) acc = acc * value + cs[i];
  return acc;
}

MultiPoly MultiPoly::integer_primitive() const {
  if (terms_.empty()) return *this;
  Integer num_gcd = 0, den_lcm = 1;
  for (auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  }
  Rational scale{den_lcm, num_gcd};
  if (terms_[0].second.sign() < 0) scale = -scale;
  return scale * *this;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return leading_coeff().inverse() * *this;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto& [m, c] : terms_) {
    bool neg = c.sign() < 0;
    if (!s.empty()) s += neg ? " - " : " + ";
    else if (neg) s += "-";
    Rational ac = c.abs();
    bool has_vars = g2cover::total_degree(m) > 0;
    if (!ac.is_one() || !has_vars) {
      s += ac.str();
      if (has_vars) s += "*";
    }
    bool first = true;
    for (size_t vi = 0; vi < kNumVars; ++vi)
      if (m[vi] > 0) {
        if (!first) s += "*";
        s += kVarNames[vi];
        if (m[vi] > 1) s += "^" + std::to_string(m[vi]);
        first = false;
      }
  }
  return s;
}

size_t MultiPoly::checksum() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& text) {
    for (char ch : text) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  };
  for (auto& [m, c] : terms_) {
    for (auto e : m) mix(std::to_string(e) + ",");
    mix(c.str());
    mix(";");
  }
  return h;
}

}  // namespace g2cover
