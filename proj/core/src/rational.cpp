#include "g2cover/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

#include "g2cover/errors.hpp"

namespace g2cover {

Rational::Rational(long n, long d) {
  if (d == 0) fail(Errc::InvalidInput, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational::Rational(const Integer& n, const Integer& d) {
  if (sgn(d) == 0) fail(Errc::InvalidInput, "rational with zero denominator");
  v_ = mpq_class(n) / mpq_class(d);
  v_.canonicalize();
}

std::optional<Rational> Rational::parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string ns = slash == std::string::npos ? text : text.substr(0, slash);
  std::string ds = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds)) return std::nullopt;
  Integer n(ns), d(ds);
  if (sgn(d) == 0) return std::nullopt;
  return Rational(n, d);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) fail(Errc::InvalidInput, "inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) fail(Errc::InvalidInput, "division by zero rational");
  return Rational(mpq_class(x.v_ / y.v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Errc::InvalidInput, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  bool neg = e < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
  Rational r{Integer(n), Integer(d)};
  return neg ? r.inverse() : r;
}

std::optional<Rational> Rational::sqrt() const {
  if (sign() < 0) return std::nullopt;
  auto n = integer_sqrt(Integer(v_.get_num()));
  if (!n) return std::nullopt;
  auto d = integer_sqrt(Integer(v_.get_den()));
  if (!d) return std::nullopt;
  return Rational(*n, *d);
}

size_t Rational::hash() const {
  // FNV-1a over the canonical decimal text; cheap and stable.
  size_t h = 1469598103934665603ull;
  for (char c : str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<Integer> integer_sqrt(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

// Pollard rho with Brent's cycle detection; n odd, composite, > 1.
Integer pollard_rho(const Integer& n, unsigned long seed) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(seed);
  while (true) {
    Integer y = rng.get_z_range(n - 3) + 2;
    Integer c = rng.get_z_range(n - 1) + 1;
    Integer m = 128, g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        Integer lim = std::min(m, Integer(r - k));
        for (Integer i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * ((x > y) ? x - y : y - x) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        Integer d = (x > ys) ? x - ys : ys - x;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::vector<std::pair<Integer, unsigned>>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    for (auto& [p, e] : out)
      if (p == n) {
        ++e;
        return;
      }
    out.emplace_back(n, 1);
    return;
  }
  // perfect power peel: n = b^k
  for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::vector<std::pair<Integer, unsigned>> sub;
      factor_into(root, sub);
      for (auto& [p, e] : sub) {
        bool merged = false;
        for (auto& [q, f] : out)
          if (q == p) {
            f += e * k;
            merged = true;
            break;
          }
        if (!merged) out.emplace_back(p, e * k);
      }
      return;
    }
  }
  Integer d = pollard_rho(n, 0x9e3779b97f4a7c15ull);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Integer squarefree_part(const Integer& n) {
  if (sgn(n) == 0) return 0;
  Integer m = ::abs(n);
  Integer result = sgn(n);
  // strip small primes first; keeps Pollard rho for genuinely hard cofactors
  static const unsigned long small[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                        41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  for (unsigned long p : small) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e % 2 == 1) result *= static_cast<long>(p);
  }
  if (m > 1) {
    std::vector<std::pair<Integer, unsigned>> fac;
    factor_into(m, fac);
    for (auto& [p, e] : fac)
      if (e % 2 == 1) result *= p;
  }
  return result;
}

}  // namespace g2cover
