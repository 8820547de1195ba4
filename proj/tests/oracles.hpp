#pragma once

// Test-side oracles, written independently of the library algorithms they check:
// complex roots by Durand-Kerner at 256 bits, factorization mod q by exhaustive divisor search,
// rational roots by divisor enumeration, and Frobenius patterns of quintics from root counts and
// gcd(x^(q^2) - x, f) in a separate small F_q arithmetic.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Coeffs = std::vector<mpz_class>;  // ascending

inline constexpr unsigned kBits = 256;

struct Cx {
  mpf_class re{0, kBits}, im{0, kBits};
  Cx() = default;
  Cx(const mpf_class& r, const mpf_class& i) : re(r, kBits), im(i, kBits) {}
};

inline Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline Cx operator/(const Cx& a, const Cx& b) {
  mpf_class d(b.re * b.re + b.im * b.im, kBits);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline mpf_class norm2(const Cx& a) { return mpf_class(a.re * a.re + a.im * a.im, kBits); }

inline Cx eval(const Coeffs& f, const Cx& z) {
  Cx acc;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * z + Cx(mpf_class(*it, kBits), mpf_class(0, kBits));
  return acc;
}

// All complex roots of a squarefree f by Weierstrass iteration.
inline std::vector<Cx> roots(const Coeffs& f) {
  const int n = static_cast<int>(f.size()) - 1;
  mpf_class lc(f.back(), kBits);
  Coeffs g = f;
  mpf_class bound(1, kBits);
  for (int i = 0; i < n; ++i) {
    mpf_class c(abs(f[i]), kBits);
    c /= abs(lc);
    if (c + 1 > bound) bound = c + 1;
  }
  std::vector<Cx> z(n);
  Cx seed(mpf_class(0.4, kBits), mpf_class(0.9, kBits));
  Cx w(mpf_class(1, kBits), mpf_class(0, kBits));
  for (int i = 0; i < n; ++i) {
    w = w * seed;
    z[i] = Cx(w.re * bound, w.im * bound);
  }
  const mpf_class tiny("1e-70", kBits);
  for (int iter = 0; iter < 5000; ++iter) {
    mpf_class move(0, kBits);
    for (int i = 0; i < n; ++i) {
      Cx den(lc, mpf_class(0, kBits));
      for (int j = 0; j < n; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      Cx step = eval(f, z[i]) / den;
      z[i] = z[i] - step;
      mpf_class s = norm2(step);
      if (s > move) move = s;
    }
    if (move < tiny) break;
  }
  return z;
}

inline bool near_integer(const mpf_class& v, const mpf_class& tol, mpz_class* out = nullptr) {
  mpf_class r(0, kBits);
  mpf_floor(r.get_mpf_t(), mpf_class(v + 0.5, kBits).get_mpf_t());
  if (out) *out = mpz_class(r);
  return abs(mpf_class(v - r, kBits)) < tol;
}

// lc^(2n-2) prod_{i<j} (r_i - r_j)^2, rounded.
inline mpz_class discriminant(const Coeffs& f) {
  const int n = static_cast<int>(f.size()) - 1;
  auto z = roots(f);
  Cx acc(mpf_class(1, kBits), mpf_class(0, kBits));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Cx d = z[i] - z[j];
      acc = acc * d * d;
    }
  mpf_class lc(f.back(), kBits), scale(1, kBits);
  for (int k = 0; k < 2 * n - 2; ++k) scale *= lc;
  mpz_class out;
  near_integer(mpf_class(acc.re * scale, kBits), mpf_class("1e-20", kBits), &out);
  return out;
}

inline int real_root_count(const Coeffs& f) {
  int c = 0;
  for (auto& z : roots(f))
    if (abs(z.im) < mpf_class("1e-40", kBits)) ++c;
  return c;
}

// Number of roots of f lying in Q(r_0): root r_j is in Q(r_0) iff some bijection pi of the roots with
// pi(r_0) = r_j is interpolated by a polynomial h with rational coefficients (denominators dividing
// disc(f) for monic integral f).
inline int roots_in_stem_field(const Coeffs& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  auto z = roots(monic);
  const mpz_class disc = discriminant(monic);
  const mpf_class D(disc, kBits);
  const mpf_class tol("1e-25", kBits);
  // Lagrange basis polynomials L_i(x) = prod_{k != i} (x - z_k) / (z_i - z_k).
  std::vector<std::vector<Cx>> basis(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Cx> p{Cx(mpf_class(1, kBits), mpf_class(0, kBits))};
    Cx den(mpf_class(1, kBits), mpf_class(0, kBits));
    for (int k = 0; k < n; ++k) {
      if (k == i) continue;
      std::vector<Cx> q(p.size() + 1);
      for (std::size_t t = 0; t < p.size(); ++t) {
        q[t + 1] = q[t + 1] + p[t];
        q[t] = q[t] - p[t] * z[k];
      }
      p = std::move(q);
      den = den * (z[i] - z[k]);
    }
    for (auto& c : p) c = c / den;
    basis[i] = std::move(p);
  }
  int count = 0;
  std::vector<int> perm(n);
  for (int j = 0; j < n; ++j) {
    std::iota(perm.begin(), perm.end(), 0);
    bool found = false;
    do {
      if (perm[0] != j) continue;
      bool rational = true;
      for (int t = 0; t < n && rational; ++t) {
        Cx c;
        for (int i = 0; i < n; ++i) c = c + z[perm[i]] * basis[i][t];
        rational = abs(mpf_class(c.im * D, kBits)) < tol && near_integer(mpf_class(c.re * D, kBits), tol);
      }
      found = rational;
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
    if (found) ++count;
  }
  return count;
}

// Small F_q arithmetic on ascending coefficient vectors.
using Mod = std::vector<std::int64_t>;

inline void trim(Mod& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Mod reduce(const Coeffs& f, std::int64_t q) {
  Mod a;
  for (auto& c : f) {
    mpz_class r = c % q;
    if (r < 0) r += q;
    a.push_back(r.get_si());
  }
  trim(a);
  return a;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t q) {
  std::int64_t r = 1, b = a % q, e = q - 2;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

// Remainder of a by b; quotient optional.
inline Mod rem(Mod a, const Mod& b, std::int64_t q, Mod* quot = nullptr) {
  const int db = static_cast<int>(b.size()) - 1;
  const std::int64_t ib = inverse(b.back(), q);
  Mod qq(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    std::int64_t c = a[i] * ib % q;
    if (!c) continue;
    qq[i - db] = c;
    for (int k = 0; k <= db; ++k) a[i - db + k] = ((a[i - db + k] - c * b[k]) % q + q) % q;
  }
  trim(a);
  if (quot) {
    trim(qq);
    *quot = qq;
  }
  return a;
}

inline Mod mul(const Mod& a, const Mod& b, std::int64_t q) {
  if (a.empty() || b.empty()) return {};
  Mod r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  trim(r);
  return r;
}

inline Mod gcd(Mod a, Mod b, std::int64_t q) {
  while (!b.empty()) {
    Mod r = rem(a, b, q);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Monic irreducible factors with multiplicity, by trial division over every monic polynomial of
// degree up to deg/2 in increasing order.
inline std::vector<std::pair<Mod, int>> factor_mod(const Coeffs& f, std::int64_t q) {
  Mod a = reduce(f, q);
  std::vector<std::pair<Mod, int>> out;
  const std::int64_t il = inverse(a.back(), q);
  for (auto& c : a) c = c * il % q;
  for (int d = 1; 2 * d <= static_cast<int>(a.size()) - 1; ++d) {
    std::int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= q;
    for (std::int64_t idx = 0; idx < total; ++idx) {
      Mod h(d + 1, 0);
      std::int64_t t = idx;
      for (int i = 0; i < d; ++i) {
        h[i] = t % q;
        t /= q;
      }
      h[d] = 1;
      int e = 0;
      Mod quot;
      while (static_cast<int>(a.size()) - 1 >= d && rem(a, h, q, &quot).empty()) {
        a = quot;
        ++e;
      }
      if (e) out.push_back({h, e});
      if (2 * d > static_cast<int>(a.size()) - 1) break;
    }
  }
  if (a.size() > 1) {
    bool merged = false;
    for (auto& [h, e] : out)
      if (h == a) {
        ++e;
        merged = true;
      }
    if (!merged) out.push_back({a, 1});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return std::lexicographical_compare(x.first.rbegin(), x.first.rend(), y.first.rbegin(), y.first.rend());
  });
  return out;
}

inline std::vector<long> divisors_of(long n) {
  std::vector<long> d;
  n = std::labs(n);
  for (long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  return d;
}

inline mpq_class eval(const Coeffs& f, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + mpq_class(*it);
  return acc;
}

// Rational roots as +-d/e with d | a_0, e | lc (a zero root handled separately).
inline std::set<mpq_class> rational_roots(const Coeffs& f) {
  std::set<mpq_class> out;
  std::size_t k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  if (k > 0) out.insert(0);
  for (long d : divisors_of(f[k].get_si()))
    for (long e : divisors_of(f.back().get_si()))
      for (int s : {1, -1}) {
        mpq_class x(s * d, e);
        x.canonicalize();
        if (eval(f, x) == 0) out.insert(x);
      }
  return out;
}

// Monic integer quadratic factors x^2 + b x + c with c | a_0 and |b| <= bound.
inline std::vector<std::pair<long, long>> quadratic_factors(const Coeffs& f, long bound) {
  std::vector<std::pair<long, long>> out;
  for (long c0 : divisors_of(f[0].get_si()))
    for (long c : {c0, -c0})
      for (long b = -bound; b <= bound; ++b) {
        Coeffs r = f;
        // divide by x^2 + b x + c over Z
        const int n = static_cast<int>(r.size()) - 1;
        Coeffs quo(n - 1, 0);
        for (int i = n; i >= 2; --i) {
          quo[i - 2] = r[i];
          r[i - 1] -= b * r[i];
          r[i - 2] -= c * r[i];
          r[i] = 0;
        }
        if (r[0] == 0 && r[1] == 0) out.push_back({b, c});
      }
  return out;
}

enum class QuinticPattern { other, one_one_three, two_three };

// Factorization pattern of a quintic modulo a good prime q, only distinguishing the two patterns
// that contain a 3-cycle.
inline QuinticPattern quintic_pattern(const Coeffs& f, std::int64_t q) {
  const Mod a = reduce(f, q);
  int r = 0;
  for (std::int64_t x = 0; x < q; ++x) {
    std::int64_t acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * x + *it) % q;
    if (acc == 0) ++r;
  }
  // x^(q^2) mod a by repeated q-th powering.
  auto powq = [&](const Mod& base) {
    Mod result{1}, b = base;
    std::int64_t e = q;
    while (e) {
      if (e & 1) result = rem(mul(result, b, q), a, q);
      b = rem(mul(b, b, q), a, q);
      e >>= 1;
    }
    return result;
  };
  Mod x2 = powq(powq(Mod{0, 1}));
  Mod diff = x2;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] - 1 + q) % q;
  trim(diff);
  const int quad_roots = diff.empty() ? 5 : static_cast<int>(gcd(a, diff, q).size()) - 1;  // roots in F_{q^2}
  if (r == 2 && quad_roots == 2) return QuinticPattern::one_one_three;
  if (r == 0 && quad_roots == 2) return QuinticPattern::two_three;
  return QuinticPattern::other;
}

inline std::vector<std::int64_t> small_primes(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 2; n <= bound; ++n) {
    bool prime = true;
    for (std::int64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) out.push_back(n);
  }
  return out;
}

// Solvable transitive quintic groups have no element of order 3; S_5 and A_5 have 3-cycles with
// density 1/3, so a 3-cycle pattern appears below 600 except with negligible probability.
inline bool quintic_looks_solvable(const Coeffs& f, const mpz_class& disc) {
  for (auto q : small_primes(600)) {
    if (f.back() % q == 0 || disc % q == 0) continue;
    if (quintic_pattern(f, q) != QuinticPattern::other) return false;
  }
  return true;
}

}  // namespace oracle
