#pragma once

// Arbitrary-precision integer helpers on top of GMP: primality, factoring,
// squarefree parts, and small modular arithmetic used across the library.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperend {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs_value(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline std::string to_string(const Integer& a) { return a.get_str(); }
inline std::string to_string(const Rational& a) { return a.get_str(); }

inline std::uint64_t to_u64(const Integer& a) {
  if (a < 0 || mpz_sizeinbase(a.get_mpz_t(), 2) > 64)
    throw std::out_of_range("integer does not fit in 64 bits");
  std::uint64_t r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, a.get_mpz_t());
  return r;
}

inline Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

inline bool fits_u63(const Integer& a) {
  return a >= 0 && mpz_sizeinbase(a.get_mpz_t(), 2) <= 63;
}

// Residue of a in [0, m).
inline std::uint64_t mod_u64(const Integer& a, std::uint64_t m) {
  Integer r;
  Integer mm = from_u64(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), mm.get_mpz_t());
  return to_u64(r);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Probable-prime test for big integers (exact below 2^64).
inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) return is_prime_u64(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

inline std::uint64_t next_prime_u64(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime_u64(c)) ++c;
  return c;
}

namespace detail {

inline Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = seed % n, c = (seed * 7 + 1) % n, m = 64, g = 1, r = 1, q = 1;
  Integer x, ys;
  auto f = [&](const Integer& v) {
    Integer t = v * v + c;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return t;
  };
  while (g == 1) {
    x = y;
    for (Integer i = 0; i < r; ++i) y = f(y);
    Integer k = 0;
    while (k < r && g == 1) {
      ys = y;
      Integer lim = std::min<Integer>(m, r - k);
      for (Integer i = 0; i < lim; ++i) {
        y = f(y);
        q = q * abs_value(x - y);
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer diff = abs_value(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

inline void factor_rec(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    factor_rec(root, out);
    factor_rec(root, out);
    return;
  }
  for (unsigned long seed = 2;; ++seed) {
    Integer d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      factor_rec(d, out);
      factor_rec(n / d, out);
      return;
    }
  }
}

}  // namespace detail

// Prime factorization of |n| in increasing prime order.
inline std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw std::domain_error("cannot factor zero");
  Integer m = abs_value(n);
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    if (static_cast<unsigned long>(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      found[p] += 1;
      m /= p;
    }
  }
  detail::factor_rec(m, found);
  return {found.begin(), found.end()};
}

// The squarefree d with n = d * m^2, sign preserved.
inline Integer squarefree_part(const Integer& n) {
  if (n == 0) throw std::domain_error("squarefree part of zero");
  Integer d = n < 0 ? -1 : 1;
  for (auto& [q, e] : factor_integer(n))
    if (e % 2) d *= q;
  return d;
}

inline bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (auto& pe : factor_integer(n))
    if (pe.second > 1) return false;
  return true;
}

inline std::optional<Integer> exact_sqrt(const Integer& n) {
  if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline bool is_square(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return exact_sqrt(c.get_num()).has_value() && exact_sqrt(c.get_den()).has_value();
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Multiplicative order of a modulo the prime p (a not divisible by p).
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("order of zero residue");
  std::uint64_t order = p - 1;
  for (auto& [q, e] : factor_integer(from_u64(p - 1))) {
    std::uint64_t qq = to_u64(q);
    for (unsigned i = 0; i < e; ++i) {
      if (order % qq == 0 && powmod(a, order / qq, p) == 1)
        order /= qq;
      else
        break;
    }
  }
  return order;
}

inline std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  for (std::uint64_t g = 2; g < p; ++g)
    if (multiplicative_order(g, p) == p - 1) return g;
  throw std::logic_error("no primitive root");
}

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperend
