#pragma once

// Polynomials over the prime field F_l (l < 2^63) and their complete
// factorization: squarefree split, distinct-degree split, Cantor-Zassenhaus.

#include <hyperend/exactalg/integer.hpp>
#include <hyperend/exactalg/polynomial.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperend {

class ModPolynomial {
 public:
  ModPolynomial() = default;
  ModPolynomial(std::uint64_t modulus, std::vector<std::uint64_t> coeffs) : l_(modulus), c_(std::move(coeffs)) {
    for (auto& a : c_) a %= l_;
    trim();
  }
  ModPolynomial(std::uint64_t modulus, const IntPolynomial& f) : l_(modulus) {
    c_.reserve(f.coeffs().size());
    for (auto& a : f.coeffs()) c_.push_back(mod_u64(a, modulus));
    trim();
  }

  static ModPolynomial constant(std::uint64_t l, std::uint64_t c) { return ModPolynomial(l, std::vector<std::uint64_t>{c}); }
  static ModPolynomial monomial(std::uint64_t l, std::uint64_t c, std::size_t k) {
    std::vector<std::uint64_t> v(k + 1, 0);
    v[k] = c % l;
    return {l, std::move(v)};
  }

  std::uint64_t modulus() const { return l_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }

  friend bool operator==(const ModPolynomial& a, const ModPolynomial& b) { return a.l_ == b.l_ && a.c_ == b.c_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= l_ ? s - l_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (l_ - b); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mulmod(a, b, l_); }
  std::uint64_t inv(std::uint64_t a) const {
    if (a % l_ == 0) throw std::domain_error("inverse of zero in F_l");
    return powmod(a, l_ - 2, l_);
  }

  friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b) {
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.add(a[i], b[i]);
    return {a.l_ ? a.l_ : b.l_, std::move(r)};
  }
  friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b) {
    std::uint64_t l = a.l_ ? a.l_ : b.l_;
    ModPolynomial z(l, std::vector<std::uint64_t>{});
    std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = z.sub(a[i], b[i]);
    return {l, std::move(r)};
  }
  friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return ModPolynomial(a.l_, std::vector<std::uint64_t>{});
    const std::uint64_t l = a.l_;
    std::vector<unsigned __int128> acc(a.c_.size() + b.c_.size() - 1, 0);
    // Accumulate in 128 bits and reduce periodically to avoid overflow.
    const unsigned __int128 limit = ~static_cast<unsigned __int128>(0) >> 2;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        acc[i + j] += static_cast<unsigned __int128>(a.c_[i]) * b.c_[j];
        if (acc[i + j] > limit) acc[i + j] %= l;
      }
    }
    std::vector<std::uint64_t> r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint64_t>(acc[i] % l);
    return {l, std::move(r)};
  }
  ModPolynomial scaled(std::uint64_t c) const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mul(c_[i], c % l_);
    return {l_, std::move(r)};
  }
  ModPolynomial monic() const { return is_zero() ? *this : scaled(inv(lead())); }

  ModPolynomial derivative() const {
    if (c_.size() <= 1) return ModPolynomial(l_, std::vector<std::uint64_t>{});
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mul(c_[i], i % l_);
    return {l_, std::move(r)};
  }

  std::uint64_t evaluate(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add(mul(acc, x), *it);
    return acc;
  }

  std::pair<ModPolynomial, ModPolynomial> divmod(const ModPolynomial& b) const {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (degree() < b.degree()) return {ModPolynomial(l_, std::vector<std::uint64_t>{}), *this};
    std::vector<std::uint64_t> r = c_, q(degree() - b.degree() + 1, 0);
    const std::uint64_t ib = inv(b.lead());
    const int db = b.degree();
    for (int i = degree(); i >= db; --i) {
      if (!r[i]) continue;
      std::uint64_t c = mul(r[i], ib);
      q[i - db] = c;
      for (int j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(c, b.c_[j]));
    }
    r.resize(db);
    return {{l_, std::move(q)}, {l_, std::move(r)}};
  }
  friend ModPolynomial operator%(const ModPolynomial& a, const ModPolynomial& b) { return a.divmod(b).second; }
  friend ModPolynomial operator/(const ModPolynomial& a, const ModPolynomial& b) { return a.divmod(b).first; }

  IntPolynomial to_int() const {
    std::vector<Integer> v;
    v.reserve(c_.size());
    for (auto a : c_) v.push_back(from_u64(a));
    return IntPolynomial(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::uint64_t l_ = 2;
  std::vector<std::uint64_t> c_;
};

inline bool mod_less(const ModPolynomial& a, const ModPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

inline ModPolynomial gcd(ModPolynomial a, ModPolynomial b) {
  while (!b.is_zero()) {
    ModPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

struct ModBezout {
  ModPolynomial gcd, s, t;
};

inline ModBezout extended_gcd(const ModPolynomial& a, const ModPolynomial& b) {
  const std::uint64_t l = a.modulus();
  ModPolynomial r0 = a, r1 = b, s0 = ModPolynomial::constant(l, 1), s1(l, std::vector<std::uint64_t>{}), t0(l, std::vector<std::uint64_t>{}),
                t1 = ModPolynomial::constant(l, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    ModPolynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  std::uint64_t iv = r0.inv(r0.lead());
  return {r0.scaled(iv), s0.scaled(iv), t0.scaled(iv)};
}

inline ModPolynomial mulmod(const ModPolynomial& a, const ModPolynomial& b, const ModPolynomial& m) {
  return (a * b) % m;
}

inline ModPolynomial powmod(ModPolynomial base, Integer e, const ModPolynomial& m) {
  ModPolynomial r = ModPolynomial::constant(m.modulus(), 1) % m;
  base = base % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

template <typename P>
struct FactorList {
  using value_type = P;
  std::vector<std::pair<P, unsigned>> factors;

  std::size_t count_with_multiplicity() const {
    std::size_t n = 0;
    for (auto& f : factors) n += f.second;
    return n;
  }
  std::vector<int> degrees() const {
    std::vector<int> d;
    for (auto& [f, e] : factors)
      for (unsigned i = 0; i < e; ++i) d.push_back(f.degree());
    std::sort(d.begin(), d.end());
    return d;
  }
};

struct ModFactorList : FactorList<ModPolynomial> {
  std::uint64_t unit = 1;
};

namespace detail {

// Squarefree decomposition over F_l; handles p-th powers in characteristic l.
inline void mod_squarefree(const ModPolynomial& f, unsigned mult, std::vector<std::pair<ModPolynomial, unsigned>>& out) {
  const std::uint64_t l = f.modulus();
  if (f.degree() < 1) return;
  ModPolynomial df = f.derivative();
  if (df.is_zero()) {
    // f = g(x^l); over F_l, g(x^l) = g(x)^l.
    std::vector<std::uint64_t> g;
    for (std::size_t i = 0; i < f.coeffs().size(); i += l) g.push_back(f.coeffs()[i]);
    mod_squarefree(ModPolynomial(l, std::move(g)), mult * static_cast<unsigned>(l), out);
    return;
  }
  ModPolynomial c = gcd(f, df);
  ModPolynomial w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPolynomial y = gcd(w, c);
    ModPolynomial z = w / y;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) {
    std::vector<std::uint64_t> g;
    for (std::size_t k = 0; k < c.coeffs().size(); k += l) g.push_back(c.coeffs()[k]);
    mod_squarefree(ModPolynomial(l, std::move(g)).monic(), mult * static_cast<unsigned>(l), out);
  }
}

inline ModPolynomial random_poly(std::uint64_t l, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, l - 1);
  std::vector<std::uint64_t> v(below_degree);
  for (auto& a : v) a = dist(rng);
  return {l, std::move(v)};
}

// Splits a squarefree monic product of irreducibles of degree d.
inline void equal_degree_split(const ModPolynomial& f, int d, std::mt19937_64& rng, std::vector<ModPolynomial>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t l = f.modulus();
  for (;;) {
    ModPolynomial a = random_poly(l, f.degree(), rng);
    if (a.degree() < 1) continue;
    ModPolynomial b;
    if (l == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      ModPolynomial t = a % f, acc = t;
      for (int i = 1; i < d; ++i) {
        t = mulmod(t, t, f);
        acc = acc + t;
      }
      b = acc;
    } else {
      Integer e = (ipow(from_u64(l), static_cast<unsigned long>(d)) - 1) / 2;
      b = powmod(a, e, f) - ModPolynomial::constant(l, 1);
    }
    ModPolynomial g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

// Distinct-degree split of a squarefree monic polynomial: (product, degree) pairs.
inline std::vector<std::pair<ModPolynomial, int>> distinct_degree(ModPolynomial f) {
  std::vector<std::pair<ModPolynomial, int>> out;
  const std::uint64_t l = f.modulus();
  const ModPolynomial x = ModPolynomial::monomial(l, 1, 1);
  ModPolynomial h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = powmod(h, from_u64(l), f);
    ModPolynomial g = gcd(f, h - x);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

}  // namespace detail

inline void require_prime_modulus(std::uint64_t l) {
  if (!is_prime_u64(l)) throw std::domain_error("modulus is not prime");
}

inline bool is_squarefree(const ModPolynomial& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

// Degrees of the irreducible factors of a squarefree polynomial, without splitting.
inline std::vector<int> factor_degrees_squarefree(const ModPolynomial& f) {
  std::vector<int> d;
  for (auto& [g, k] : detail::distinct_degree(f.monic()))
    for (int i = 0; i < g.degree() / k; ++i) d.push_back(k);
  std::sort(d.begin(), d.end());
  return d;
}

// Complete factorization into monic irreducibles over F_l, sorted by degree
// then coefficients; randomness seeded from the input.
inline ModFactorList factor_mod(const ModPolynomial& f) {
  require_prime_modulus(f.modulus());
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  ModFactorList out;
  out.unit = f.lead();
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL ^ f.modulus();
  for (auto c : f.coeffs()) seed = (seed ^ c) * 0x100000001b3ULL;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<ModPolynomial, unsigned>> sqf;
  detail::mod_squarefree(f.monic(), 1, sqf);
  std::map<std::vector<std::uint64_t>, std::pair<ModPolynomial, unsigned>> acc;
  for (auto& [g, e] : sqf) {
    for (auto& [h, d] : detail::distinct_degree(g)) {
      std::vector<ModPolynomial> parts;
      detail::equal_degree_split(h, d, rng, parts);
      for (auto& p : parts) {
        auto key = p.coeffs();
        auto it = acc.find(key);
        if (it == acc.end())
          acc.emplace(key, std::make_pair(p, e));
        else
          it->second.second += e;
      }
    }
  }
  for (auto& kv : acc) out.factors.push_back(kv.second);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return mod_less(a.first, b.first); });
  return out;
}

inline std::string to_string(const ModPolynomial& f) {
  std::vector<Integer> v;
  for (auto c : f.coeffs()) v.push_back(from_u64(c));
  return to_string(IntPolynomial(std::move(v)));
}

}  // namespace hyperend
