#pragma once

// Factorization over Q: squarefree split, factor modulo a good prime,
// quadratic multifactor Hensel lifting, and exhaustive recombination
// pruned by degree sets collected at several primes.

#include <hyperend/exactalg/modpoly.hpp>
#include <hyperend/exactalg/polynomial.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperend {

struct IntFactorList : FactorList<IntPolynomial> {
  Integer unit = 1;
};

namespace detail {

inline Integer smod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

inline IntPolynomial reduce_mod(const IntPolynomial& f, const Integer& m) {
  std::vector<Integer> v = f.coeffs();
  for (auto& a : v) mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return IntPolynomial(std::move(v));
}

inline IntPolynomial reduce_symmetric(const IntPolynomial& f, const Integer& m) {
  std::vector<Integer> v = f.coeffs();
  for (auto& a : v) a = smod(a, m);
  return IntPolynomial(std::move(v));
}

inline IntPolynomial mul_mod(const IntPolynomial& a, const IntPolynomial& b, const Integer& m) {
  return reduce_mod(a * b, m);
}

// Division by a polynomial whose leading coefficient is 1 modulo m.
inline std::pair<IntPolynomial, IntPolynomial> divmod_monic(const IntPolynomial& a, const IntPolynomial& b,
                                                            const Integer& m) {
  const int db = b.degree();
  if (a.degree() < db) return {IntPolynomial{}, reduce_mod(a, m)};
  std::vector<Integer> r = reduce_mod(a, m).coeffs();
  r.resize(a.degree() + 1, 0);
  std::vector<Integer> q(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] == 0) continue;
    Integer c = r[i];
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  r.resize(db);
  return {reduce_mod(IntPolynomial(std::move(q)), m), reduce_mod(IntPolynomial(std::move(r)), m)};
}

struct HenselNode {
  IntPolynomial value;  // current lift of the product at this node
  int left = -1, right = -1;
  IntPolynomial s, t;  // s*g + t*h == 1 for the two children
};

class HenselTree {
 public:
  HenselTree(const IntPolynomial& f, const std::vector<ModPolynomial>& factors) : f_(f), p_(factors.front().modulus()) {
    lc_ = f.lead();
    root_ = build(factors, 0, factors.size(), true);
  }

  // Lifts until the modulus reaches at least `bound`; returns monic factors mod M.
  std::vector<IntPolynomial> lift(const Integer& bound, Integer& modulus) {
    Integer m = from_u64(p_);
    while (m < bound) {
      Integer m2 = m * m;
      descend(root_, reduce_mod(f_, m2), m, m2);
      m = m2;
    }
    modulus = m;
    std::vector<IntPolynomial> out;
    collect(root_, out);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lc_.get_mpz_t(), m.get_mpz_t());
    out.front() = reduce_mod(out.front() * inv, m);
    return out;
  }

 private:
  int build(const std::vector<ModPolynomial>& u, std::size_t lo, std::size_t hi, bool carries_lc) {
    HenselNode node;
    const std::uint64_t p = p_;
    ModPolynomial prod = ModPolynomial::constant(p, carries_lc ? mod_u64(lc_, p) : 1);
    for (std::size_t i = lo; i < hi; ++i) prod = prod * u[i];
    node.value = prod.to_int();
    if (hi - lo > 1) {
      std::size_t mid = lo + (hi - lo) / 2;
      node.left = build(u, lo, mid, carries_lc);
      node.right = build(u, mid, hi, false);
      ModPolynomial g(p, nodes_[node.left].value), h(p, nodes_[node.right].value);
      auto bz = extended_gcd(g, h);
      if (bz.gcd.degree() != 0) throw std::logic_error("Hensel factors not coprime");
      auto [q, s] = bz.s.divmod(h);
      ModPolynomial t = bz.t + q * g;
      node.s = s.to_int();
      node.t = t.to_int();
    }
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  void descend(int idx, const IntPolynomial& target, const Integer& m, const Integer& m2) {
    HenselNode& node = nodes_[idx];
    if (node.left < 0) {
      node.value = target;
      return;
    }
    const IntPolynomial& g = nodes_[node.left].value;
    const IntPolynomial& h = nodes_[node.right].value;
    const IntPolynomial& s = node.s;
    const IntPolynomial& t = node.t;
    IntPolynomial e = reduce_mod(target - g * h, m2);
    auto [q, r] = divmod_monic(mul_mod(s, e, m2), h, m2);
    IntPolynomial g2 = reduce_mod(g + t * e + q * g, m2);
    IntPolynomial h2 = reduce_mod(h + r, m2);
    IntPolynomial b = reduce_mod(s * g2 + t * h2 - IntPolynomial::constant(1), m2);
    auto [c, d] = divmod_monic(mul_mod(s, b, m2), h2, m2);
    IntPolynomial s2 = reduce_mod(s - d, m2);
    IntPolynomial t2 = reduce_mod(t - t * b - c * g2, m2);
    node.s = std::move(s2);
    node.t = std::move(t2);
    node.value = target;
    const int l = node.left, rgt = node.right;
    descend(l, g2, m, m2);
    descend(rgt, h2, m, m2);
  }

  void collect(int idx, std::vector<IntPolynomial>& out) const {
    const HenselNode& node = nodes_[idx];
    if (node.left < 0) {
      out.push_back(node.value);
      return;
    }
    collect(node.left, out);
    collect(node.right, out);
  }

  IntPolynomial f_;
  std::uint64_t p_;
  Integer lc_;
  std::vector<HenselNode> nodes_;
  int root_ = -1;
};

inline Integer max_abs_coeff(const IntPolynomial& f) {
  Integer m = 0;
  for (auto& a : f.coeffs())
    if (abs_value(a) > m) m = abs_value(a);
  return m;
}

inline std::vector<bool> subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<bool> ok(n + 1, false);
  ok[0] = true;
  for (int d : degrees)
    for (int s = n; s >= d; --s)
      if (ok[s - d]) ok[s] = true;
  return ok;
}

// Enumerates k-subsets of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors of a primitive squarefree polynomial with positive
// leading coefficient and nonzero constant term.
inline std::vector<IntPolynomial> zassenhaus(const IntPolynomial& f) {
  const int n = f.degree();
  if (n <= 1) return {f};
  const Integer lc = f.lead();

  struct Candidate {
    std::uint64_t p;
    std::vector<int> degrees;
  };
  std::vector<Candidate> candidates;
  std::vector<bool> allowed(n + 1, true);
  std::uint64_t p = 2;
  for (int tries = 0; candidates.size() < 7 && tries < 2000; ++tries, p = next_prime_u64(p)) {
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    ModPolynomial fp(p, f);
    if (!is_squarefree(fp)) continue;
    auto deg = factor_degrees_squarefree(fp);
    if (deg.size() == 1) return {f};
    auto sums = subset_sums(deg, n);
    for (int i = 0; i <= n; ++i) allowed[i] = allowed[i] && sums[i];
    candidates.push_back({p, std::move(deg)});
  }
  if (candidates.empty()) throw std::logic_error("no good prime found for factorization");
  {
    bool proper = false;
    for (int d = 1; d < n; ++d) proper = proper || allowed[d];
    if (!proper) return {f};
  }
  const Candidate* best = &candidates.front();
  for (auto& c : candidates)
    if (c.degrees.size() < best->degrees.size()) best = &c;

  ModPolynomial fp(best->p, f);
  auto modf = factor_mod(fp);
  std::vector<ModPolynomial> u;
  for (auto& [g, e] : modf.factors) u.push_back(g);

  // Factor coefficient bound (Mignotte) times lc; lift past twice that.
  Integer isq;
  Integer np1 = n + 1;
  mpz_sqrt(isq.get_mpz_t(), np1.get_mpz_t());
  Integer bound = (isq + 1) * ipow(2, n) * max_abs_coeff(f) * lc * 2 + 1;
  Integer modulus;
  HenselTree tree(f, u);
  std::vector<IntPolynomial> lifted = tree.lift(bound, modulus);

  std::vector<IntPolynomial> result;
  IntPolynomial rest = f;
  std::vector<IntPolynomial> pool = lifted;
  int k = 1;
  while (2 * k <= static_cast<int>(pool.size())) {
    bool found = false;
    const int r = static_cast<int>(pool.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    do {
      int deg = 0;
      for (int i : idx) deg += pool[i].degree();
      if (!allowed[deg]) continue;
      const Integer lr = rest.lead();
      IntPolynomial g = IntPolynomial::constant(lr);
      Integer c0 = lr;
      for (int i : idx) c0 = smod(c0 * pool[i][0], modulus);
      const Integer target0 = lr * rest[0];
      if (c0 == 0 || !mpz_divisible_p(target0.get_mpz_t(), c0.get_mpz_t())) continue;
      for (int i : idx) g = mul_mod(g, pool[i], modulus);
      g = primitive_part(reduce_symmetric(g, modulus));
      IntPolynomial q;
      if (!divides_exactly(rest, g, &q)) continue;
      result.push_back(g);
      rest = q;
      std::vector<IntPolynomial> next;
      std::size_t j = 0;
      for (int i = 0; i < r; ++i) {
        if (j < idx.size() && idx[j] == i) {
          ++j;
          continue;
        }
        next.push_back(pool[i]);
      }
      pool = std::move(next);
      found = true;
      break;
    } while (next_combination(idx, r));
    if (!found) ++k;
  }
  if (rest.degree() > 0) result.push_back(primitive_part(rest));
  return result;
}

}  // namespace detail

// Irreducible factorization over Q into primitive integer factors with
// positive leading coefficients; unit * prod factors^e == f.
inline IntFactorList factor_over_Q(const IntPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  IntFactorList out;
  if (f.degree() == 0) {
    out.unit = f.lead();
    return out;
  }
  IntPolynomial g = primitive_part(f);
  std::vector<std::pair<IntPolynomial, unsigned>> raw;
  // Powers of x.
  unsigned zeros = 0;
  while (g[zeros] == 0) ++zeros;
  if (zeros) {
    raw.emplace_back(IntPolynomial::x(), zeros);
    g = IntPolynomial(std::vector<Integer>(g.coeffs().begin() + zeros, g.coeffs().end()));
  }
  for (auto& [part, e] : squarefree_decomposition(g))
    for (auto& irr : detail::zassenhaus(part)) raw.emplace_back(irr, e);
  std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  Integer lc_prod = 1;
  for (auto& [h, e] : raw) lc_prod *= ipow(h.lead(), e);
  Integer unit;
  mpz_divexact(unit.get_mpz_t(), f.lead().get_mpz_t(), lc_prod.get_mpz_t());
  out.unit = unit;
  out.factors = std::move(raw);
  return out;
}

inline bool is_irreducible(const IntPolynomial& f) {
  if (f.degree() < 1) return false;
  auto fl = factor_over_Q(f);
  return fl.factors.size() == 1 && fl.factors.front().second == 1;
}

}  // namespace hyperend
