#pragma once

// Factorization pattern of an irreducible f over its stem field Q[x]/(f),
// by the norm method: N_k(x) = Norm(f(x - k*alpha)) is built exactly from
// power sums of the roots, then factored over Q. Each irreducible factor of
// N_k of degree n*d corresponds to a degree-d factor of f over the stem field.

#include <hyperend/exactalg/factor.hpp>
#include <hyperend/exactalg/modpoly.hpp>
#include <hyperend/exactalg/polynomial.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hyperend {

inline constexpr int kStemFieldDegreeCap = 13;

// lc^(n-1) f(x / lc): monic, integral, same stem field.
inline IntPolynomial monic_associate(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw std::domain_error("monic associate of a constant");
  const Integer lc = f.lead();
  std::vector<Integer> c(n + 1);
  Integer pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    c[i] = f[i] * pw;
    pw *= lc;
  }
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

// Power sums p_0..p_count of the roots of a monic integer polynomial.
inline std::vector<Integer> power_sums(const IntPolynomial& monic, int count) {
  const int n = monic.degree();
  if (n < 1 || monic.lead() != 1) throw std::domain_error("power sums need a monic polynomial");
  std::vector<Integer> p(count + 1);
  p[0] = n;
  for (int m = 1; m <= count; ++m) {
    Integer acc = 0;
    if (m <= n) acc += m * monic[n - m];
    for (int i = 1; i <= std::min(m - 1, n); ++i) acc += monic[n - i] * p[m - i];
    p[m] = -acc;
  }
  return p;
}

// Monic polynomial of degree d with the given power sums s_1..s_d (s[0] unused).
inline IntPolynomial from_power_sums(const std::vector<Integer>& s, int d) {
  std::vector<Integer> e(d + 1);
  e[0] = 1;
  for (int m = 1; m <= d; ++m) {
    Integer acc = 0;
    for (int i = 1; i <= m; ++i) {
      if (i % 2)
        acc += e[m - i] * s[i];
      else
        acc -= e[m - i] * s[i];
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(m)))
      throw std::logic_error("power sums do not define an integral polynomial");
    mpz_divexact_ui(e[m].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(m));
  }
  std::vector<Integer> c(d + 1);
  for (int m = 0; m <= d; ++m) c[d - m] = (m % 2) ? Integer(-e[m]) : e[m];
  return IntPolynomial(std::move(c));
}

// Characteristic polynomial over Q of the element a(theta) of Q[x]/(f), f monic.
inline RatPolynomial element_charpoly(const IntPolynomial& f, const RatPolynomial& a) {
  const int n = f.degree();
  const auto p = power_sums(f, 2 * n);
  const RatPolynomial F = to_rational(f);
  std::vector<Rational> s(n + 1);
  RatPolynomial pw = RatPolynomial::constant(1);
  for (int k = 1; k <= n; ++k) {
    pw = (pw * a) % F;
    Rational tr = 0;
    for (int j = 0; j <= pw.degree(); ++j) tr += pw[j] * Rational(p[j]);
    s[k] = tr;
  }
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int i = 1; i <= m; ++i) acc += ((i % 2) ? 1 : -1) * e[m - i] * s[i];
    e[m] = acc / m;
  }
  std::vector<Rational> c(n + 1);
  for (int m = 0; m <= n; ++m) c[n - m] = (m % 2) ? Rational(-e[m]) : e[m];
  return RatPolynomial(std::move(c));
}

// Norm_{Q(alpha)/Q} f(x - k alpha) for monic f; roots are alpha_j + k alpha_i.
inline IntPolynomial trager_norm(const IntPolynomial& monic, long k) {
  const int n = monic.degree();
  const int D = n * n;
  auto p = power_sums(monic, D);
  std::vector<Integer> s(D + 1);
  Integer kk = k;
  for (int m = 1; m <= D; ++m) {
    Integer acc = 0, kp = 1;
    for (int t = 0; t <= m; ++t) {
      acc += binomial(m, t) * kp * p[t] * p[m - t];
      kp *= kk;
    }
    s[m] = acc;
  }
  return from_power_sums(s, D);
}

struct StemFieldFactorization {
  std::vector<int> degrees;           // sorted factor degrees of f over Q[x]/(f)
  long shift = 0;                     // k with a squarefree norm
  std::uint64_t squarefree_prime = 0; // prime at which the norm reduces squarefree
  std::vector<IntPolynomial> norm_factors;
};

inline StemFieldFactorization stem_field_factorization(const IntPolynomial& f) {
  const int n = f.degree();
  if (n < 1) throw std::domain_error("stem field of a constant");
  if (n > kStemFieldDegreeCap) throw std::domain_error("degree cap");
  if (!is_irreducible(f)) throw std::domain_error("f reducible");
  StemFieldFactorization out;
  if (n == 1) {
    out.degrees = {1};
    return out;
  }
  IntPolynomial g = monic_associate(f);
  for (long step = 0; step < 64; ++step) {
    const long k = (step % 2) ? (step + 1) / 2 : -(step / 2);
    IntPolynomial norm = trager_norm(g, k);
    std::uint64_t witness = 0;
    std::uint64_t q = 2;
    for (int tries = 0; tries < 60; ++tries, q = next_prime_u64(q)) {
      if (is_squarefree(ModPolynomial(q, norm))) {
        witness = q;
        break;
      }
    }
    if (!witness) continue;
    out.shift = k;
    out.squarefree_prime = witness;
    // Squarefree is certified by the witness prime, so skip the rational squarefree split.
    std::vector<IntPolynomial> parts;
    if (norm[0] == 0) {
      parts.push_back(IntPolynomial::x());
      norm = IntPolynomial(std::vector<Integer>(norm.coeffs().begin() + 1, norm.coeffs().end()));
    }
    for (auto& h : detail::zassenhaus(norm)) parts.push_back(h);
    for (auto& h : parts) {
      if (h.degree() % n) throw std::logic_error("norm factorization inconsistent with stem field");
      out.degrees.push_back(h.degree() / n);
      out.norm_factors.push_back(h);
    }
    std::sort(out.norm_factors.begin(), out.norm_factors.end(), poly_less<Integer>);
    std::sort(out.degrees.begin(), out.degrees.end());
    return out;
  }
  throw std::logic_error("no squarefree norm found");
}

inline std::vector<int> stem_field_factor(const IntPolynomial& f) { return stem_field_factorization(f).degrees; }

}  // namespace hyperend
