#pragma once

#include <hyperend/exactalg/polynomial.hpp>

#include <stdexcept>
#include <vector>

namespace hyperend {

// Res(a, b) over Q by the Euclidean recurrence
// Res(a, b) = (-1)^(deg a * deg b) lc(b)^(deg a - deg r) Res(b, r), r = a mod b.
inline Rational resultant(RatPolynomial a, RatPolynomial b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Rational acc = 1;
  for (;;) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) {
      Rational r;
      mpz_pow_ui(r.get_num_mpz_t(), b.lead().get_num_mpz_t(), da);
      mpz_pow_ui(r.get_den_mpz_t(), b.lead().get_den_mpz_t(), da);
      r.canonicalize();
      return acc * r;
    }
    if (da == 0) {
      Rational r;
      mpz_pow_ui(r.get_num_mpz_t(), a.lead().get_num_mpz_t(), db);
      mpz_pow_ui(r.get_den_mpz_t(), a.lead().get_den_mpz_t(), db);
      r.canonicalize();
      return acc * r;
    }
    RatPolynomial r = a % b;
    if (r.is_zero()) return 0;
    if ((da % 2) && (db % 2)) acc = -acc;
    Rational lc_pow;
    const int e = da - r.degree();
    mpz_pow_ui(lc_pow.get_num_mpz_t(), b.lead().get_num_mpz_t(), e);
    mpz_pow_ui(lc_pow.get_den_mpz_t(), b.lead().get_den_mpz_t(), e);
    lc_pow.canonicalize();
    acc *= lc_pow;
    a = std::move(b);
    b = std::move(r);
  }
}

inline Integer resultant(const IntPolynomial& a, const IntPolynomial& b) {
  Rational r = resultant(to_rational(a), to_rational(b));
  if (r.get_den() != 1) throw std::logic_error("non-integral resultant of integer polynomials");
  return r.get_num();
}

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
inline Integer discriminant(const IntPolynomial& f) {
  if (f.degree() < 1) throw std::domain_error("discriminant of a constant polynomial");
  const long n = f.degree();
  Integer r = resultant(f, f.derivative());
  if ((n * (n - 1) / 2) % 2) r = -r;
  Integer q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.lead().get_mpz_t());
  return q;
}

namespace detail {

inline int sign_at_infinity(const RatPolynomial& p, bool positive) {
  if (p.is_zero()) return 0;
  int s = sgn(p.lead());
  if (!positive && (p.degree() % 2)) s = -s;
  return s;
}

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

inline std::vector<RatPolynomial> sturm_sequence(const IntPolynomial& f) {
  std::vector<RatPolynomial> seq{to_rational(f), to_rational(f.derivative())};
  while (!seq.back().is_zero()) {
    RatPolynomial r = seq[seq.size() - 2] % seq.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps signs while taming coefficient growth.
    r = -r;
    Rational scale = abs(r.lead());
    seq.push_back(r * Rational(1 / scale));
  }
  return seq;
}

// Number of distinct real roots of a squarefree polynomial (Sturm).
inline int real_root_count(const IntPolynomial& f) {
  if (f.degree() < 1) return 0;
  if (poly_gcd(f, f.derivative()).degree() > 0) throw std::domain_error("squarefree required");
  auto seq = sturm_sequence(f);
  std::vector<int> neg, pos;
  for (auto& p : seq) {
    neg.push_back(detail::sign_at_infinity(p, false));
    pos.push_back(detail::sign_at_infinity(p, true));
  }
  return detail::sign_changes(neg) - detail::sign_changes(pos);
}

}  // namespace hyperend
