#pragma once

// Dense univariate polynomials over Z and Q, coefficients in ascending
// degree order. Zero polynomial has an empty coefficient list and degree -1.

#include <hyperend/exactalg/integer.hpp>

#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperend {

template <typename T>
class Polynomial {
 public:
  using coeff_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial(const T& c, std::size_t k) {
    std::vector<T> v(k + 1, T(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<T>& coeffs() const { return coeffs_; }
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& lead() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  void set(std::size_t i, const T& c) {
    if (i >= coeffs_.size()) coeffs_.resize(i + 1, T(0));
    coeffs_[i] = c;
    trim();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  template <typename U>
  U evaluate(const U& v) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + U(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * T(static_cast<long>(i));
    return Polynomial(std::move(out));
  }

  // p(x + c) by repeated synthetic division.
  Polynomial shift(const T& c) const {
    std::vector<T> a = coeffs_;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
    return Polynomial(std::move(a));
  }

  // p(c*x).
  Polynomial scale_variable(const T& c) const {
    std::vector<T> a = coeffs_;
    T pw(1);
    for (auto& v : a) {
      v *= pw;
      pw *= c;
    }
    return Polynomial(std::move(a));
  }

  // x^deg * p(1/x).
  Polynomial reversed() const {
    std::vector<T> a(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(a));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

// Deterministic total order: degree first, then coefficients from the top down.
template <typename T>
bool poly_less(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

inline RatPolynomial to_rational(const IntPolynomial& f) {
  std::vector<Rational> c;
  c.reserve(f.coeffs().size());
  for (auto& a : f.coeffs()) c.emplace_back(a);
  return RatPolynomial(std::move(c));
}

inline Integer content(const IntPolynomial& f) {
  Integer g = 0;
  for (auto& a : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

// Primitive part with positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (f.lead() < 0) c = -c;
  std::vector<Integer> v;
  v.reserve(f.coeffs().size());
  for (auto& a : f.coeffs()) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
    v.push_back(q);
  }
  return IntPolynomial(std::move(v));
}

// Clears denominators and returns the primitive integer polynomial.
inline IntPolynomial primitive_integer(const RatPolynomial& f) {
  Integer den = 1;
  for (auto& a : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.get_den_mpz_t());
  std::vector<Integer> v;
  for (auto& a : f.coeffs()) {
    Rational s = a * Rational(den);
    v.push_back(s.get_num());
  }
  return primitive_part(IntPolynomial(std::move(v)));
}

// Integer polynomial from one whose rational coefficients are all integral.
inline IntPolynomial to_integer(const RatPolynomial& f) {
  std::vector<Integer> v;
  for (auto& a : f.coeffs()) {
    if (a.get_den() != 1) throw std::invalid_argument("non-integral coefficient");
    v.push_back(a.get_num());
  }
  return IntPolynomial(std::move(v));
}

inline RatPolynomial make_monic(const RatPolynomial& f) {
  if (f.is_zero()) return f;
  Rational inv = 1 / f.lead();
  return f * inv;
}

// Euclidean division over Q.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPolynomial{}, a};
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational c = r[i] * inv;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  r.resize(db);
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

inline RatPolynomial operator%(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).second; }
inline RatPolynomial operator/(const RatPolynomial& a, const RatPolynomial& b) { return divmod(a, b).first; }

// Monic gcd over Q; the zero/zero case is undefined.
inline RatPolynomial poly_gcd(RatPolynomial a, RatPolynomial b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  while (!b.is_zero()) {
    RatPolynomial r = a % b;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

struct BezoutResult {
  RatPolynomial gcd, s, t;  // s*a + t*b == gcd
};

inline BezoutResult extended_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  RatPolynomial r0 = a, r1 = b, s0 = RatPolynomial::constant(1), s1, t0, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPolynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

inline IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return primitive_integer(poly_gcd(to_rational(a), to_rational(b)));
}

// Exact division over Z; returns false when b does not divide a in Z[x].
inline bool divides_exactly(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial* quotient = nullptr) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) {
    if (quotient) *quotient = {};
    return true;
  }
  const int db = b.degree();
  if (a.degree() < db) return false;
  std::vector<Integer> r = a.coeffs();
  std::vector<Integer> q(a.degree() - db + 1);
  const Integer& lb = b.lead();
  Integer c, rem;
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    if (rem != 0) return false;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  for (int i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  if (quotient) *quotient = IntPolynomial(std::move(q));
  return true;
}

// Squarefree decomposition over Q (Yun): f = c * prod g_i^i with primitive g_i.
inline std::vector<std::pair<IntPolynomial, unsigned>> squarefree_decomposition(const IntPolynomial& f) {
  std::vector<std::pair<IntPolynomial, unsigned>> out;
  if (f.degree() < 1) return out;
  RatPolynomial a = make_monic(to_rational(f));
  RatPolynomial da = a.derivative();
  RatPolynomial b = poly_gcd(a, da);
  RatPolynomial c = a / b;
  RatPolynomial d = da / b - c.derivative();
  unsigned i = 1;
  while (c.degree() > 0) {
    RatPolynomial g = poly_gcd(c, d);
    if (g.degree() > 0) out.emplace_back(primitive_integer(g), i);
    c = c / g;
    d = d / g - c.derivative();
    ++i;
  }
  return out;
}

namespace detail {

inline void skip_spaces(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

inline std::string read_digits(std::string_view s, std::size_t& i) {
  std::size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  return std::string(s.substr(start, i - start));
}

}  // namespace detail

// Parses `c_k*x^k +- ... +- c_0`; coefficients may be rational (a/b), '*' optional.
inline RatPolynomial parse_rat_polynomial(std::string_view s) {
  RatPolynomial out;
  std::size_t i = 0;
  bool any = false;
  detail::skip_spaces(s, i);
  while (i < s.size()) {
    int sign = 1;
    bool had_sign = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      had_sign = true;
      ++i;
      detail::skip_spaces(s, i);
    }
    if (any && !had_sign) throw std::invalid_argument("expected '+' or '-' in polynomial: " + std::string(s));
    Rational coef = 1;
    bool has_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      std::string num = detail::read_digits(s, i);
      std::string den = "1";
      detail::skip_spaces(s, i);
      if (i < s.size() && s[i] == '/') {
        ++i;
        detail::skip_spaces(s, i);
        den = detail::read_digits(s, i);
        if (den.empty()) throw std::invalid_argument("bad rational coefficient");
      }
      coef = Rational(Integer(num), Integer(den));
      if (coef.get_den() == 0) throw std::invalid_argument("zero denominator");
      coef.canonicalize();
      has_coef = true;
      detail::skip_spaces(s, i);
      if (i < s.size() && s[i] == '*') {
        ++i;
        detail::skip_spaces(s, i);
        if (i >= s.size() || s[i] != 'x') throw std::invalid_argument("expected 'x' after '*'");
      }
    }
    std::size_t power = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      power = 1;
      detail::skip_spaces(s, i);
      if (i < s.size() && s[i] == '^') {
        ++i;
        detail::skip_spaces(s, i);
        std::string e = detail::read_digits(s, i);
        if (e.empty()) throw std::invalid_argument("expected exponent");
        power = std::stoul(e);
      }
    } else if (!has_coef) {
      throw std::invalid_argument("malformed polynomial: " + std::string(s));
    }
    out += RatPolynomial::monomial(coef * sign, power);
    any = true;
    detail::skip_spaces(s, i);
  }
  if (!any) throw std::invalid_argument("empty polynomial");
  return out;
}

inline IntPolynomial parse_polynomial(std::string_view s) { return to_integer(parse_rat_polynomial(s)); }

template <typename T>
std::string to_string(const Polynomial<T>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = f.degree(); k >= 0; --k) {
    T c = f[k];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? '-' : '+');
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& f) {
  return os << to_string(f);
}

// Stable hash of the coefficient list; seeds the randomized factoring steps.
template <typename T>
std::uint64_t poly_hash(const Polynomial<T>& f) {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto& c : f.coeffs()) {
    for (char ch : c.get_str()) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ULL;
    }
    h ^= 0x2c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hyperend
