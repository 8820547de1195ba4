#pragma once

#include <hyperend/exactalg/factor.hpp>
#include <hyperend/exactalg/integer.hpp>
#include <hyperend/exactalg/modpoly.hpp>
#include <hyperend/exactalg/polynomial.hpp>
#include <hyperend/exactalg/resultant.hpp>
#include <hyperend/exactalg/stem_field.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperend {

struct NumberFieldDesc {
  IntPolynomial defpoly;
  int degree = 0;
  Integer disc;
};

inline NumberFieldDesc make_number_field(const IntPolynomial& defpoly) {
  if (defpoly.degree() < 1 || defpoly.lead() != 1) throw std::invalid_argument("defining polynomial must be monic");
  if (!is_irreducible(defpoly)) throw std::invalid_argument("defining polynomial must be irreducible");
  return {defpoly, defpoly.degree(), discriminant(defpoly)};
}

inline nlohmann::ordered_json to_json(const NumberFieldDesc& K) {
  return {{"defpoly", to_string(K.defpoly)}, {"degree", K.degree}};
}

// Dedekind: with f = prod g_i^e_i mod l, G = prod g_i, H = prod g_i^(e_i - 1) (lifted) and
// F = (G H - f) / l, Z[theta] is l-maximal iff gcd(F, G, H) = 1 mod l.
inline ModPolynomial dedekind_witness(const IntPolynomial& f, std::uint64_t l);

inline bool dedekind_maximal(const IntPolynomial& f, std::uint64_t l) {
  require_prime_modulus(l);
  return dedekind_witness(f, l).degree() == 0;
}

inline bool is_l_maximal(const IntPolynomial& f, std::uint64_t l) {
  if (f.degree() < 1 || f.lead() != 1) throw std::invalid_argument("defining polynomial must be monic");
  const Integer d = discriminant(f);
  const Integer l2 = from_u64(l) * from_u64(l);
  if (d % l2 != 0) return true;
  return dedekind_maximal(f, l);
}

inline constexpr int kTschirnhausAttempts = 32;

struct LocalPresentation {
  IntPolynomial defpoly;    // a monic generator's minimal polynomial, l-maximal
  RatPolynomial generator;  // the generator as a polynomial in theta
};

namespace detail {

inline unsigned long valuation(Integer n, std::uint64_t l) {
  if (n == 0) return ~0UL;
  n = abs_value(n);
  unsigned long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), l)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), l);
    ++v;
  }
  return v;
}

// a(b(theta)) reduced modulo f.
inline RatPolynomial compose_mod(const RatPolynomial& a, const RatPolynomial& b, const RatPolynomial& f) {
  RatPolynomial acc;
  for (int i = a.degree(); i >= 0; --i) acc = (acc * b + RatPolynomial::constant(a[i])) % f;
  return acc;
}

}  // namespace detail

// gcd(F, G, H) mod l from Dedekind's criterion; its degree m gives [O' : Z[theta]] = l^m for
// the enlarged order O' = Z[theta] + (U(theta)/l) Z[theta], U = f / gcd.
inline ModPolynomial dedekind_witness(const IntPolynomial& f, std::uint64_t l) {
  auto fl = factor_mod(ModPolynomial(l, f));
  IntPolynomial G = IntPolynomial::constant(1), H = IntPolynomial::constant(1);
  ModPolynomial Gm = ModPolynomial::constant(l, 1), Hm = ModPolynomial::constant(l, 1);
  for (auto& [g, e] : fl.factors) {
    G *= g.to_int();
    Gm = Gm * g;
    for (unsigned i = 1; i < e; ++i) {
      H *= g.to_int();
      Hm = Hm * g;
    }
  }
  std::vector<Integer> c((G * H - f).coeffs());
  for (auto& x : c) {
    if (!mpz_divisible_ui_p(x.get_mpz_t(), l)) throw std::logic_error("Dedekind lift is not congruent to f");
    x /= static_cast<unsigned long>(l);
  }
  return gcd(gcd(ModPolynomial(l, IntPolynomial(std::move(c))), Gm), Hm);
}

// Elements U(theta) theta^j / l and theta + U(theta) theta^j / l of the enlarged order from
// Dedekind's criterion, U = f / gcd(F, G, H) lifted to Z.
inline std::vector<RatPolynomial> dedekind_candidates(const IntPolynomial& f, std::uint64_t l) {
  const ModPolynomial d = dedekind_witness(f, l);
  std::vector<RatPolynomial> out;
  if (d.degree() < 1) return out;
  const RatPolynomial U = to_rational((ModPolynomial(l, f) / d).to_int());
  const RatPolynomial F = to_rational(f);
  const Rational inv_l(1, static_cast<unsigned long>(l));
  RatPolynomial xj = RatPolynomial::constant(1);
  for (int j = 0; j < f.degree(); ++j) {
    RatPolynomial e = ((U * xj) % F) * inv_l;
    out.push_back(e);
    out.push_back(e + RatPolynomial::x());
    xj = (xj * RatPolynomial::x()) % F;
  }
  return out;
}

// An l-maximal monogenic presentation of Q[x]/(f). Candidates are the Dedekind elements above,
// then (P(beta))/l for P with coefficients in [0, l) in counting order. An integral candidate
// that lowers the l-adic valuation of the discriminant replaces beta and the search restarts.
inline std::optional<LocalPresentation> l_maximal_presentation(const IntPolynomial& f, std::uint64_t l) {
  if (is_l_maximal(f, l)) return LocalPresentation{f, RatPolynomial::x()};
  const int n = f.degree();
  const RatPolynomial F = to_rational(f);
  IntPolynomial cur = f;
  RatPolynomial cur_gen = RatPolynomial::x();
  unsigned long cur_val = detail::valuation(discriminant(cur), l);
  std::uint64_t total = 1;
  for (int i = 0; i < n && total <= (std::uint64_t{1} << 40); ++i) total *= l;
  int attempts = 0;
  bool restarted = true;
  while (restarted && attempts < kTschirnhausAttempts) {
    restarted = false;
    std::vector<RatPolynomial> candidates = dedekind_candidates(cur, l);
    for (std::uint64_t idx = 1; idx < total && candidates.size() < kTschirnhausAttempts; ++idx) {
      std::vector<Rational> c(n);
      std::uint64_t t = idx;
      bool nonconstant = false;
      for (int i = 0; i < n; ++i) {
        c[i] = Rational(static_cast<unsigned long>(t % l), static_cast<unsigned long>(l));
        c[i].canonicalize();
        if (i > 0 && t % l) nonconstant = true;
        t /= l;
      }
      if (nonconstant) candidates.emplace_back(std::move(c));
    }
    for (auto& beta : candidates) {
      if (attempts >= kTschirnhausAttempts) break;
      if (beta.degree() < 1) continue;
      ++attempts;
      RatPolynomial cp = element_charpoly(cur, beta);
      bool integral = true;
      for (auto& x : cp.coeffs()) integral = integral && x.get_den() == 1;
      if (!integral) continue;
      IntPolynomial g = to_integer(cp);
      if (poly_gcd(g, g.derivative()).degree() > 0) continue;
      RatPolynomial gen = detail::compose_mod(beta, cur_gen, F);
      if (is_l_maximal(g, l)) return LocalPresentation{g, gen};
      const unsigned long v = detail::valuation(discriminant(g), l);
      if (v < cur_val) {
        cur = g;
        cur_gen = gen;
        cur_val = v;
        restarted = true;
        break;
      }
    }
  }
  return std::nullopt;
}

struct SplittingShape {
  std::uint64_t l = 2;
  std::vector<std::pair<int, int>> shape;  // (e, f), sorted
  bool certified = false;

  int prime_count() const { return static_cast<int>(shape.size()); }
  bool totally_inert(int degree) const {
    return certified && shape.size() == 1 && shape[0].first == 1 && shape[0].second == degree;
  }
  bool ramified() const {
    for (auto& [e, f] : shape)
      if (e > 1) return true;
    return false;
  }
};

inline SplittingShape shape_from(const IntPolynomial& g, std::uint64_t l) {
  SplittingShape s{l, {}, true};
  for (auto& [h, e] : factor_mod(ModPolynomial(l, g)).factors) s.shape.emplace_back(static_cast<int>(e), h.degree());
  std::sort(s.shape.begin(), s.shape.end());
  return s;
}

// Undetermined presentations come back with certified = false and an empty shape.
inline SplittingShape splitting_shape(const IntPolynomial& f, std::uint64_t l) {
  require_prime_modulus(l);
  auto pres = l_maximal_presentation(f, l);
  if (!pres) return SplittingShape{l, {}, false};
  return shape_from(pres->defpoly, l);
}

inline std::string to_string(const SplittingShape& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.shape.size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(s.shape[i].first) + "," + std::to_string(s.shape[i].second) + ")";
  }
  out += "]";
  out += s.certified ? " certified" : " undetermined";
  return out;
}

inline nlohmann::ordered_json to_json(const SplittingShape& s) {
  nlohmann::ordered_json sh = nlohmann::ordered_json::array();
  for (auto& [e, f] : s.shape) sh.push_back({e, f});
  return {{"l", s.l}, {"shape", sh}, {"certified", s.certified}};
}

struct RamificationReport {
  std::vector<Integer> ramified;
  std::vector<Integer> undetermined;
};

// q | disc(f) ramifies iff q | disc(O_K). Certified by an odd valuation of disc(f), by an
// l-maximal presentation's shape, or unramified when Dedekind's enlarged order already has
// discriminant prime to q.
inline RamificationReport ramified_primes(const IntPolynomial& f) {
  RamificationReport out;
  const Integer d = discriminant(f);
  for (auto& [q, e] : factor_integer(abs_value(d))) {
    if (e % 2) {
      out.ramified.push_back(q);
      continue;
    }
    if (!fits_u63(q)) {
      out.undetermined.push_back(q);
      continue;
    }
    const std::uint64_t l = to_u64(q);
    if (static_cast<long>(e) == 2 * static_cast<long>(dedekind_witness(f, l).degree())) continue;
    auto s = splitting_shape(f, l);
    if (!s.certified)
      out.undetermined.push_back(q);
    else if (s.ramified())
      out.ramified.push_back(q);
  }
  return out;
}

struct QuadraticDiscClass {
  Integer d;
  Integer disc;
  int residue_mod_8 = 0;
  bool two_inert = false;
};

inline QuadraticDiscClass quadratic_disc_class(const Integer& d) {
  if (d == 0 || d == 1) throw std::invalid_argument("d must differ from 0 and 1");
  if (!is_squarefree(d)) throw std::invalid_argument("d must be squarefree");
  QuadraticDiscClass c;
  c.d = d;
  const long d4 = mpz_fdiv_ui(d.get_mpz_t(), 4), d8 = mpz_fdiv_ui(d.get_mpz_t(), 8);
  c.disc = d4 == 1 ? d : Integer(4 * d);
  c.residue_mod_8 = static_cast<int>(mpz_fdiv_ui(c.disc.get_mpz_t(), 8));
  c.two_inert = d8 == 5;
  return c;
}

enum class QuarticGalois { C4, V4, D4, A4, S4 };

inline const char* to_string(QuarticGalois g) {
  switch (g) {
    case QuarticGalois::C4: return "C4";
    case QuarticGalois::V4: return "V4";
    case QuarticGalois::D4: return "D4";
    case QuarticGalois::A4: return "A4";
    case QuarticGalois::S4: return "S4";
  }
  return "?";
}

struct QuarticInvariants {
  QuarticGalois galois_type = QuarticGalois::S4;
  bool totally_imaginary = false;
  std::vector<Integer> quadratic_subfields;  // squarefree d, sorted
  std::optional<Integer> real_quadratic_subfield;
  bool is_cm = false;
  bool is_cyclic = false;
};

namespace detail {

inline std::vector<Rational> rational_roots(const IntPolynomial& f) {
  std::vector<Rational> roots;
  for (auto& [g, e] : factor_over_Q(f).factors)
    if (g.degree() == 1) {
      Rational r(-g[0], g[1]);
      r.canonicalize();
      roots.push_back(r);
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Squarefree d with Q(sqrt(q)) = Q(sqrt(d)), or nothing when q is a rational square.
inline std::optional<Integer> quadratic_class(const Rational& q) {
  if (q == 0) return std::nullopt;
  Integer n = q.get_num() * q.get_den();
  Integer d = squarefree_part(n);
  if (d == 1) return std::nullopt;
  return d;
}

}  // namespace detail

// x^4 + a x^3 + b x^2 + c x + d with resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2),
// whose roots are x1x2 + x3x4 and conjugates.
inline QuarticInvariants quartic_invariants(const IntPolynomial& f) {
  if (f.degree() != 4) throw std::invalid_argument("quartic required");
  if (f.lead() != 1) throw std::invalid_argument("defining polynomial must be monic");
  if (!is_irreducible(f)) throw std::invalid_argument("defining polynomial must be irreducible");
  const Integer a = f[3], b = f[2], c = f[1], d = f[0];
  IntPolynomial R{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Integer(1)};
  const Integer D = discriminant(f);
  auto roots = detail::rational_roots(R);
  QuarticInvariants q;
  q.totally_imaginary = real_root_count(f) == 0;
  auto subfield_of = [&](const Rational& r) -> std::optional<Integer> {
    // x1x2 solves X^2 - r X + d, x1 + x2 solves X^2 + a X + (b - r).
    if (auto s = detail::quadratic_class(r * r - 4 * Rational(d))) return s;
    return detail::quadratic_class(Rational(a * a) - 4 * (Rational(b) - r));
  };
  auto splits_over = [&](const Rational& delta) {
    if (delta == 0) return true;
    if (is_square(delta)) return true;
    return is_square(delta * Rational(D));
  };
  if (roots.empty()) {
    q.galois_type = is_square(Rational(D)) ? QuarticGalois::A4 : QuarticGalois::S4;
  } else if (roots.size() == 3) {
    q.galois_type = QuarticGalois::V4;
    for (auto& r : roots)
      if (auto s = subfield_of(r)) q.quadratic_subfields.push_back(*s);
  } else {
    const Rational r = roots[0];
    const bool cyclic = splits_over(r * r - 4 * Rational(d)) && splits_over(Rational(a * a) - 4 * (Rational(b) - r));
    q.galois_type = cyclic ? QuarticGalois::C4 : QuarticGalois::D4;
    if (auto s = subfield_of(r)) q.quadratic_subfields.push_back(*s);
  }
  std::sort(q.quadratic_subfields.begin(), q.quadratic_subfields.end());
  q.quadratic_subfields.erase(std::unique(q.quadratic_subfields.begin(), q.quadratic_subfields.end()),
                              q.quadratic_subfields.end());
  std::vector<Integer> real;
  for (auto& s : q.quadratic_subfields)
    if (s > 0) real.push_back(s);
  if (real.size() == 1) q.real_quadratic_subfield = real[0];
  q.is_cm = q.totally_imaginary && !real.empty();
  q.is_cyclic = q.galois_type == QuarticGalois::C4;
  return q;
}

struct CyclotomicSubfield {
  NumberFieldDesc field;
  bool totally_real = false;
};

// Minimal polynomial of the Gaussian period over the index-d subgroup H of (Z/pZ)^*,
// from the power sums (1/|H|) Tr(eta^m) computed in Z[x]/(x^p - 1).
inline CyclotomicSubfield cyclotomic_subfield(std::uint64_t p, std::uint64_t d) {
  if (!is_prime_u64(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
  if (d == 0 || (p - 1) % d) throw std::invalid_argument("d must divide p-1");
  const std::uint64_t h = (p - 1) / d;
  const std::uint64_t g = primitive_root(p);
  const std::uint64_t gd = powmod(g, d, p);
  std::vector<Integer> eta(p, 0);
  bool minus_one = false;
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < h; ++i) {
    eta[x] += 1;
    if (x == p - 1) minus_one = true;
    x = mulmod(x, gd, p);
  }
  std::vector<Integer> s(d + 1, 0), pw(p, 0);
  pw[0] = 1;
  for (std::uint64_t m = 1; m <= d; ++m) {
    std::vector<Integer> next(p, 0);
    for (std::uint64_t i = 0; i < p; ++i) {
      if (pw[i] == 0) continue;
      for (std::uint64_t j = 0; j < p; ++j)
        if (eta[j] != 0) next[(i + j) % p] += pw[i] * eta[j];
    }
    pw = std::move(next);
    Integer total = 0;
    for (auto& v : pw) total += v;
    Integer tr = Integer(static_cast<unsigned long>(p)) * pw[0] - total;
    s[m] = tr / Integer(static_cast<unsigned long>(h));
  }
  IntPolynomial poly = from_power_sums(s, static_cast<int>(d));
  return {NumberFieldDesc{poly, static_cast<int>(d), discriminant(poly)}, minus_one};
}

// Galois with cyclic group: the stem field splits f completely, and some unramified prime is
// inert (its Frobenius then generates the group).
struct CyclicCertificate {
  bool galois = false;
  bool cyclic = false;
  std::uint64_t inert_prime = 0;
};

inline CyclicCertificate cyclic_galois_certificate(const IntPolynomial& f, std::uint64_t prime_bound = 20000) {
  CyclicCertificate c;
  if (f.degree() == 1) return {true, true, 0};
  auto degs = stem_field_factor(f);
  c.galois = std::all_of(degs.begin(), degs.end(), [](int k) { return k == 1; });
  if (!c.galois) return c;
  const Integer D = discriminant(f);
  for (std::uint64_t q : primes_up_to(prime_bound)) {
    if (mpz_divisible_ui_p(D.get_mpz_t(), q)) continue;
    ModPolynomial fq(q, f);
    if (factor_degrees_squarefree(fq).size() == 1) {
      c.cyclic = true;
      c.inert_prime = q;
      break;
    }
  }
  return c;
}

}  // namespace hyperend
