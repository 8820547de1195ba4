#pragma once

#include <hyperend/exactalg/factor.hpp>
#include <hyperend/exactalg/integer.hpp>
#include <hyperend/exactalg/modpoly.hpp>
#include <hyperend/exactalg/polynomial.hpp>
#include <hyperend/exactalg/resultant.hpp>
#include <hyperend/exactalg/stem_field.hpp>
#include <hyperend/galois/splitting_algebra.hpp>
#include <hyperend/permgrp/group.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperend {

enum class GaloisFamily { Cp, Dp, Fp, Ap, Sp, Other };
enum class Certainty { certified, monte_carlo };

inline const char* to_string(Certainty c) { return c == Certainty::certified ? "certified" : "monte_carlo"; }

inline const char* family_prefix(GaloisFamily f) {
  switch (f) {
    case GaloisFamily::Cp: return "C";
    case GaloisFamily::Dp: return "D";
    case GaloisFamily::Fp: return "F";
    case GaloisFamily::Ap: return "A";
    case GaloisFamily::Sp: return "S";
    case GaloisFamily::Other: return "Other";
  }
  return "?";
}

struct GaloisLabel {
  GaloisFamily family = GaloisFamily::Other;
  int p = 0;
  // Order of the point stabiliser for subgroups C_p : C_d of AGL(1, p); 0 when not affine.
  int stabilizer_order = 0;
  bool two_transitive = false;
  Certainty certainty = Certainty::certified;
  nlohmann::ordered_json certificate = nlohmann::ordered_json::object();

  std::string name() const {
    if (family == GaloisFamily::Other) {
      if (stabilizer_order > 0) return "C" + std::to_string(p) + ":C" + std::to_string(stabilizer_order);
      return two_transitive ? "2-transitive" : "Other";
    }
    return family_prefix(family) + std::to_string(p);
  }
  bool affine() const { return stabilizer_order > 0; }
};

inline GaloisLabel affine_label(int p, int d, Certainty c) {
  GaloisLabel L;
  L.p = p;
  L.stabilizer_order = d;
  L.certainty = c;
  L.two_transitive = d == p - 1;
  L.family = d == 1 ? GaloisFamily::Cp : d == 2 ? GaloisFamily::Dp : d == p - 1 ? GaloisFamily::Fp : GaloisFamily::Other;
  return L;
}

// Inverse of GaloisLabel::name() for degree p: "C7", "D7", "F7", "A7", "S7", "C13:C3", "2-transitive".
inline GaloisLabel label_from_name(const std::string& name, int p, Certainty c = Certainty::certified) {
  const std::string ps = std::to_string(p);
  auto whole = [&](const std::string& prefix) { return name == prefix + ps; };
  GaloisLabel L;
  if (whole("C")) return affine_label(p, 1, c);
  if (whole("D")) return affine_label(p, 2, c);
  if (whole("F")) return affine_label(p, p - 1, c);
  if (whole("A") || whole("S") || name == "2-transitive" || name == "Other") {
    L.family = whole("A") ? GaloisFamily::Ap : whole("S") ? GaloisFamily::Sp : GaloisFamily::Other;
    L.p = p;
    L.two_transitive = name != "Other";
    L.certainty = c;
    return L;
  }
  const std::string prefix = "C" + ps + ":C";
  if (name.rfind(prefix, 0) == 0) {
    const int m = std::stoi(name.substr(prefix.size()));
    if (m < 1 || (p - 1) % m) throw std::invalid_argument("stabiliser order must divide p - 1");
    return affine_label(p, m, c);
  }
  throw std::invalid_argument("unknown galois label: " + name);
}

// Transitive permutation model of the label on Z/p, when the group is known exactly.
inline std::optional<PermutationGroup> label_group(const GaloisLabel& L) {
  if (L.affine()) return affine_subgroup(L.p, (L.p - 1) / L.stabilizer_order);
  if (L.family == GaloisFamily::Sp && L.p <= 7) return symmetric_group(L.p);
  if (L.family == GaloisFamily::Ap && L.p <= 7) {
    std::vector<Permutation> gens;
    for (int i = 2; i < L.p; ++i) gens.push_back(Permutation::from_cycles(L.p, {{0, 1, i}}));
    return closure(L.p, gens);
  }
  return std::nullopt;
}

// s = number of orbits of a point stabiliser on the remaining roots; 2-transitive labels give 1.
inline std::optional<int> label_orbit_count(const GaloisLabel& L) {
  if (L.two_transitive) return 1;
  if (L.affine()) return (L.p - 1) / L.stabilizer_order;
  return std::nullopt;
}

namespace detail {

inline nlohmann::ordered_json int_list(const std::vector<int>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (int x : v) a.push_back(x);
  return a;
}

}  // namespace detail

struct SexticTest {
  IntPolynomial depressed;
  IntPolynomial resolvent;
  std::optional<Integer> rational_root;
  int tschirnhaus_steps = 0;
};

// Rational-root test on the sextic resolvent, after Tschirnhaus transforms alpha -> alpha^2 + c alpha
// until the resolvent is squarefree.
inline SexticTest sextic_resolvent_test(const IntPolynomial& f) {
  SexticTest t;
  IntPolynomial g = monic_associate(f);
  for (long c = 0; c < 64; ++c) {
    if (c > 0) {
      const IntPolynomial h = monic_associate(f);
      RatPolynomial a{Rational(0), Rational(c), Rational(1)};
      RatPolynomial cp = element_charpoly(h, a);
      bool integral = true;
      for (auto& x : cp.coeffs()) integral = integral && x.get_den() == 1;
      if (!integral) continue;
      g = to_integer(cp);
      if (poly_gcd(g, g.derivative()).degree() > 0) continue;
    }
    t.depressed = depressed_quintic(g);
    t.resolvent = sextic_resolvent(t.depressed);
    t.tschirnhaus_steps = static_cast<int>(c);
    if (poly_gcd(t.resolvent, t.resolvent.derivative()).degree() > 0) continue;
    for (auto& [h, e] : factor_over_Q(t.resolvent).factors)
      if (h.degree() == 1) {
        Integer r = -h[0];
        if (h[1] != 1) throw std::logic_error("monic resolvent has a non-integral rational root");
        t.rational_root = r;
      }
    return t;
  }
  throw std::logic_error("no squarefree sextic resolvent found");
}

inline GaloisLabel quintic_galois(const IntPolynomial& f) {
  if (f.degree() != 5) throw std::invalid_argument("quintic required");
  if (!is_irreducible(f)) throw std::invalid_argument("f reducible");
  auto stem = stem_field_factorization(f);
  const Integer D = discriminant(f);
  const bool square = is_square(Rational(D));
  nlohmann::ordered_json cert;
  cert["discriminant"] = D.get_str();
  cert["discriminant_is_square"] = square;
  cert["stem_pattern"] = detail::int_list(stem.degrees);
  cert["norm_shift"] = stem.shift;
  cert["norm_squarefree_prime"] = stem.squarefree_prime;
  GaloisLabel L;
  if (stem.degrees == std::vector<int>{1, 1, 1, 1, 1}) {
    L = affine_label(5, 1, Certainty::certified);
  } else if (stem.degrees == std::vector<int>{1, 2, 2}) {
    L = affine_label(5, 2, Certainty::certified);
  } else if (stem.degrees == std::vector<int>{1, 4}) {
    if (square) {
      L.family = GaloisFamily::Ap;
      L.p = 5;
      L.two_transitive = true;
    } else {
      auto t = sextic_resolvent_test(f);
      cert["sextic_resolvent"] = to_string(t.resolvent);
      cert["tschirnhaus_steps"] = t.tschirnhaus_steps;
      cert["resolvent_rational_root"] = t.rational_root ? nlohmann::ordered_json(t.rational_root->get_str()) : nlohmann::ordered_json(nullptr);
      if (t.rational_root) {
        L = affine_label(5, 4, Certainty::certified);
      } else {
        L.family = GaloisFamily::Sp;
        L.p = 5;
        L.two_transitive = true;
      }
    }
  } else {
    throw std::logic_error("stem pattern impossible for a transitive quintic group");
  }
  L.certainty = Certainty::certified;
  L.certificate = std::move(cert);
  return L;
}

struct PrimeDegreeScreen {
  int p = 0;
  bool irreducible = false;
  bool order_p_element = false;
  std::uint64_t ord2_mod_p = 0;
  std::uint64_t index_of_2 = 0;
};

inline PrimeDegreeScreen prime_degree_screen(const IntPolynomial& f) {
  const int p = f.degree();
  if (p < 5 || p % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw std::invalid_argument("composite or even degree");
  PrimeDegreeScreen s;
  s.p = p;
  s.irreducible = is_irreducible(f);
  s.order_p_element = s.irreducible;
  s.ord2_mod_p = multiplicative_order(2, static_cast<std::uint64_t>(p));
  s.index_of_2 = static_cast<std::uint64_t>(p - 1) / s.ord2_mod_p;
  return s;
}

inline constexpr std::uint64_t kMinimumSampleBound = 100;

struct FrobeniusEvidence {
  int p = 0;
  std::uint64_t bound = 0;
  std::size_t primes_used = 0;
  std::map<std::vector<int>, std::size_t> observed;  // cycle type -> count
  std::size_t nonconforming = 0;
  bool full_stabilizer_type_seen = false;  // {1, p-1}
  int stabilizer_lcm = 1;                  // lcm of the d in observed {1, d, ..., d}
  bool consistent_with_Fp = false;
};

// {p} or {1, d, ..., d} with d | p - 1.
inline bool affine_cycle_type(const std::vector<int>& t, int p, int* d_out = nullptr) {
  if (t == std::vector<int>{p}) {
    if (d_out) *d_out = 1;
    return true;
  }
  if (t.empty() || t[0] != 1) return false;
  if (t.size() == static_cast<std::size_t>(p)) {
    if (d_out) *d_out = 1;
    return true;
  }
  if (t.size() < 2 || t[1] == 1) return false;
  const int d = t[1];
  for (std::size_t i = 1; i < t.size(); ++i)
    if (t[i] != d) return false;
  if ((p - 1) % d) return false;
  if (d_out) *d_out = d;
  return true;
}

// Factorization patterns of f mod q at all good primes q <= bound, in increasing order of q.
inline FrobeniusEvidence frobenius_evidence(const IntPolynomial& f, std::uint64_t bound) {
  if (bound < kMinimumSampleBound) throw std::invalid_argument("insufficient sample");
  const int p = f.degree();
  FrobeniusEvidence ev;
  ev.p = p;
  ev.bound = bound;
  for (std::uint64_t q : primes_up_to(bound)) {
    if (mpz_divisible_ui_p(f.lead().get_mpz_t(), q)) continue;
    ModPolynomial fq(q, f);
    if (!is_squarefree(fq)) continue;
    auto t = factor_degrees_squarefree(fq);
    ++ev.primes_used;
    ++ev.observed[t];
    int d = 0;
    if (!affine_cycle_type(t, p, &d)) {
      ++ev.nonconforming;
      continue;
    }
    ev.stabilizer_lcm = std::lcm(ev.stabilizer_lcm, d);
    if (d == p - 1) ev.full_stabilizer_type_seen = true;
  }
  ev.consistent_with_Fp = ev.nonconforming == 0 && ev.full_stabilizer_type_seen;
  return ev;
}

inline nlohmann::ordered_json to_json(const FrobeniusEvidence& ev) {
  nlohmann::ordered_json types = nlohmann::ordered_json::array();
  for (auto& [t, c] : ev.observed) types.push_back({{"cycle_type", detail::int_list(t)}, {"count", c}});
  return {{"p", ev.p},
          {"bound", ev.bound},
          {"primes_used", ev.primes_used},
          {"observed", types},
          {"nonconforming", ev.nonconforming},
          {"full_stabilizer_type_seen", ev.full_stabilizer_type_seen},
          {"verdict", ev.consistent_with_Fp ? "consistent with F_p" : "inconsistent with F_p"}};
}

// Evidence that a cyclic field L of degree s is the degree-s subfield of the splitting field of an
// F_p polynomial f. The Frobenius at q acts on the roots of f as x -> ax + b with ord(a) = d, read off
// the cycle type; its image in the cyclic quotient of order s has order d / gcd(d, (p - 1)/s), which
// must be the common factor degree of the L-polynomial mod q.
struct SubfieldEvidence {
  std::size_t primes_used = 0;
  std::size_t mismatches = 0;
  std::uint64_t first_mismatch = 0;
  bool compatible() const { return primes_used > 0 && mismatches == 0; }
};

inline SubfieldEvidence affine_quotient_evidence(const IntPolynomial& f, const IntPolynomial& field, std::uint64_t bound) {
  const int p = f.degree(), s = field.degree();
  if ((p - 1) % s) throw std::invalid_argument("subfield degree must divide p - 1");
  SubfieldEvidence ev;
  const Integer disc_field = discriminant(field);
  for (std::uint64_t q : primes_up_to(bound)) {
    if (mpz_divisible_ui_p(f.lead().get_mpz_t(), q) || mpz_divisible_ui_p(field.lead().get_mpz_t(), q)) continue;
    if (mpz_divisible_ui_p(disc_field.get_mpz_t(), q)) continue;
    ModPolynomial fq(q, f);
    if (!is_squarefree(fq)) continue;
    int d = 0;
    if (!affine_cycle_type(factor_degrees_squarefree(fq), p, &d)) {
      ++ev.mismatches;
      if (!ev.first_mismatch) ev.first_mismatch = q;
      continue;
    }
    const int expect = d / std::gcd(d, (p - 1) / s);
    auto degs = factor_degrees_squarefree(ModPolynomial(q, field));
    ++ev.primes_used;
    if (!std::all_of(degs.begin(), degs.end(), [expect](int k) { return k == expect; })) {
      ++ev.mismatches;
      if (!ev.first_mismatch) ev.first_mismatch = q;
    }
  }
  return ev;
}

inline constexpr std::uint64_t kDefaultSampleBound = 10000;

// Label for an irreducible f of odd prime degree p. Quintics are certified; for p <= 13 the stem
// pattern certifies C_p : C_d when it is {1, d, ..., d} with d < p - 1, and 2-transitivity when it is
// {1, p - 1}; the F_p verdict beyond that is Monte Carlo.
inline GaloisLabel galois_label(const IntPolynomial& f, std::uint64_t sample_bound = kDefaultSampleBound) {
  const int p = f.degree();
  if (p == 5) return quintic_galois(f);
  auto screen = prime_degree_screen(f);
  if (!screen.irreducible) throw std::invalid_argument("f reducible");
  nlohmann::ordered_json cert;
  cert["discriminant_is_square"] = is_square(Rational(discriminant(f)));
  std::optional<bool> two_transitive;
  if (p <= kStemFieldDegreeCap) {
    auto stem = stem_field_factorization(f);
    cert["stem_pattern"] = detail::int_list(stem.degrees);
    cert["norm_shift"] = stem.shift;
    cert["norm_squarefree_prime"] = stem.squarefree_prime;
    std::vector<int> rest(stem.degrees.begin() + 1, stem.degrees.end());
    const int d = rest.front();
    const bool uniform = std::all_of(rest.begin(), rest.end(), [d](int x) { return x == d; });
    if (uniform && d < p - 1) {
      // Not 2-transitive, hence solvable, hence C_p : C_d inside AGL(1, p).
      GaloisLabel L = affine_label(p, d, Certainty::certified);
      L.certificate = std::move(cert);
      return L;
    }
    two_transitive = rest.size() == 1;
    cert["two_transitive"] = *two_transitive;
  }
  auto ev = frobenius_evidence(f, sample_bound);
  cert["frobenius_evidence"] = to_json(ev);
  GaloisLabel L;
  if (ev.nonconforming == 0) {
    L = affine_label(p, ev.stabilizer_lcm, Certainty::monte_carlo);
    if (two_transitive && *two_transitive && ev.stabilizer_lcm != p - 1) L = affine_label(p, p - 1, Certainty::monte_carlo);
  } else {
    L.family = GaloisFamily::Other;
    L.p = p;
    L.two_transitive = two_transitive.value_or(false);
    L.certainty = two_transitive ? Certainty::certified : Certainty::monte_carlo;
  }
  L.certificate = std::move(cert);
  return L;
}

inline nlohmann::ordered_json to_json(const GaloisLabel& L) {
  nlohmann::ordered_json j;
  j["label"] = L.name();
  j["family"] = family_prefix(L.family);
  j["p"] = L.p;
  j["certainty"] = to_string(L.certainty);
  j["certificate"] = L.certificate;
  return j;
}

}  // namespace hyperend
