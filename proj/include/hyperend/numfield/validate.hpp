#pragma once

// Checks a candidate endomorphism ring (or algebra) against every clause of a ConstraintReport.

#include <hyperend/classify/report.hpp>
#include <hyperend/exactalg/factor.hpp>
#include <hyperend/exactalg/integer.hpp>
#include <hyperend/exactalg/polynomial.hpp>
#include <hyperend/exactalg/resultant.hpp>
#include <hyperend/numfield/numfield.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperend {

enum class OrderSpec {
  equation,     // Z[theta] for the defining polynomial
  maximal,      // the ring of integers
  unspecified,  // only the algebra End^0 is claimed
};

// Z, a quadratic order of conductor r in Q(sqrt D), or an order in the field defined by defpoly.
struct EndCandidate {
  enum class Kind { integers, quadratic_order, number_field } kind = Kind::integers;
  Integer D = 0;  // squarefree
  Integer conductor = 1;
  IntPolynomial defpoly;
  OrderSpec order = OrderSpec::unspecified;
  std::string description;

  int degree() const {
    switch (kind) {
      case Kind::integers: return 1;
      case Kind::quadratic_order: return 2;
      case Kind::number_field: return defpoly.degree();
    }
    return 0;
  }
  // Monic defining polynomial of End^0 (x for Q).
  IntPolynomial field_poly() const {
    if (kind == Kind::integers) return IntPolynomial::x();
    if (kind == Kind::quadratic_order) return IntPolynomial{-D, Integer(0), Integer(1)};
    return defpoly;
  }
};

// {"type": "integers"} | {"type": "quadratic_order", "D": d, "conductor": r}
// | {"type": "number_field", "defpoly": "...", "order": "equation" | "maximal" | "unspecified"}
inline EndCandidate candidate_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type")) throw std::invalid_argument("malformed candidate: missing type");
  const std::string type = j.at("type").get<std::string>();
  EndCandidate c;
  c.description = j.value("description", std::string());
  auto integer_field = [&](const char* key, const Integer& dflt) -> Integer {
    if (!j.contains(key)) return dflt;
    const auto& v = j.at(key);
    return v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long>());
  };
  if (type == "integers") {
    c.kind = EndCandidate::Kind::integers;
    c.order = OrderSpec::maximal;
    return c;
  }
  if (type == "quadratic_order") {
    c.kind = EndCandidate::Kind::quadratic_order;
    c.D = integer_field("D", 0);
    c.conductor = integer_field("conductor", 1);
    if (c.D == 0 || c.D == 1 || !is_squarefree(c.D)) throw std::invalid_argument("malformed candidate: D must be squarefree, not 0 or 1");
    if (c.conductor < 1) throw std::invalid_argument("malformed candidate: conductor must be positive");
    c.order = OrderSpec::equation;
    return c;
  }
  if (type == "number_field") {
    c.kind = EndCandidate::Kind::number_field;
    c.defpoly = parse_polynomial(j.at("defpoly").get<std::string>());
    if (c.defpoly.degree() < 1 || c.defpoly.lead() != 1 || !is_irreducible(c.defpoly))
      throw std::invalid_argument("malformed candidate: defpoly must be monic irreducible");
    const std::string order = j.value("order", std::string("unspecified"));
    if (order == "equation")
      c.order = OrderSpec::equation;
    else if (order == "maximal")
      c.order = OrderSpec::maximal;
    else if (order == "unspecified")
      c.order = OrderSpec::unspecified;
    else
      throw std::invalid_argument("malformed candidate: order must be equation, maximal or unspecified");
    if (c.defpoly.degree() == 2) {
      // Z[theta] for a quadratic defpoly is the order of conductor sqrt(disc / d_K).
      const Integer disc = discriminant(c.defpoly);
      const Integer d = squarefree_part(disc);
      const Integer dK = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1 ? d : Integer(4 * d);
      c.kind = EndCandidate::Kind::quadratic_order;
      c.D = d;
      if (c.order == OrderSpec::equation) {
        auto r = exact_sqrt(Integer(disc / dK));
        if (!r) throw std::logic_error("quadratic discriminant is not a square multiple of the field discriminant");
        c.conductor = *r;
      } else if (c.order == OrderSpec::maximal) {
        c.conductor = 1;
      } else {
        c.conductor = 0;  // unspecified order
      }
    }
    return c;
  }
  throw std::invalid_argument("malformed candidate: unknown type " + type);
}

enum class Verdict { pass, fail, undetermined, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::undetermined: return "undetermined";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "?";
}

struct ClauseVerdict {
  ClauseId id;
  Verdict verdict;
  std::string detail;
};

struct ScenarioVerdict {
  ScenarioKind kind;
  std::size_t index = 0;
  std::vector<ClauseVerdict> clauses;
  Verdict verdict = Verdict::pass;
};

struct ValidationResult {
  std::vector<ScenarioVerdict> scenarios;
  // pass: some scenario passes every applicable clause; fail: every scenario has a failing clause.
  Verdict overall = Verdict::fail;
  std::optional<std::size_t> matching_scenario;
};

namespace detail {

inline ClauseVerdict check_clause(ClauseId id, const EndCandidate& c, const ConstraintReport& r) {
  using K = EndCandidate::Kind;
  const std::uint64_t l = r.hypotheses.l;
  const int n = c.degree();
  auto verdict = [&](bool ok, std::string why) { return ClauseVerdict{id, ok ? Verdict::pass : Verdict::fail, std::move(why)}; };
  auto quadratic = c.kind == K::quadratic_order;
  const bool order_known = !(c.kind == K::quadratic_order ? c.conductor == 0 : c.order == OrderSpec::unspecified);
  switch (id) {
    case ClauseId::end_is_Z: return verdict(c.kind == K::integers, "[E:Q] = " + std::to_string(n));
    case ClauseId::quadratic_real_squarefree:
      if (!quadratic) return verdict(false, "E is not quadratic");
      return verdict(c.D > 0, "D = " + c.D.get_str());
    case ClauseId::quadratic_D_5_mod_8: {
      if (!quadratic) return verdict(false, "E is not quadratic");
      auto q = quadratic_disc_class(c.D);
      return verdict(q.two_inert, "D mod 8 = " + std::to_string(mpz_fdiv_ui(c.D.get_mpz_t(), 8)));
    }
    case ClauseId::quadratic_r_odd: {
      if (!quadratic) return verdict(false, "E is not quadratic");
      if (!order_known) return {id, Verdict::not_applicable, "only End^0 is given"};
      if (mpz_fdiv_ui(c.D.get_mpz_t(), 4) != 1) return verdict(false, "D is not 1 mod 4");
      return verdict(mpz_odd_p(c.conductor.get_mpz_t()) != 0, "r = " + c.conductor.get_str());
    }
    case ClauseId::quartic_cm: {
      if (n != 4) return verdict(false, "[E:Q] = " + std::to_string(n));
      return verdict(quartic_invariants(c.field_poly()).is_cm, "quartic_invariants");
    }
    case ClauseId::quartic_cyclic: {
      if (n != 4) return verdict(false, "[E:Q] = " + std::to_string(n));
      return verdict(quartic_invariants(c.field_poly()).is_cyclic, "quartic_invariants");
    }
    case ClauseId::number_field: return verdict(true, "candidate is a field");
    case ClauseId::l_maximal: {
      if (c.kind == K::integers) return verdict(true, "Z is maximal");
      if (!order_known) return {id, Verdict::not_applicable, "only End^0 is given"};
      if (quadratic) return verdict(!mpz_divisible_ui_p(c.conductor.get_mpz_t(), l), "conductor " + c.conductor.get_str());
      if (c.order == OrderSpec::maximal) return verdict(true, "maximal order");
      return verdict(is_l_maximal(c.defpoly, l), "Dedekind criterion on the defining polynomial");
    }
    case ClauseId::l_inert:
    case ClauseId::l_two_primes_equal_inertia: {
      if (c.kind == K::integers) return verdict(id == ClauseId::l_inert, "E = Q");
      auto s = splitting_shape(c.field_poly(), l);
      if (!s.certified) return {id, Verdict::undetermined, "no l-maximal presentation found"};
      if (id == ClauseId::l_inert) return verdict(s.totally_inert(n), to_string(s));
      const bool two = s.prime_count() == 2 && s.shape[0].second == s.shape[1].second;
      return verdict(two, to_string(s));
    }
    case ClauseId::galois_cyclic: {
      if (n == 1) return verdict(true, "E = Q");
      auto cert = cyclic_galois_certificate(c.field_poly());
      if (!cert.galois) return verdict(false, "E/Q is not Galois");
      if (!cert.cyclic) return {id, Verdict::undetermined, "Galois, but no inert prime found below the search bound"};
      return verdict(true, "Galois, inert prime " + std::to_string(cert.inert_prime));
    }
    case ClauseId::degree_divides_complement:
      return verdict((r.hypotheses.p - 1) % n == 0, "[E:Q] = " + std::to_string(n));
    case ClauseId::cm_power: return verdict(false, "End^0 of B^d with d > 1 is not a field");
    case ClauseId::base_real_quadratic_5_mod_8: {
      for (auto& d : r.hypotheses.base_real_quadratic)
        if (mpz_fdiv_ui(d.get_mpz_t(), 8) == 5) return verdict(true, "K contains Q(sqrt(" + d.get_str() + "))");
      return verdict(false, "declared base field has no such subfield");
    }
  }
  return {id, Verdict::undetermined, "unknown clause"};
}

}  // namespace detail

inline ValidationResult validate_end_candidate(const EndCandidate& c, const ConstraintReport& r) {
  ValidationResult out;
  bool any_undetermined = false;
  for (std::size_t i = 0; i < r.scenarios.size(); ++i) {
    ScenarioVerdict sv{r.scenarios[i].kind, i, {}, Verdict::pass};
    bool fail = false, undet = false;
    for (auto& cl : r.scenarios[i].constraints) {
      auto v = detail::check_clause(cl.id, c, r);
      fail = fail || v.verdict == Verdict::fail;
      undet = undet || v.verdict == Verdict::undetermined;
      sv.clauses.push_back(std::move(v));
    }
    sv.verdict = fail ? Verdict::fail : undet ? Verdict::undetermined : Verdict::pass;
    if (sv.verdict == Verdict::pass && !out.matching_scenario) out.matching_scenario = i;
    any_undetermined = any_undetermined || sv.verdict == Verdict::undetermined;
    out.scenarios.push_back(std::move(sv));
  }
  out.overall = out.matching_scenario ? Verdict::pass : any_undetermined ? Verdict::undetermined : Verdict::fail;
  return out;
}

inline nlohmann::ordered_json to_json(const ValidationResult& v, std::uint64_t l = 2) {
  nlohmann::ordered_json sc = nlohmann::ordered_json::array();
  for (auto& s : v.scenarios) {
    nlohmann::ordered_json cl = nlohmann::ordered_json::array();
    for (auto& c : s.clauses)
      cl.push_back({{"clause", clause_text(c.id, l)}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}});
    sc.push_back({{"kind", to_string(s.kind)}, {"index", s.index}, {"verdict", to_string(s.verdict)}, {"clauses", cl}});
  }
  nlohmann::ordered_json j;
  j["overall"] = to_string(v.overall);
  j["matching_scenario"] = v.matching_scenario ? nlohmann::ordered_json(*v.matching_scenario) : nlohmann::ordered_json(nullptr);
  j["scenarios"] = sc;
  return j;
}

}  // namespace hyperend
