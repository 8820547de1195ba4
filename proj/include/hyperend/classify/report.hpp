#pragma once

// Constraint reports: permitted endomorphism scenarios, their machine-checkable clauses,
// candidate fields of definition L, and exclusions. Serialized with a fixed key order.

#include <hyperend/galois/galois.hpp>

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperend {

enum class ScenarioKind { trivial_Z, real_quadratic_order, number_field, cm_quartic, cm_power };

inline constexpr std::array<ScenarioKind, 5> kAllScenarioKinds{ScenarioKind::trivial_Z, ScenarioKind::real_quadratic_order,
                                                              ScenarioKind::number_field, ScenarioKind::cm_quartic,
                                                              ScenarioKind::cm_power};

inline const char* to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::trivial_Z: return "trivial_Z";
    case ScenarioKind::real_quadratic_order: return "real_quadratic_order";
    case ScenarioKind::number_field: return "number_field";
    case ScenarioKind::cm_quartic: return "cm_quartic";
    case ScenarioKind::cm_power: return "cm_power";
  }
  return "?";
}

inline ScenarioKind scenario_kind_from(const std::string& s) {
  for (auto k : kAllScenarioKinds)
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown scenario kind: " + s);
}

// Every clause a scenario can carry. The validator dispatches on this id.
enum class ClauseId {
  end_is_Z,
  quadratic_real_squarefree,
  quadratic_D_5_mod_8,
  quadratic_r_odd,
  quartic_cm,
  quartic_cyclic,
  number_field,
  l_maximal,
  l_inert,
  l_two_primes_equal_inertia,
  galois_cyclic,
  degree_divides_complement,
  cm_power,
  base_real_quadratic_5_mod_8,
};

inline constexpr std::array<ClauseId, 14> kAllClauses{
    ClauseId::end_is_Z,        ClauseId::quadratic_real_squarefree, ClauseId::quadratic_D_5_mod_8,
    ClauseId::quadratic_r_odd, ClauseId::quartic_cm,                ClauseId::quartic_cyclic,
    ClauseId::number_field,    ClauseId::l_maximal,                 ClauseId::l_inert,
    ClauseId::l_two_primes_equal_inertia, ClauseId::galois_cyclic,  ClauseId::degree_divides_complement,
    ClauseId::cm_power,        ClauseId::base_real_quadratic_5_mod_8};

inline std::string clause_text(ClauseId id, std::uint64_t l) {
  const std::string L = std::to_string(l);
  switch (id) {
    case ClauseId::end_is_Z: return "End(J_f) = Z";
    case ClauseId::quadratic_real_squarefree: return "E = Q(sqrt(D)) with D > 0 square-free";
    case ClauseId::quadratic_D_5_mod_8: return "D = 5 mod 8";
    case ClauseId::quadratic_r_odd: return "End(J_f) = Z[(1 + r sqrt(D))/2] with r odd";
    case ClauseId::quartic_cm: return "E is a degree 4 CM field";
    case ClauseId::quartic_cyclic: return "E/Q is cyclic";
    case ClauseId::number_field: return "E = End^0(J_f) is a number field";
    case ClauseId::l_maximal: return "End(J_f) is " + L + "-maximal in E";
    case ClauseId::l_inert: return L + " is totally inert in E/Q";
    case ClauseId::l_two_primes_equal_inertia: return "exactly two primes above " + L + " in E, with equal inertia degree";
    case ClauseId::galois_cyclic: return "E/Q is Galois with Gal(E/Q) = Z/sZ, s = [E:Q]";
    case ClauseId::degree_divides_complement: return "[E:Q] divides the order of the Frobenius complement";
    case ClauseId::cm_power:
      return "J_f is isogenous over Qbar to B^d, d > 1, B absolutely simple with CM by a proper subfield of Q(zeta_p)";
    case ClauseId::base_real_quadratic_5_mod_8: return "K contains a real quadratic field of discriminant 5 mod 8";
  }
  return "?";
}

inline const char* clause_checker(ClauseId id) {
  switch (id) {
    case ClauseId::end_is_Z: return "numfield.degree";
    case ClauseId::quadratic_real_squarefree: return "exactalg.squarefree_part";
    case ClauseId::quadratic_D_5_mod_8: return "numfield.quadratic_disc_class";
    case ClauseId::quadratic_r_odd: return "numfield.quadratic_order_conductor";
    case ClauseId::quartic_cm: return "numfield.quartic_invariants";
    case ClauseId::quartic_cyclic: return "numfield.quartic_invariants";
    case ClauseId::number_field: return "numfield.make_number_field";
    case ClauseId::l_maximal: return "numfield.is_l_maximal";
    case ClauseId::l_inert: return "numfield.splitting_shape";
    case ClauseId::l_two_primes_equal_inertia: return "numfield.splitting_shape";
    case ClauseId::galois_cyclic: return "numfield.cyclic_galois_certificate";
    case ClauseId::degree_divides_complement: return "numfield.degree";
    case ClauseId::cm_power: return "classify.cm_subfield_options";
    case ClauseId::base_real_quadratic_5_mod_8: return "classify.hypotheses";
  }
  return "?";
}

struct Clause {
  ClauseId id;
  std::string citation;
};

// One statement about L, the minimal field of definition of the endomorphisms.
struct LCandidate {
  std::string relation;                 // equals | contains | degree_at_most | degree_divisible_by
  std::optional<int> degree;            // [L:K], or the bound / divisor for the degree relations
  std::optional<std::string> defpoly;   // explicit generator over Q when known
  std::string description;
  bool unique = false;
  std::string galois_group;             // Gal(L/K) as an abstract group, when determined
  std::string condition;                // hypothesis under which the statement holds, e.g. "[E:Q] = 2"
  std::string citation;
};

struct CmSubfieldOption {
  int d = 0;       // J_f ~ B^d
  int degree = 0;  // [F:Q] = 2g/d
  IntPolynomial defpoly;
  bool totally_real = false;
  bool admissible = false;
};

struct EndScenario {
  ScenarioKind kind;
  std::vector<Clause> constraints;
  std::vector<LCandidate> L_candidates;
  std::string L_note;                        // set when the label and scenario give no statement about L
  std::vector<CmSubfieldOption> cm_subfields;  // cm_power only
};

struct Exclusion {
  ScenarioKind kind;
  std::string reason;
  std::string citation;
};

enum class BaseFieldMode { rational_exact, abstract };

struct Hypotheses {
  int p = 0;
  int g = 0;
  BaseFieldMode mode = BaseFieldMode::rational_exact;
  std::optional<GaloisLabel> galois_label;
  std::uint64_t l = 2;
  bool principally_polarised = true;
  bool jacobian = true;          // A = J_f for odd-degree f, so Gal(f) = Gal(K(A[2])/K)
  bool order_p_element = true;   // Gal(K(A[l])/K) contains an element of order p
  std::uint64_t ord_l_mod_p = 0;
  std::uint64_t index_of_l = 0;
  std::optional<std::string> poly;
  std::optional<Integer> discriminant;
  std::vector<Integer> base_real_quadratic;  // squarefree d with Q(sqrt d) inside K; empty for K = Q
};

struct ConstraintReport {
  Hypotheses hypotheses;
  std::vector<EndScenario> scenarios;
  std::vector<Exclusion> excluded;
  std::optional<int> s_bound;
  std::string certainty;
  std::vector<std::string> notes;

  bool has_scenario(ScenarioKind k) const {
    for (auto& s : scenarios)
      if (s.kind == k) return true;
    return false;
  }
  bool has_exclusion(ScenarioKind k) const {
    for (auto& e : excluded)
      if (e.kind == k) return true;
    return false;
  }
};

inline const char* to_string(BaseFieldMode m) { return m == BaseFieldMode::abstract ? "abstract" : "rational_exact"; }

namespace detail {

template <typename T>
nlohmann::ordered_json opt_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const Hypotheses& h) {
  nlohmann::ordered_json j;
  j["p"] = h.p;
  j["g"] = h.g;
  j["base_field_mode"] = to_string(h.mode);
  j["poly"] = detail::opt_json(h.poly);
  j["discriminant"] = h.discriminant ? nlohmann::ordered_json(h.discriminant->get_str()) : nlohmann::ordered_json(nullptr);
  if (h.galois_label) {
    j["galois_label"] = h.galois_label->name();
    j["galois_certainty"] = to_string(h.galois_label->certainty);
  } else {
    j["galois_label"] = nullptr;
    j["galois_certainty"] = nullptr;
  }
  j["l"] = h.l;
  j["principally_polarised"] = h.principally_polarised;
  j["jacobian"] = h.jacobian;
  j["order_p_element"] = h.order_p_element;
  j["ord_l_mod_p"] = h.ord_l_mod_p;
  j["index_of_l"] = h.index_of_l;
  nlohmann::ordered_json bq = nlohmann::ordered_json::array();
  for (auto& d : h.base_real_quadratic) bq.push_back(d.get_str());
  j["base_real_quadratic"] = bq;
  return j;
}

inline nlohmann::ordered_json to_json(const LCandidate& c) {
  nlohmann::ordered_json j;
  j["relation"] = c.relation;
  j["degree"] = detail::opt_json(c.degree);
  j["field"] = detail::opt_json(c.defpoly);
  j["description"] = c.description;
  j["unique"] = c.unique;
  j["galois_group"] = c.galois_group;
  j["condition"] = c.condition;
  j["citation"] = c.citation;
  return j;
}

inline nlohmann::ordered_json to_json(const ConstraintReport& r) {
  nlohmann::ordered_json j;
  j["hypotheses"] = to_json(r.hypotheses);
  nlohmann::ordered_json sc = nlohmann::ordered_json::array();
  for (auto& s : r.scenarios) {
    nlohmann::ordered_json e;
    e["kind"] = to_string(s.kind);
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (auto& c : s.constraints) {
      nlohmann::ordered_json cj;
      cj["clause"] = clause_text(c.id, r.hypotheses.l);
      cj["citation"] = c.citation;
      cj["checker"] = clause_checker(c.id);
      cs.push_back(cj);
    }
    e["constraints"] = cs;
    nlohmann::ordered_json lc = nlohmann::ordered_json::array();
    for (auto& c : s.L_candidates) lc.push_back(to_json(c));
    e["L_candidates"] = lc;
    if (!s.L_note.empty()) e["L_note"] = s.L_note;
    if (s.kind == ScenarioKind::cm_power) {
      nlohmann::ordered_json opts = nlohmann::ordered_json::array();
      for (auto& o : s.cm_subfields)
        opts.push_back({{"d", o.d}, {"degree", o.degree}, {"defpoly", to_string(o.defpoly)}});
      e["cm_subfields"] = opts;
    }
    sc.push_back(e);
  }
  j["scenarios"] = sc;
  nlohmann::ordered_json ex = nlohmann::ordered_json::array();
  for (auto& e : r.excluded) {
    nlohmann::ordered_json ej;
    ej["kind"] = to_string(e.kind);
    ej["reason"] = e.reason;
    ej["citation"] = e.citation;
    ex.push_back(ej);
  }
  j["excluded"] = ex;
  j["s_bound"] = detail::opt_json(r.s_bound);
  j["certainty"] = r.certainty;
  j["notes"] = r.notes;
  return j;
}

inline ClauseId clause_from_text(const std::string& text, std::uint64_t l) {
  for (auto id : kAllClauses)
    if (clause_text(id, l) == text) return id;
  throw std::invalid_argument("unknown clause: " + text);
}

// Inverse of to_json, enough to validate candidates against a stored report.
inline ConstraintReport report_from_json(const nlohmann::json& j) {
  for (const char* key : {"hypotheses", "scenarios", "excluded", "s_bound", "certainty"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("report lacks key ") + key);
  ConstraintReport r;
  const auto& h = j.at("hypotheses");
  r.hypotheses.p = h.at("p").get<int>();
  r.hypotheses.g = h.at("g").get<int>();
  r.hypotheses.mode = h.at("base_field_mode").get<std::string>() == "abstract" ? BaseFieldMode::abstract
                                                                                : BaseFieldMode::rational_exact;
  if (!h.at("poly").is_null()) r.hypotheses.poly = h.at("poly").get<std::string>();
  if (!h.at("discriminant").is_null()) r.hypotheses.discriminant = Integer(h.at("discriminant").get<std::string>());
  if (!h.at("galois_label").is_null())
    r.hypotheses.galois_label =
        label_from_name(h.at("galois_label").get<std::string>(), r.hypotheses.p,
                        h.at("galois_certainty").get<std::string>() == "monte_carlo" ? Certainty::monte_carlo : Certainty::certified);
  r.hypotheses.l = h.at("l").get<std::uint64_t>();
  r.hypotheses.principally_polarised = h.at("principally_polarised").get<bool>();
  r.hypotheses.jacobian = h.at("jacobian").get<bool>();
  r.hypotheses.order_p_element = h.at("order_p_element").get<bool>();
  r.hypotheses.ord_l_mod_p = h.at("ord_l_mod_p").get<std::uint64_t>();
  r.hypotheses.index_of_l = h.at("index_of_l").get<std::uint64_t>();
  for (auto& d : h.at("base_real_quadratic")) r.hypotheses.base_real_quadratic.emplace_back(d.get<std::string>());
  for (auto& s : j.at("scenarios")) {
    EndScenario e{scenario_kind_from(s.at("kind").get<std::string>()), {}, {}, {}, {}};
    for (auto& c : s.at("constraints"))
      e.constraints.push_back({clause_from_text(c.at("clause").get<std::string>(), r.hypotheses.l),
                               c.at("citation").get<std::string>()});
    for (auto& c : s.at("L_candidates")) {
      LCandidate lc;
      lc.relation = c.at("relation").get<std::string>();
      if (!c.at("degree").is_null()) lc.degree = c.at("degree").get<int>();
      if (!c.at("field").is_null()) lc.defpoly = c.at("field").get<std::string>();
      lc.description = c.at("description").get<std::string>();
      lc.unique = c.at("unique").get<bool>();
      lc.galois_group = c.at("galois_group").get<std::string>();
      lc.condition = c.at("condition").get<std::string>();
      lc.citation = c.at("citation").get<std::string>();
      e.L_candidates.push_back(lc);
    }
    if (s.contains("L_note")) e.L_note = s.at("L_note").get<std::string>();
    if (s.contains("cm_subfields"))
      for (auto& o : s.at("cm_subfields")) {
        CmSubfieldOption opt;
        opt.d = o.at("d").get<int>();
        opt.degree = o.at("degree").get<int>();
        opt.defpoly = parse_polynomial(o.at("defpoly").get<std::string>());
        opt.admissible = true;
        e.cm_subfields.push_back(opt);
      }
    r.scenarios.push_back(e);
  }
  for (auto& e : j.at("excluded"))
    r.excluded.push_back({scenario_kind_from(e.at("kind").get<std::string>()), e.at("reason").get<std::string>(),
                          e.at("citation").get<std::string>()});
  if (!j.at("s_bound").is_null()) r.s_bound = j.at("s_bound").get<int>();
  r.certainty = j.at("certainty").get<std::string>();
  if (j.contains("notes"))
    for (auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
  return r;
}

}  // namespace hyperend
