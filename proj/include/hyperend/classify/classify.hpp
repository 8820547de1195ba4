#pragma once

// Rule pipeline from screened hypotheses to a ConstraintReport. Rules are applied in a fixed
// order; every clause and exclusion carries the label of the statement it comes from.

#include <hyperend/classify/report.hpp>
#include <hyperend/exactalg/integer.hpp>
#include <hyperend/exactalg/resultant.hpp>
#include <hyperend/galois/galois.hpp>
#include <hyperend/numfield/numfield.hpp>
#include <hyperend/permgrp/group.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperend {

namespace cite {
inline constexpr const char* kPrimitiveRoot = "Theorem 2_torsion_all_thms_put_together_HE";
inline constexpr const char* kIndexTwo = "Theorem 2_torsion_all_thms_put_together_HE_g_odd";
inline constexpr const char* kDegreeFive = "Theorem deg 5 thm";
inline constexpr const char* kAbelianSurface = "Theorem ab_surface";
inline constexpr const char* kGeneralL = "Theorem general_l_is_primitive_root";
inline constexpr const char* kPPAV = "Theorem 2_generates_index_2subgroup_for_PPAV";
inline constexpr const char* kFieldsOfDefinition = "Theorem Fields_of_definition_thm";
inline constexpr const char* kSqrtDiscRemark = "Remark after Theorem Fields_of_definition_thm";
inline constexpr const char* kFiveNotDividing = "Corollary 5_does_not_divide_deg_of_extension";
inline constexpr const char* kCmPower = "Proposition deg_min_fiel_def_divisible_by_large_prime";
inline constexpr const char* kBoundOnDim = "Proposition bound_on_dim_over_K";
inline constexpr const char* kFrobenius = "Theorem Field_def_Frob";
inline constexpr const char* kAffine = "Corollary Field_def_AGL(1,q)";
inline constexpr const char* kDihedralCm = "Proposition field_def_CM_Dm";
inline constexpr const char* kDihedral3Mod4 = "Corollary after Proposition minimalfield_2group";
inline constexpr const char* kCyclicFive = "Proposition field_def_C5";
inline constexpr const char* kCyclicFiveCm = "Corollary C5_with_CM";
}  // namespace cite

// Proper subfields F of Q(zeta_p) that can be CM fields of B with A ~ B^d: [F:Q] = 2g/d for d | g,
// d > 1. All options, with the CM (totally imaginary) test recorded.
inline std::vector<CmSubfieldOption> cm_subfield_candidates(int p, int g) {
  if (p < 3 || !is_prime_u64(static_cast<std::uint64_t>(p)) || p != 2 * g + 1)
    throw std::invalid_argument("p = 2g + 1 must be an odd prime");
  std::vector<CmSubfieldOption> out;
  for (int d = 2; d <= g; ++d) {
    if (g % d) continue;
    CmSubfieldOption o;
    o.d = d;
    o.degree = 2 * g / d;
    auto sub = cyclotomic_subfield(static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(o.degree));
    o.defpoly = sub.field.defpoly;
    o.totally_real = sub.totally_real;
    // Subfields of Q(zeta_p) are Galois: either totally real or totally imaginary, and the
    // totally imaginary ones are CM.
    o.admissible = !sub.totally_real;
    out.push_back(o);
  }
  return out;
}

// The admissible options only; empty means the CM-power case cannot occur.
inline std::vector<CmSubfieldOption> cm_subfield_options(int p, int g) {
  auto all = cm_subfield_candidates(p, g);
  std::vector<CmSubfieldOption> out;
  for (auto& o : all)
    if (o.admissible) out.push_back(o);
  return out;
}

struct DimensionBound {
  int s = 0;
  bool end_K_trivial = false;  // s = 1: End_K(J_f) = Z
};

inline DimensionBound dimension_bound(const PermutationGroup& G) {
  const int s = stabilizer_orbit_count(G);
  return {s, s == 1};
}

inline DimensionBound dimension_bound(const GaloisLabel& L) {
  if (auto s = label_orbit_count(L)) return {*s, *s == 1};
  if (auto G = label_group(L)) return dimension_bound(*G);
  throw std::invalid_argument("no transitive permutation model for label " + L.name());
}

struct ClassifyOptions {
  std::uint64_t sample_bound = kDefaultSampleBound;
  std::optional<GaloisLabel> label;  // reuse a label already computed for f
};

namespace detail {

inline LCandidate quadratic_L(const Integer& d, const std::string& condition, const std::string& citation) {
  LCandidate c;
  c.relation = "equals";
  c.degree = 2;
  c.defpoly = to_string(IntPolynomial{-d, Integer(0), Integer(1)});
  c.description = "K(sqrt(" + d.get_str() + ")), the unique quadratic extension of K inside K(f)";
  c.unique = true;
  c.galois_group = "Z/2Z";
  c.condition = condition;
  c.citation = citation;
  return c;
}

inline LCandidate trivial_L(const std::string& condition, const std::string& citation) {
  LCandidate c;
  c.relation = "equals";
  c.degree = 1;
  c.defpoly = "x";
  c.description = "K";
  c.unique = true;
  c.galois_group = "1";
  c.condition = condition;
  c.citation = citation;
  return c;
}

inline std::optional<Integer> sqrt_disc_class(const Hypotheses& h) {
  if (!h.discriminant) return std::nullopt;
  Integer d = squarefree_part(*h.discriminant);
  if (d == 1) return std::nullopt;
  return d;
}

// Field-of-definition statements for an affine label C_p : C_m with E a number field of degree s.
inline void affine_L_candidates(const Hypotheses& h, EndScenario& sc) {
  const GaloisLabel& L = *h.galois_label;
  const int p = h.p;
  if (L.family == GaloisFamily::Fp) {
    for (auto s64 : divisors(static_cast<std::uint64_t>(p - 1))) {
      const int s = static_cast<int>(s64);
      const std::string cond = "[E:Q] = " + std::to_string(s);
      if (s == 1) {
        sc.L_candidates.push_back(trivial_L(cond, cite::kAffine));
        continue;
      }
      if (s == 2) {
        if (auto d = sqrt_disc_class(h)) {
          auto c = quadratic_L(*d, cond, cite::kAffine);
          sc.L_candidates.push_back(c);
          continue;
        }
      }
      LCandidate c;
      c.relation = "equals";
      c.degree = s;
      c.description = "the unique degree " + std::to_string(s) + " extension of K inside K(f)";
      c.unique = true;
      c.galois_group = "Z/" + std::to_string(s) + "Z";
      c.condition = cond;
      c.citation = cite::kAffine;
      sc.L_candidates.push_back(c);
    }
    return;
  }
  if (L.family == GaloisFamily::Dp) {
    LCandidate c;
    c.degree = 2;
    c.unique = true;
    c.condition = "[E:Q] = " + std::to_string(p - 1);
    if (p % 4 == 3) {
      c.relation = "equals";
      c.description = "the unique quadratic extension of K inside K(f)";
      c.galois_group = "Z/2Z";
      c.citation = cite::kDihedral3Mod4;
    } else {
      c.relation = "contains";
      c.description = "L contains the unique quadratic extension of K inside K(f)";
      c.citation = cite::kDihedralCm;
    }
    sc.L_candidates.push_back(c);
    return;
  }
  sc.L_note = "no field-of-definition statement for label " + L.name();
}

inline Exclusion cm_power_exclusion(int p, int g) {
  std::string reason = "cm_subfield_options(" + std::to_string(p) + ", " + std::to_string(g) +
                       ") is empty: every proper subfield of Q(zeta_" + std::to_string(p) +
                       ") of degree 2g/d with d | g, d > 1 is totally real";
  return {ScenarioKind::cm_power, reason, p == 5 ? cite::kFiveNotDividing : cite::kCmPower};
}

inline EndScenario cm_power_scenario(const Hypotheses& h, const std::vector<CmSubfieldOption>& opts,
                                     const char* citation) {
  EndScenario sc{ScenarioKind::cm_power, {{ClauseId::cm_power, citation}}, {}, {}, opts};
  LCandidate c;
  c.relation = "degree_divisible_by";
  c.degree = h.p;
  c.description = "Gal(L/K) contains an element of order " + std::to_string(h.p);
  c.citation = cite::kGeneralL;
  sc.L_candidates.push_back(c);
  return sc;
}

// Degree-5 trichotomy (abelian surfaces with an element of order 5 acting on A[2]).
inline void apply_degree_five(const Hypotheses& h, ConstraintReport& r) {
  const char* main = h.jacobian ? cite::kDegreeFive : cite::kAbelianSurface;
  const std::optional<GaloisLabel>& lab = h.galois_label;
  const bool label_rules = h.jacobian && lab.has_value();
  const bool c5 = label_rules && lab->family == GaloisFamily::Cp;
  const bool d5 = label_rules && lab->family == GaloisFamily::Dp;
  const bool f5 = label_rules && lab->family == GaloisFamily::Fp;

  auto c5_bound = [&](EndScenario& sc) {
    LCandidate c;
    c.relation = "degree_at_most";
    c.degree = 2;
    c.description = "[L:K] <= 2";
    c.citation = cite::kCyclicFive;
    sc.L_candidates.push_back(c);
  };

  EndScenario z{ScenarioKind::trivial_Z, {{ClauseId::end_is_Z, main}}, {}, {}, {}};
  z.L_candidates.push_back(trivial_L("", main));
  r.scenarios.push_back(z);

  EndScenario rq{ScenarioKind::real_quadratic_order,
                 {{ClauseId::quadratic_real_squarefree, main},
                  {ClauseId::quadratic_D_5_mod_8, main},
                  {ClauseId::quadratic_r_odd, main}},
                 {},
                 {},
                 {}};
  if (f5) {
    if (auto d = sqrt_disc_class(h)) {
      rq.L_candidates.push_back(quadratic_L(*d, "", cite::kFieldsOfDefinition));
      rq.L_candidates.back().citation = std::string(cite::kFieldsOfDefinition) + "; " + cite::kSqrtDiscRemark;
    } else {
      LCandidate c;
      c.relation = "equals";
      c.degree = 2;
      c.description = "the unique quadratic extension of K inside K(f)";
      c.unique = true;
      c.galois_group = "Z/2Z";
      c.citation = cite::kFieldsOfDefinition;
      rq.L_candidates.push_back(c);
    }
  } else if (c5) {
    c5_bound(rq);
  } else {
    rq.L_note = label_rules ? "no field-of-definition statement for label " + lab->name()
                            : "no Galois label: field-of-definition rules not applied";
  }
  r.scenarios.push_back(rq);

  // C_5 with CM needs a real quadratic subfield of K of discriminant 5 mod 8.
  bool base_ok = false;
  for (auto& d : h.base_real_quadratic)
    if (d > 0 && mpz_fdiv_ui(d.get_mpz_t(), 8) == 5) base_ok = true;
  if (c5 && !base_ok) {
    r.excluded.push_back({ScenarioKind::cm_quartic,
                          h.mode == BaseFieldMode::rational_exact
                              ? "Gal(f) = C5 and K = Q contains no real quadratic field of discriminant 5 mod 8"
                              : "Gal(f) = C5 and K is not declared to contain a real quadratic field of discriminant 5 mod 8",
                          cite::kCyclicFiveCm});
  } else {
    EndScenario cm{ScenarioKind::cm_quartic,
                   {{ClauseId::quartic_cm, main}, {ClauseId::l_maximal, main}, {ClauseId::l_inert, main}},
                   {},
                   {},
                   {}};
    if (f5) {
      cm.constraints.push_back({ClauseId::quartic_cyclic, cite::kFieldsOfDefinition});
      LCandidate c;
      c.relation = "equals";
      c.degree = 4;
      c.description = "the unique degree 4 extension of K inside K(f)";
      c.unique = true;
      c.galois_group = "Z/4Z";
      c.citation = cite::kFieldsOfDefinition;
      cm.L_candidates.push_back(c);
    } else if (d5) {
      LCandidate c;
      c.relation = "contains";
      c.degree = 2;
      c.description = "L contains the unique quadratic extension of K inside K(f)";
      c.unique = true;
      c.citation = cite::kFieldsOfDefinition;
      cm.L_candidates.push_back(c);
    } else if (c5) {
      cm.constraints.push_back({ClauseId::base_real_quadratic_5_mod_8, cite::kCyclicFiveCm});
      c5_bound(cm);
    } else {
      cm.L_note = label_rules ? "no field-of-definition statement for label " + lab->name()
                              : "no Galois label: field-of-definition rules not applied";
    }
    r.scenarios.push_back(cm);
  }
  r.excluded.push_back(cm_power_exclusion(5, 2));
}

// Prime degree p >= 7 (or any p in abstract mode with l != 2).
inline void apply_general(const Hypotheses& h, ConstraintReport& r) {
  const bool primitive = h.index_of_l == 1;
  const bool odd_g = h.g % 2 == 1;
  const bool ppav_rule = odd_g && h.ord_l_mod_p == static_cast<std::uint64_t>(h.g) && h.principally_polarised;
  const bool l2_jac = h.l == 2 && h.jacobian;
  const char* field_cite = primitive ? (l2_jac ? cite::kPrimitiveRoot : cite::kGeneralL) : (l2_jac ? cite::kIndexTwo : cite::kPPAV);

  const bool label_rules = h.jacobian && h.l == 2 && h.galois_label.has_value();
  const bool frob_rules = label_rules && h.galois_label->family == GaloisFamily::Fp;

  auto add_label_clauses = [&](EndScenario& sc) {
    if (frob_rules) {
      sc.constraints.push_back({ClauseId::galois_cyclic, cite::kAffine});
      sc.constraints.push_back({ClauseId::degree_divides_complement, cite::kFrobenius});
    }
    if (label_rules)
      affine_L_candidates(h, sc);
    else
      sc.L_note = "no Galois label: field-of-definition rules not applied";
  };

  if (!h.order_p_element) {
    r.notes.push_back("Gal(K(A[l])/K) is not declared to contain an element of order p: no theorem applies");
    return;
  }

  if (primitive || ppav_rule) {
    EndScenario inert{ScenarioKind::number_field,
                      {{ClauseId::number_field, field_cite}, {ClauseId::l_inert, field_cite}},
                      {},
                      {},
                      {}};
    if (primitive) inert.constraints.push_back({ClauseId::l_maximal, field_cite});
    add_label_clauses(inert);
    r.scenarios.push_back(inert);

    if (odd_g && ppav_rule && !primitive) {
      EndScenario two{ScenarioKind::number_field,
                      {{ClauseId::number_field, field_cite}, {ClauseId::l_two_primes_equal_inertia, field_cite}},
                      {},
                      {},
                      {}};
      add_label_clauses(two);
      r.scenarios.push_back(two);
    } else if (odd_g && primitive) {
      r.notes.push_back(std::string("case with two primes above ") + std::to_string(h.l) +
                        " of equal inertia degree does not occur when " + std::to_string(h.l) +
                        " is a primitive root mod p (" + (l2_jac ? cite::kIndexTwo : cite::kGeneralL) + ")");
    }

    auto opts = cm_subfield_options(h.p, h.g);
    if (opts.empty())
      r.excluded.push_back(cm_power_exclusion(h.p, h.g));
    else
      r.scenarios.push_back(cm_power_scenario(h, opts, primitive ? field_cite : cite::kPPAV));
    return;
  }

  if (odd_g && h.ord_l_mod_p == static_cast<std::uint64_t>(h.g) && !h.principally_polarised)
    r.notes.push_back("index 2 rule needs a principal polarisation, which is not declared");
  r.notes.push_back("the order of " + std::to_string(h.l) + " mod " + std::to_string(h.p) +
                    " is neither p - 1 nor an odd g: no structure theorem for End^0 applies");
  if (frob_rules) {
    EndScenario nf{ScenarioKind::number_field, {{ClauseId::number_field, cite::kAffine}}, {}, {}, {}};
    add_label_clauses(nf);
    r.scenarios.push_back(nf);
    r.notes.push_back("number_field scenario is conditional: the label rules apply when E is a number field");
  }
}

inline std::string certainty_of(const Hypotheses& h) {
  if (h.mode == BaseFieldMode::abstract) return "abstract (declared hypotheses)";
  if (h.galois_label && h.galois_label->certainty == Certainty::monte_carlo)
    return "conditional on Gal(f) = " + h.galois_label->name();
  return "certified";
}

inline void attach_s_bound(const Hypotheses& h, ConstraintReport& r) {
  if (!h.jacobian || h.l != 2 || !h.galois_label) return;
  if (h.galois_label->family == GaloisFamily::Other && !h.galois_label->affine() && !h.galois_label->two_transitive) return;
  try {
    auto b = dimension_bound(*h.galois_label);
    r.s_bound = b.s;
    if (b.end_K_trivial) r.notes.push_back(std::string("End_K(J_f) = Z: Gal(f) is 2-transitive (") + cite::kBoundOnDim + ")");
  } catch (const std::invalid_argument&) {
  }
}

}  // namespace detail

// Runs the rule pipeline on fully specified hypotheses.
inline ConstraintReport classify_hypotheses(const Hypotheses& h) {
  if (h.p < 5 || !is_prime_u64(static_cast<std::uint64_t>(h.p))) throw std::invalid_argument("unsupported degree");
  if (h.p != 2 * h.g + 1) throw std::invalid_argument("p must equal 2g + 1");
  ConstraintReport r;
  r.hypotheses = h;
  if (h.p == 5 && h.order_p_element && (h.l == 2 || h.index_of_l == 1)) {
    if (h.l == 2)
      detail::apply_degree_five(h, r);
    else
      detail::apply_general(h, r);
  } else {
    detail::apply_general(h, r);
  }
  detail::attach_s_bound(h, r);
  r.certainty = detail::certainty_of(h);
  return r;
}

inline Hypotheses exact_hypotheses(const IntPolynomial& f, const ClassifyOptions& opt = {}) {
  auto screen = prime_degree_screen(f);
  if (!screen.irreducible) throw std::invalid_argument("f reducible");
  Hypotheses h;
  h.p = screen.p;
  h.g = (h.p - 1) / 2;
  h.mode = BaseFieldMode::rational_exact;
  h.galois_label = opt.label ? *opt.label : galois_label(f, opt.sample_bound);
  h.l = 2;
  h.ord_l_mod_p = screen.ord2_mod_p;
  h.index_of_l = screen.index_of_2;
  h.poly = to_string(f);
  h.discriminant = discriminant(f);
  return h;
}

inline ConstraintReport classify(const IntPolynomial& f, const ClassifyOptions& opt = {}) {
  return classify_hypotheses(exact_hypotheses(f, opt));
}

// Abstract mode: {"p", "l", "galois_label", "principally_polarised", "jacobian", "order_p_element",
// "base_real_quadratic"}; only "p" is required.
inline Hypotheses abstract_hypotheses(const nlohmann::json& spec) {
  if (!spec.contains("p")) throw std::invalid_argument("abstract hypotheses need p");
  Hypotheses h;
  h.mode = BaseFieldMode::abstract;
  h.p = spec.at("p").get<int>();
  if (h.p < 5 || !is_prime_u64(static_cast<std::uint64_t>(h.p))) throw std::invalid_argument("unsupported degree");
  h.g = (h.p - 1) / 2;
  h.l = spec.value("l", std::uint64_t{2});
  if (!is_prime_u64(h.l) || h.l == static_cast<std::uint64_t>(h.p)) throw std::invalid_argument("l must be a prime different from p");
  h.principally_polarised = spec.value("principally_polarised", true);
  h.jacobian = spec.value("jacobian", true);
  h.order_p_element = spec.value("order_p_element", true);
  if (spec.contains("galois_label")) {
    auto L = std::optional<GaloisLabel>(label_from_name(spec.at("galois_label").get<std::string>(), h.p));
    L->certificate = {{"declared", true}};
    h.galois_label = L;
  }
  if (spec.contains("base_real_quadratic"))
    for (auto& d : spec.at("base_real_quadratic")) {
      Integer v = d.is_string() ? Integer(d.get<std::string>()) : Integer(d.get<long>());
      if (v <= 1 || !is_squarefree(v)) throw std::invalid_argument("base_real_quadratic entries must be squarefree d > 1");
      h.base_real_quadratic.push_back(v);
    }
  std::sort(h.base_real_quadratic.begin(), h.base_real_quadratic.end());
  h.ord_l_mod_p = multiplicative_order(h.l % static_cast<std::uint64_t>(h.p), static_cast<std::uint64_t>(h.p));
  h.index_of_l = static_cast<std::uint64_t>(h.p - 1) / h.ord_l_mod_p;
  return h;
}

inline ConstraintReport classify_abstract(const nlohmann::json& spec) {
  return classify_hypotheses(abstract_hypotheses(spec));
}

}  // namespace hyperend
