#include <hyperend/classify/classify.hpp>
#include <hyperend/numfield/validate.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace hyperend;

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

std::set<ScenarioKind> kinds(const ConstraintReport& r) {
  std::set<ScenarioKind> out;
  for (auto& s : r.scenarios) out.insert(s.kind);
  return out;
}

const EndScenario* find(const ConstraintReport& r, ScenarioKind k) {
  for (auto& s : r.scenarios)
    if (s.kind == k) return &s;
  return nullptr;
}

std::set<ClauseId> clauses(const EndScenario& s) {
  std::set<ClauseId> out;
  for (auto& c : s.constraints) out.insert(c.id);
  return out;
}

bool has_clause(const ConstraintReport& r, ClauseId id) {
  for (auto& s : r.scenarios)
    for (auto& c : s.constraints)
      if (c.id == id) return true;
  return false;
}

// Brute-force order of 2 in (Z/pZ)^*.
int order_of_two(int p) {
  int k = 1, x = 2 % p;
  while (x != 1) {
    x = 2 * x % p;
    ++k;
  }
  return k;
}

// A subfield of Q(zeta_p) of degree m is totally real iff it lies in the real subfield of degree g.
std::set<int> admissible_d(int g) {
  std::set<int> out;
  for (int d = 2; d <= g; ++d)
    if (g % d == 0 && g % (2 * g / d) != 0) out.insert(d);
  return out;
}

EndCandidate quadratic(long D, long r) {
  EndCandidate c;
  c.kind = EndCandidate::Kind::quadratic_order;
  c.D = D;
  c.conductor = r;
  return c;
}

EndCandidate field(const char* defpoly, OrderSpec o) {
  EndCandidate c;
  c.kind = EndCandidate::Kind::number_field;
  c.defpoly = P(defpoly);
  c.order = o;
  return c;
}

const std::vector<const char*> kCertifiedQuintics{"x^5-2", "x^5+10x^3+20x+5", "x^5-19x^4+107x^3+95x^2+88x-16",
                                                  "x^5+x^4-4x^3-3x^2+3x+1", "x^5-5x+12"};

}  // namespace

TEST(Classify, QuinticExample) {
  auto r = classify(P("x^5-2"));
  EXPECT_EQ(kinds(r), (std::set<ScenarioKind>{ScenarioKind::trivial_Z, ScenarioKind::real_quadratic_order, ScenarioKind::cm_quartic}));
  ASSERT_TRUE(r.has_exclusion(ScenarioKind::cm_power));
  EXPECT_EQ(r.excluded.back().citation, std::string(cite::kFiveNotDividing));
  ASSERT_TRUE(r.s_bound);
  EXPECT_EQ(*r.s_bound, 1);
  EXPECT_EQ(r.certainty, "certified");
  EXPECT_EQ(clauses(*find(r, ScenarioKind::real_quadratic_order)),
            (std::set<ClauseId>{ClauseId::quadratic_real_squarefree, ClauseId::quadratic_D_5_mod_8, ClauseId::quadratic_r_odd}));
  EXPECT_EQ(clauses(*find(r, ScenarioKind::cm_quartic)),
            (std::set<ClauseId>{ClauseId::quartic_cm, ClauseId::l_maximal, ClauseId::l_inert, ClauseId::quartic_cyclic}));
  auto& cm_L = find(r, ScenarioKind::cm_quartic)->L_candidates;
  ASSERT_EQ(cm_L.size(), 1u);
  EXPECT_EQ(cm_L[0].degree, 4);
  EXPECT_EQ(cm_L[0].galois_group, "Z/4Z");
}

TEST(Classify, SqrtDiscriminantField) {
  auto r = classify(P("x^5-5x^3+5x-4"));
  auto& L = find(r, ScenarioKind::real_quadratic_order)->L_candidates;
  ASSERT_EQ(L.size(), 1u);
  EXPECT_EQ(L[0].defpoly, "x^2-5");
}

TEST(Classify, DegreeSevenIndexTwo) {
  auto r = classify(P("x^7-7x^5+14x^3-7x-13"));
  EXPECT_EQ(r.certainty, "conditional on Gal(f) = F7");
  int inert = 0, two = 0;
  for (auto& s : r.scenarios) {
    if (s.kind != ScenarioKind::number_field) continue;
    inert += clauses(s).count(ClauseId::l_inert);
    two += clauses(s).count(ClauseId::l_two_primes_equal_inertia);
  }
  EXPECT_EQ(inert, 1);
  EXPECT_EQ(two, 1);
  auto cm = find(r, ScenarioKind::cm_power);
  ASSERT_NE(cm, nullptr);
  ASSERT_EQ(cm->cm_subfields.size(), 1u);
  EXPECT_EQ(cm->cm_subfields[0].d, 3);
  EXPECT_EQ(discriminant(cm->cm_subfields[0].defpoly), -7);
}

TEST(Classify, DegreeElevenPrimitiveRoot) {
  auto r = classify_abstract({{"p", 11}});
  auto inert = find(r, ScenarioKind::number_field);
  ASSERT_NE(inert, nullptr);
  EXPECT_TRUE(clauses(*inert).count(ClauseId::l_inert));
  EXPECT_TRUE(clauses(*inert).count(ClauseId::l_maximal));
  EXPECT_FALSE(has_clause(r, ClauseId::l_two_primes_equal_inertia));
  EXPECT_TRUE(r.has_scenario(ScenarioKind::cm_power));
}

TEST(Classify, Errors) {
  EXPECT_THROW(classify(P("x^5-x^4+x-1")), std::invalid_argument);
  EXPECT_THROW(classify_abstract({{"p", 9}}), std::invalid_argument);
  EXPECT_THROW(classify_abstract({{"l", 2}}), std::invalid_argument);
  EXPECT_THROW(classify_abstract({{"p", 7}, {"l", 7}}), std::invalid_argument);
  EXPECT_THROW(classify_abstract({{"p", 5}, {"galois_label", "Q8"}}), std::invalid_argument);
}

TEST(CmSubfieldOptions, Examples) {
  EXPECT_TRUE(cm_subfield_options(5, 2).empty());
  EXPECT_EQ(cm_subfield_candidates(5, 2).size(), 1u);
  EXPECT_TRUE(cm_subfield_candidates(5, 2)[0].totally_real);
  auto seven = cm_subfield_options(7, 3);
  ASSERT_EQ(seven.size(), 1u);
  EXPECT_EQ(seven[0].degree, 2);
  EXPECT_EQ(discriminant(seven[0].defpoly), -7);
  auto eleven = cm_subfield_options(11, 5);
  ASSERT_EQ(eleven.size(), 1u);
  EXPECT_EQ(discriminant(eleven[0].defpoly), -11);
  EXPECT_THROW(cm_subfield_options(9, 4), std::invalid_argument);
}

TEST(CmSubfieldOptions, MatchesRealSubfieldDegreeRule) {
  for (int p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const int g = (p - 1) / 2;
    std::set<int> got;
    for (auto& o : cm_subfield_options(p, g)) got.insert(o.d);
    EXPECT_EQ(got, admissible_d(g)) << p;
  }
}

TEST(DimensionBound, Examples) {
  EXPECT_EQ(dimension_bound(label_from_name("F5", 5)).s, 1);
  EXPECT_TRUE(dimension_bound(label_from_name("F5", 5)).end_K_trivial);
  EXPECT_EQ(dimension_bound(label_from_name("D5", 5)).s, 2);
  EXPECT_EQ(dimension_bound(label_from_name("C5", 5)).s, 4);
  EXPECT_EQ(dimension_bound(symmetric_group(5)).s, 1);
  EXPECT_EQ(dimension_bound(affine_subgroup(13, 4)).s, 4);
}

TEST(Classify, QuinticReportsAreExhaustive) {
  std::vector<ConstraintReport> reports;
  for (const char* s : kCertifiedQuintics) reports.push_back(classify(P(s)));
  for (const char* label : {"C5", "D5", "F5", "A5", "S5"}) reports.push_back(classify_abstract({{"p", 5}, {"galois_label", label}}));
  reports.push_back(classify_abstract({{"p", 5}}));
  reports.push_back(classify_abstract({{"p", 5}, {"galois_label", "C5"}, {"base_real_quadratic", {13}}}));
  for (auto& r : reports) {
    std::set<ScenarioKind> covered = kinds(r);
    for (auto& e : r.excluded) {
      EXPECT_FALSE(e.citation.empty());
      EXPECT_TRUE(covered.insert(e.kind).second) << "kind both present and excluded";
    }
    EXPECT_EQ(covered, (std::set<ScenarioKind>{ScenarioKind::trivial_Z, ScenarioKind::real_quadratic_order,
                                               ScenarioKind::cm_quartic, ScenarioKind::cm_power}));
    EXPECT_FALSE(r.has_scenario(ScenarioKind::cm_power));
    EXPECT_EQ(r.scenarios.size() + r.excluded.size(), 4u);
    if (auto rq = find(r, ScenarioKind::real_quadratic_order)) EXPECT_EQ(rq->constraints.size(), 3u);
    if (auto cm = find(r, ScenarioKind::cm_quartic)) {
      auto c = clauses(*cm);
      EXPECT_TRUE(c.count(ClauseId::quartic_cm) && c.count(ClauseId::l_maximal) && c.count(ClauseId::l_inert));
    }
    for (auto& s : r.scenarios)
      for (auto& c : s.constraints) EXPECT_FALSE(c.citation.empty());
  }
}

TEST(Classify, CyclicQuinticOverQExcludesCm) {
  auto r = classify(P("x^5+x^4-4x^3-3x^2+3x+1"));
  ASSERT_TRUE(r.has_exclusion(ScenarioKind::cm_quartic));
  for (auto& e : r.excluded)
    if (e.kind == ScenarioKind::cm_quartic) EXPECT_EQ(e.citation, std::string(cite::kCyclicFiveCm));
  auto rq = find(r, ScenarioKind::real_quadratic_order);
  ASSERT_EQ(rq->L_candidates.size(), 1u);
  EXPECT_EQ(rq->L_candidates[0].relation, "degree_at_most");
  EXPECT_EQ(rq->L_candidates[0].degree, 2);
  auto with_base = classify_abstract({{"p", 5}, {"galois_label", "C5"}, {"base_real_quadratic", {13}}});
  EXPECT_TRUE(with_base.has_scenario(ScenarioKind::cm_quartic));
  EXPECT_TRUE(clauses(*find(with_base, ScenarioKind::cm_quartic)).count(ClauseId::base_real_quadratic_5_mod_8));
  // 17 is 1 mod 8: still excluded.
  EXPECT_TRUE(classify_abstract({{"p", 5}, {"galois_label", "C5"}, {"base_real_quadratic", {17}}}).has_exclusion(ScenarioKind::cm_quartic));
}

TEST(Classify, TwoPrimesCaseSuppressedForPrimitiveRoot) {
  for (int p : {5, 7, 11, 13, 17, 19, 23}) {
    const int ord = order_of_two(p);
    const int g = (p - 1) / 2;
    auto r = classify_abstract({{"p", p}, {"galois_label", "F" + std::to_string(p)}});
    if (ord == p - 1) EXPECT_FALSE(has_clause(r, ClauseId::l_two_primes_equal_inertia)) << p;
    if (ord == g && g % 2 == 1) EXPECT_TRUE(has_clause(r, ClauseId::l_two_primes_equal_inertia)) << p;
  }
}

TEST(Classify, CmPowerPresentIffAdmissibleSubfield) {
  for (int p : {5, 7, 11, 13, 19, 23}) {
    auto r = classify_abstract({{"p", p}});
    const int g = (p - 1) / 2;
    EXPECT_EQ(r.has_scenario(ScenarioKind::cm_power), !admissible_d(g).empty()) << p;
    EXPECT_NE(r.has_scenario(ScenarioKind::cm_power), r.has_exclusion(ScenarioKind::cm_power)) << p;
  }
}

TEST(Classify, FrobeniusFieldOfDefinitionIsCyclicOfDegreeS) {
  for (int p : {7, 11, 13, 19, 23}) {
    auto r = classify_abstract({{"p", p}, {"galois_label", "F" + std::to_string(p)}});
    for (auto& s : r.scenarios) {
      if (s.kind != ScenarioKind::number_field) continue;
      EXPECT_TRUE(clauses(s).count(ClauseId::galois_cyclic));
      for (auto& c : s.L_candidates) {
        const int sdeg = std::stoi(c.condition.substr(c.condition.find('=') + 2));
        ASSERT_TRUE(c.degree);
        EXPECT_EQ(*c.degree, sdeg);
        EXPECT_EQ((p - 1) % sdeg, 0);
        EXPECT_EQ(c.galois_group, sdeg == 1 ? "1" : "Z/" + std::to_string(sdeg) + "Z");
      }
    }
  }
}

TEST(Classify, MonteCarloLabelChangesOnlyCertainty) {
  auto exact = classify(P("x^7-7x^5+14x^3-7x-13"));
  auto declared = classify_abstract({{"p", 7}, {"galois_label", "F7"}});
  ASSERT_EQ(exact.scenarios.size(), declared.scenarios.size());
  for (std::size_t i = 0; i < exact.scenarios.size(); ++i) {
    EXPECT_EQ(exact.scenarios[i].kind, declared.scenarios[i].kind);
    EXPECT_EQ(clauses(exact.scenarios[i]), clauses(declared.scenarios[i]));
  }
  EXPECT_NE(exact.certainty, declared.certainty);
}

TEST(Classify, AbstractLWithoutTwoTorsionBridge) {
  auto r = classify_abstract({{"p", 7}, {"l", 3}});
  ASSERT_NE(find(r, ScenarioKind::number_field), nullptr);
  EXPECT_EQ(find(r, ScenarioKind::number_field)->constraints[0].citation, std::string(cite::kGeneralL));
  EXPECT_FALSE(r.s_bound.has_value());
}

TEST(Report, JsonRoundTrip) {
  for (const char* s : {"x^5-2", "x^5+x^4-4x^3-3x^2+3x+1", "x^7-7x^5+14x^3-7x-13"}) {
    auto r = classify(P(s));
    auto j = to_json(r);
    EXPECT_EQ(to_json(report_from_json(nlohmann::json::parse(j.dump()))).dump(), j.dump()) << s;
  }
  auto a = classify_abstract({{"p", 13}, {"galois_label", "C13:C3"}});
  EXPECT_EQ(to_json(report_from_json(nlohmann::json::parse(to_json(a).dump()))).dump(), to_json(a).dump());
}

TEST(Report, SchemaKeyOrder) {
  auto j = to_json(classify(P("x^5-2")));
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"hypotheses", "scenarios", "excluded", "s_bound", "certainty", "notes"}));
  auto c = j["scenarios"][0]["constraints"][0];
  std::vector<std::string> ckeys;
  for (auto& [k, v] : c.items()) ckeys.push_back(k);
  EXPECT_EQ(ckeys, (std::vector<std::string>{"clause", "citation", "checker"}));
}

TEST(Validate, ExampleRowsPassAgainstTheirReports) {
  struct Row {
    const char* poly;
    EndCandidate ring;
  };
  const std::vector<Row> rows{
      {"x^5-19x^4+107x^3+95x^2+88x-16", quadratic(13, 1)},
      {"x^5+10x^3+20x+5", quadratic(5, 1)},
      {"x^5-2", field("x^4+x^3+x^2+x+1", OrderSpec::equation)},
      {"-52x^5+104x^4-104x^3+52x^2-12x+1", field("x^4+x^3+2x^2-4x+3", OrderSpec::maximal)},
      {"x^7-7x^5+14x^3-7x-13", field("x^3+x^2-2x-1", OrderSpec::unspecified)},
  };
  for (auto& row : rows) {
    auto v = validate_end_candidate(row.ring, classify(P(row.poly)));
    EXPECT_EQ(v.overall, Verdict::pass) << row.poly << "\n" << to_json(v).dump(1);
  }
}
