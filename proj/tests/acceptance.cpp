// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.

#include <hyperend/hyperend.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

using namespace hyperend;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

IntPolynomial P(const char* s) { return parse_polynomial(s); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::string kCorpusDir = std::string(HYPEREND_SOURCE_DIR) + "/corpus/";

Outcome galois_labels_of_example_table() {
  Outcome o;
  const std::vector<std::pair<const char*, const char*>> rows{{"x^5-19x^4+107x^3+95x^2+88x-16", "D5"},
                                                              {"x^5+10x^3+20x+5", "F5"},
                                                              {"x^5-2", "F5"},
                                                              {"-52x^5+104x^4-104x^3+52x^2-12x+1", "F5"}};
  for (auto& [poly, expected] : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    auto L = quintic_galois(P(poly));
    const double dt = seconds_since(t0);
    o.check(L.name() == expected, std::string(poly) + " gave " + L.name());
    o.check(L.certainty == Certainty::certified, std::string(poly) + " not certified");
    for (const char* key : {"discriminant", "discriminant_is_square", "stem_pattern", "norm_shift", "norm_squarefree_prime"})
      o.check(L.certificate.contains(key), std::string(poly) + " certificate lacks " + key);
    if (L.certificate["stem_pattern"] == nlohmann::ordered_json({1, 4}))
      o.check(L.certificate.contains("sextic_resolvent") && !L.certificate["resolvent_rational_root"].is_null(),
              std::string(poly) + " certificate lacks the resolvent root");
    o.check(dt < 10.0, std::string(poly) + " took " + std::to_string(dt) + " s");
  }
  return o;
}

Outcome sqrt_discriminant_table() {
  Outcome o;
  const std::vector<std::pair<const char*, long>> rows{{"x^5-14x^3-84x^2+81x-28", 2},
                                                       {"x^5-5x^3+5x^2-4", 5},
                                                       {"x^5-4x^3-46x^2-44x-194", 13},
                                                       {"x^5-2x^4+67x^3-250x^2+488x-235", 17},
                                                       {"x^5-x^4+4x^3+106x^2-97x+669", 29},
                                                       {"x^5-x^4+29x^3-1025x^2-3154x-17714", 41},
                                                       {"x^5-x^4+54x^3-167x^2+1018x-69", 53}};
  for (auto& [poly, d] : rows) {
    const IntPolynomial f = P(poly);
    auto L = quintic_galois(f);
    const Integer sq = squarefree_part(discriminant(f));
    o.check(L.name() == "F5", std::string(poly) + " gave " + L.name());
    o.check(sq == d, std::string(poly) + " gives Q(sqrt(" + sq.get_str() + ")), listed " + std::to_string(d));
  }
  return o;
}

Outcome quartic_r_field() {
  Outcome o;
  const IntPolynomial f = P("x^4+x^3+2x^2-4x+3");
  auto q = quartic_invariants(f);
  o.check(q.is_cyclic && q.galois_type == QuarticGalois::C4, "not cyclic");
  o.check(q.is_cm, "not CM");
  o.check(q.real_quadratic_subfield && *q.real_quadratic_subfield == 13, "real subfield is not Q(sqrt 13)");
  o.check(to_string(splitting_shape(f, 2)) == "[(1,4)] certified", "shape at 2 is " + to_string(splitting_shape(f, 2)));
  auto ram = ramified_primes(f);
  o.check(ram.ramified == std::vector<Integer>{13} && ram.undetermined.empty(), "ramified primes differ from {13}");
  return o;
}

const std::vector<const char*> kCertifiedQuintics{"x^5-19x^4+107x^3+95x^2+88x-16", "x^5+10x^3+20x+5", "x^5-2",
                                                  "-52x^5+104x^4-104x^3+52x^2-12x+1", "x^5+x^4-4x^3-3x^2+3x+1",
                                                  "x^5-14x^3-84x^2+81x-28"};

const EndScenario* scenario(const ConstraintReport& r, ScenarioKind k) {
  for (auto& s : r.scenarios)
    if (s.kind == k) return &s;
  return nullptr;
}

std::set<ClauseId> clause_ids(const EndScenario& s) {
  std::set<ClauseId> out;
  for (auto& c : s.constraints) out.insert(c.id);
  return out;
}

Outcome degree_five_report_shape() {
  Outcome o;
  const std::set<ScenarioKind> cases{ScenarioKind::trivial_Z, ScenarioKind::real_quadratic_order, ScenarioKind::cm_quartic};
  for (const char* poly : kCertifiedQuintics) {
    auto r = classify(P(poly));
    std::set<ScenarioKind> covered;
    for (auto& s : r.scenarios) covered.insert(s.kind);
    for (auto& e : r.excluded)
      if (e.kind != ScenarioKind::cm_power) covered.insert(e.kind);
    o.check(covered == cases, std::string(poly) + ": scenarios and exclusions differ from the three cases");
    auto rq = scenario(r, ScenarioKind::real_quadratic_order);
    o.check(rq && clause_ids(*rq) == std::set<ClauseId>{ClauseId::quadratic_real_squarefree, ClauseId::quadratic_D_5_mod_8,
                                                         ClauseId::quadratic_r_odd},
            std::string(poly) + ": real quadratic clauses incomplete");
    if (auto cm = scenario(r, ScenarioKind::cm_quartic)) {
      auto ids = clause_ids(*cm);
      o.check(ids.count(ClauseId::quartic_cm) && ids.count(ClauseId::l_maximal) && ids.count(ClauseId::l_inert),
              std::string(poly) + ": CM clauses incomplete");
    }
  }
  auto quadratic = [](long D) {
    EndCandidate c;
    c.kind = EndCandidate::Kind::quadratic_order;
    c.D = D;
    c.conductor = 1;
    return c;
  };
  auto field = [](const char* defpoly, OrderSpec order) {
    EndCandidate c;
    c.kind = EndCandidate::Kind::number_field;
    c.defpoly = P(defpoly);
    c.order = order;
    return c;
  };
  const std::vector<std::pair<const char*, EndCandidate>> rows{
      {"x^5-19x^4+107x^3+95x^2+88x-16", quadratic(13)},
      {"x^5+10x^3+20x+5", quadratic(5)},
      {"x^5-2", field("x^4+x^3+x^2+x+1", OrderSpec::equation)},
      {"-52x^5+104x^4-104x^3+52x^2-12x+1", field("x^4+x^3+2x^2-4x+3", OrderSpec::maximal)}};
  for (auto& [poly, ring] : rows)
    o.check(validate_end_candidate(ring, classify(P(poly))).overall == Verdict::pass, std::string(poly) + ": ring does not validate");
  return o;
}

Outcome cm_power_excluded_for_quintics() {
  Outcome o;
  o.check(cm_subfield_options(5, 2).empty(), "cm_subfield_options(5, 2) is not empty");
  std::vector<ConstraintReport> reports;
  for (const char* poly : kCertifiedQuintics) reports.push_back(classify(P(poly)));
  for (const char* label : {"C5", "D5", "F5", "A5", "S5"}) reports.push_back(classify_abstract({{"p", 5}, {"galois_label", label}}));
  for (auto& r : reports) {
    o.check(!r.has_scenario(ScenarioKind::cm_power), "cm_power scenario present");
    o.check(r.has_exclusion(ScenarioKind::cm_power), "cm_power exclusion missing");
  }
  return o;
}

Outcome cyclic_quintic_excludes_cm() {
  Outcome o;
  const IntPolynomial f = P("x^5+x^4-4x^3-3x^2+3x+1");
  auto r = classify(f);
  o.check(r.hypotheses.galois_label && r.hypotheses.galois_label->name() == "C5" &&
              r.hypotheses.galois_label->certainty == Certainty::certified,
          "label is not a certified C5");
  bool cited = false;
  for (auto& e : r.excluded)
    if (e.kind == ScenarioKind::cm_quartic) cited = e.citation == cite::kCyclicFiveCm;
  o.check(cited, "quartic CM scenario not excluded with the C5 citation");
  o.check(!r.has_scenario(ScenarioKind::cm_quartic), "quartic CM scenario still present");
  bool bound = false;
  for (auto& s : r.scenarios)
    for (auto& c : s.L_candidates) bound = bound || (c.relation == "degree_at_most" && c.degree == 2);
  o.check(bound, "no [L:Q] <= 2 statement");
  return o;
}

// Minimal polynomial of zeta + 1/zeta: Phi_p(x) / x^g = 1 + sum_k (x^k + x^-k), with
// x^k + x^-k = T_k(y), T_0 = 2, T_1 = y, T_{k+1} = y T_k - T_{k-1}.
IntPolynomial real_cyclotomic_reference(int p) {
  const int g = (p - 1) / 2;
  IntPolynomial y = IntPolynomial::x();
  IntPolynomial prev{Integer(2)}, cur = y, total{Integer(1)};
  for (int k = 1; k <= g; ++k) {
    total = total + cur;
    IntPolynomial next = y * cur - prev;
    prev = cur;
    cur = next;
  }
  return total;
}

Outcome frobenius_table() {
  Outcome o;
  const std::vector<std::pair<int, const char*>> rows{
      {7, "x^7-7x^5+14x^3-7x-13"},
      {11, "x^11-22x^9+176x^7-616x^5+880x^3-352x-88"},
      {13, "x^13+13x^11+65x^9+156x^7+182x^5+91x^3+13x-2"},
      {17, "x^17+17x^15+119x^13+442x^11+935x^9+1122x^7+714x^5+204x^3+17x-1"},
      {19, "x^19+19x^17+152x^15+665x^13+1729x^11+2717x^9+2508x^7+1254x^5+285x^3+19x-1"}};
  for (auto& [p, poly] : rows) {
    auto ev = frobenius_evidence(P(poly), 10000);
    o.check(ev.nonconforming == 0 && ev.full_stabilizer_type_seen && ev.consistent_with_Fp,
            "F" + std::to_string(p) + " sampling not consistent");
    const auto up = static_cast<std::uint64_t>(p);
    const IntPolynomial mine = cyclotomic_subfield(up, (up - 1) / 2).field.defpoly;
    const IntPolynomial ref = real_cyclotomic_reference(p);
    int matched = 0;
    for (std::uint64_t q : primes_up_to(200)) {
      if (matched == 3) break;
      if (q == up || mpz_divisible_ui_p(discriminant(mine).get_mpz_t(), q) || mpz_divisible_ui_p(discriminant(ref).get_mpz_t(), q))
        continue;
      const bool same = factor_degrees_squarefree(ModPolynomial(q, mine)) == factor_degrees_squarefree(ModPolynomial(q, ref));
      o.check(same, "Q(zeta_" + std::to_string(p) + ")+ shapes differ at " + std::to_string(q));
      ++matched;
    }
    o.check(matched == 3, "fewer than 3 unramified primes compared for p = " + std::to_string(p));
    if (p <= 13) {
      auto sh = splitting_shape(mine, 2);
      o.check(sh.totally_inert(mine.degree()), "2 not inert in Q(zeta_" + std::to_string(p) + ")+: " + to_string(sh));
    }
  }
  return o;
}

std::uint64_t power_of(std::uint64_t l, int m) {
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) r *= l;
  return r;
}

Outcome faithful_module_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [l, p] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 5}, {2, 7}, {2, 11}, {2, 13}, {3, 5}, {3, 7}}) {
    const int s = static_cast<int>(multiplicative_order(l % p, p));
    auto cf = cyclotomic_factors_mod(p, l);
    std::vector<ModMatrix> blocks;
    for (auto& [h, e] : cf.factors.factors)
      if (h.degree() > 1) blocks.push_back(ModMatrix::companion(h));
    std::vector<ModMatrix> modules{blocks[0], block_diagonal(blocks[0], ModMatrix::identity(l, 1))};
    if (blocks.size() > 1) modules.push_back(block_diagonal(blocks[0], blocks[1]));
    modules.push_back(block_diagonal(blocks[0], blocks[0]));
    const std::string tag = "(" + std::to_string(l) + "," + std::to_string(p) + ")";
    for (auto& A : modules) {
      if (power_of(l, A.dim()) > kSubspaceEnumerationCap) continue;
      auto M = make_cp_module(p, A);
      for (int d : module_constituents(M)) o.check(d == 1 || d == s, tag + ": constituent of dimension " + std::to_string(d));
      const bool irreducible = brute_force_submodule_dims(M).irreducible();
      o.check(irreducible == (A.dim() == s), tag + ": irreducibility wrong at dimension " + std::to_string(A.dim()));
    }
  }
  const double dt = seconds_since(t0);
  o.check(dt < 60.0, "suite took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(static_cast<int>(dt + 0.5)) + " s";
  return o;
}

Outcome symplectic_suite() {
  Outcome o;
  int pairs = 0;
  for (int g = 1; 2 * g <= 12; g += 2) {
    const auto p = static_cast<std::uint64_t>(2 * g + 1);
    if (g < 3 || !is_prime_u64(p)) continue;
    for (std::uint64_t l : primes_up_to(60)) {
      if (l == p || multiplicative_order(l % p, p) != static_cast<std::uint64_t>(g)) continue;
      auto el = symplectic_order_p_element(g, l);
      const ModMatrix& M = el.module.action;
      const ModMatrix& J = el.space.gram;
      const std::string tag = "(g=" + std::to_string(g) + ",l=" + std::to_string(l) + ")";
      o.check(M.transpose() * J * M == J, tag + ": form not preserved");
      o.check(M != ModMatrix::identity(l, 2 * g) && M.pow(p) == ModMatrix::identity(l, 2 * g), tag + ": order is not p");
      o.check(module_constituents(el.module) == std::vector<int>{g, g}, tag + ": constituents are not {g, g}");
      o.check(el.u_charpoly != el.w_charpoly, tag + ": isomorphic halves");
      ++pairs;
    }
  }
  o.check(pairs > 0, "no valid pairs");
  if (o.pass) o.detail = std::to_string(pairs) + " pairs";
  return o;
}

// Orbits of the stabiliser of 0 on {1, ..., n-1}, by direct element enumeration.
int direct_orbits(const PermutationGroup& G) {
  const int n = G.degree();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
  for (auto& g : G.elements())
    if (g(0) == 0)
      for (int i = 0; i < n; ++i) parent[find(i)] = find(g(i));
  std::set<int> roots;
  for (int i = 1; i < n; ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

Outcome orbit_count_suite() {
  Outcome o;
  const std::vector<std::pair<const char*, PermutationGroup>> groups{{"C5", cyclic_group(5)}, {"D5", dihedral_group(5)},
                                                                     {"F5", affine_group(5)}, {"S5", symmetric_group(5)},
                                                                     {"F7", affine_group(7)}, {"D7", dihedral_group(7)}};
  for (auto& [name, G] : groups) {
    const int s = stabilizer_orbit_count(G);
    o.check(centralizer_algebra_dim(permutation_module(G, 2)) == s + 1, std::string(name) + ": full module dimension");
    o.check(centralizer_algebra_dim(deleted_permutation_module(G, 2)) <= s, std::string(name) + ": deleted module dimension");
  }
  for (int q : {5, 7})
    for (auto d : divisors(static_cast<std::uint64_t>(q - 1))) {
      auto U = affine_subgroup(q, static_cast<int>(d));
      const int direct = direct_orbits(U);
      o.check(burnside_orbits(U, 0).orbits == direct, "AGL(1," + std::to_string(q) + ") index " + std::to_string(d));
      o.check(direct == static_cast<int>(d), "AGL(1," + std::to_string(q) + ") index " + std::to_string(d) + " orbit count");
    }
  return o;
}

Outcome corpus_determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "hyperend_acceptance";
  std::filesystem::create_directories(dir);
  std::vector<std::string> bytes;
  for (const char* name : {"first.json", "second.json"}) {
    const std::string out = (dir / name).string();
    const std::string file = kCorpusDir + "published_examples.json";
    std::vector<const char*> argv{"hyperend", "corpus", "run", file.c_str(), "--report", out.c_str()};
    std::ostringstream sink;
    cli_dispatch(static_cast<int>(argv.size()), argv.data(), sink, sink);
    std::ifstream in(out, std::ios::binary);
    bytes.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  o.check(!bytes[0].empty(), "empty report");
  o.check(bytes[0] == bytes[1], "reports differ");
  if (o.pass) o.detail = std::to_string(bytes[0].size()) + " bytes";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Galois labels of the genus 2 example table", galois_labels_of_example_table},
      {"F5 quintics and Q(sqrt(disc)) fields of definition", sqrt_discriminant_table},
      {"quartic R-field invariants", quartic_r_field},
      {"degree 5 report shape and example rings", degree_five_report_shape},
      {"CM-power case excluded at p = 5", cm_power_excluded_for_quintics},
      {"C5 over Q excludes quartic CM", cyclic_quintic_excludes_cm},
      {"F7 to F19 table", frobenius_table},
      {"faithful module suite", faithful_module_suite},
      {"symplectic suite", symplectic_suite},
      {"orbit-count suite", orbit_count_suite},
      {"corpus run determinism", corpus_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
  }
  return failed ? 1 : 0;
}
