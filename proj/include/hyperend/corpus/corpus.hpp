#pragma once

// Regression corpus: each entry names a polynomial and the Galois group, endomorphism ring and
// field of definition reported for it; run_corpus checks them against generated reports.

#include <hyperend/classify/classify.hpp>
#include <hyperend/galois/galois.hpp>
#include <hyperend/numfield/numfield.hpp>
#include <hyperend/numfield/validate.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperend {

struct CorpusEntry {
  std::string id;
  std::string poly;
  std::optional<std::string> expected_galois;
  std::optional<nlohmann::json> expected_end_ring;  // candidate spec, see candidate_from_json
  std::optional<std::string> expected_L;            // defining polynomial of L over Q
  std::string source;
};

enum class EntryStatus { pass, fail, undetermined };

inline const char* to_string(EntryStatus s) {
  switch (s) {
    case EntryStatus::pass: return "pass";
    case EntryStatus::fail: return "fail";
    case EntryStatus::undetermined: return "undetermined";
  }
  return "?";
}

struct EntryResult {
  std::string id;
  EntryStatus status = EntryStatus::pass;
  std::vector<std::string> diffs;
  nlohmann::ordered_json detail = nlohmann::ordered_json::object();
};

struct CorpusSummary {
  std::size_t pass = 0, fail = 0, undetermined = 0;
  std::vector<EntryResult> entries;
  int exit_code() const { return fail ? 1 : 0; }
};

struct CorpusOptions {
  std::uint64_t sample_bound = kDefaultSampleBound;
  bool include_reports = true;
};

inline CorpusEntry corpus_entry_from_json(const nlohmann::json& j) {
  CorpusEntry e;
  e.id = j.at("id").get<std::string>();
  e.poly = j.at("poly").get<std::string>();
  if (j.contains("expected_galois") && !j.at("expected_galois").is_null()) e.expected_galois = j.at("expected_galois").get<std::string>();
  if (j.contains("expected_end_ring") && !j.at("expected_end_ring").is_null()) e.expected_end_ring = j.at("expected_end_ring");
  if (j.contains("expected_L") && !j.at("expected_L").is_null()) e.expected_L = j.at("expected_L").get<std::string>();
  e.source = j.value("source", std::string());
  return e;
}

namespace detail {

inline void downgrade(EntryResult& r, EntryStatus s) {
  if (s == EntryStatus::fail || (s == EntryStatus::undetermined && r.status == EntryStatus::pass)) r.status = s;
}

// Same quadratic field: equal squarefree parts of the discriminants.
inline bool same_quadratic_field(const IntPolynomial& a, const IntPolynomial& b) {
  return squarefree_part(discriminant(a)) == squarefree_part(discriminant(b));
}

inline void check_L(const CorpusEntry& e, const IntPolynomial& f, const GaloisLabel& label, const ConstraintReport& report,
                    const std::optional<std::size_t>& scenario, std::optional<int> end_degree, const CorpusOptions& opt,
                    EntryResult& out) {
  const IntPolynomial Lpoly = parse_polynomial(*e.expected_L);
  if (Lpoly.degree() < 1 || Lpoly.lead() != 1 || !is_irreducible(Lpoly)) {
    out.diffs.push_back("expected_L: defining polynomial must be monic irreducible");
    downgrade(out, EntryStatus::fail);
    return;
  }
  const int s = Lpoly.degree();
  nlohmann::ordered_json lj;
  lj["expected"] = to_string(Lpoly);
  // Candidate statements of the form "L equals the unique degree-s subfield", filtered by the
  // scenario the end ring matched and by the condition [E:Q] = s when the end ring is known.
  const LCandidate* match = nullptr;
  for (std::size_t i = 0; i < report.scenarios.size() && !match; ++i) {
    if (scenario && *scenario != i) continue;
    for (auto& c : report.scenarios[i].L_candidates) {
      if (c.relation != "equals" || !c.degree || *c.degree != s) continue;
      if (end_degree && !c.condition.empty() && c.condition != "[E:Q] = " + std::to_string(*end_degree)) continue;
      match = &c;
      break;
    }
  }
  if (!match) {
    out.diffs.push_back("expected_L: no L candidate of degree " + std::to_string(s) + " in the report");
    downgrade(out, EntryStatus::fail);
    out.detail["L_check"] = lj;
    return;
  }
  lj["candidate"] = to_json(*match);
  if (match->defpoly) {
    const IntPolynomial cand = parse_polynomial(*match->defpoly);
    const bool same = s == 1 || (s == 2 && same_quadratic_field(cand, Lpoly));
    lj["method"] = "exact";
    lj["verdict"] = same ? "pass" : "fail";
    if (!same) {
      out.diffs.push_back("expected_L: expected " + to_string(Lpoly) + ", report gives " + *match->defpoly);
      downgrade(out, EntryStatus::fail);
    }
  } else if (label.family == GaloisFamily::Fp) {
    auto cyc = cyclic_galois_certificate(Lpoly);
    auto ev = affine_quotient_evidence(f, Lpoly, opt.sample_bound);
    lj["method"] = "monte_carlo";
    lj["cyclic"] = cyc.cyclic;
    lj["frobenius_primes_used"] = ev.primes_used;
    lj["frobenius_mismatches"] = ev.mismatches;
    const bool ok = cyc.galois && cyc.cyclic && ev.compatible();
    lj["verdict"] = ok ? "pass" : "fail";
    if (!ok) {
      out.diffs.push_back("expected_L: " + to_string(Lpoly) + " is not the cyclic degree " + std::to_string(s) +
                          " subfield of K(f) (first mismatch at q = " + std::to_string(ev.first_mismatch) + ")");
      downgrade(out, EntryStatus::fail);
    }
  } else {
    lj["method"] = "none";
    lj["verdict"] = "undetermined";
    out.diffs.push_back("expected_L: no method to identify the subfield for label " + label.name());
    downgrade(out, EntryStatus::undetermined);
  }
  out.detail["L_check"] = lj;
}

}  // namespace detail

inline EntryResult run_entry(const CorpusEntry& e, const CorpusOptions& opt = {}) {
  EntryResult out;
  out.id = e.id;
  out.detail["id"] = e.id;
  out.detail["poly"] = e.poly;
  out.detail["source"] = e.source;
  try {
    const IntPolynomial f = parse_polynomial(e.poly);
    auto screen = prime_degree_screen(f);
    if (!screen.irreducible) throw std::invalid_argument("f reducible");
    const GaloisLabel label = galois_label(f, opt.sample_bound);
    out.detail["galois"] = to_json(label);
    if (e.expected_galois && *e.expected_galois != label.name()) {
      out.diffs.push_back("galois: expected " + *e.expected_galois + ", got " + label.name() + " (" +
                          to_string(label.certainty) + ")");
      detail::downgrade(out, EntryStatus::fail);
    }
    ClassifyOptions copt;
    copt.sample_bound = opt.sample_bound;
    copt.label = label;
    const ConstraintReport report = classify(f, copt);
    if (opt.include_reports) out.detail["report"] = to_json(report);
    std::optional<std::size_t> scenario;
    std::optional<int> end_degree;
    if (e.expected_end_ring) {
      const EndCandidate cand = candidate_from_json(*e.expected_end_ring);
      end_degree = cand.degree();
      auto v = validate_end_candidate(cand, report);
      out.detail["end_ring_validation"] = to_json(v, report.hypotheses.l);
      scenario = v.matching_scenario;
      if (v.overall == Verdict::fail) {
        out.diffs.push_back("end ring: candidate fails every scenario of the report");
        detail::downgrade(out, EntryStatus::fail);
      } else if (v.overall == Verdict::undetermined) {
        out.diffs.push_back("end ring: no scenario fully decided");
        detail::downgrade(out, EntryStatus::undetermined);
      }
    }
    if (e.expected_L) detail::check_L(e, f, label, report, scenario, end_degree, opt, out);
  } catch (const std::exception& ex) {
    out.diffs.push_back(std::string("error: ") + ex.what());
    detail::downgrade(out, EntryStatus::fail);
  }
  out.detail["status"] = to_string(out.status);
  out.detail["diffs"] = out.diffs;
  return out;
}

// Entries are processed in input order; a malformed entry is reported as a failure, not an abort.
inline CorpusSummary run_corpus_json(const nlohmann::json& doc, const CorpusOptions& opt = {}) {
  const nlohmann::json& list = doc.is_object() && doc.contains("entries") ? doc.at("entries") : doc;
  if (!list.is_array()) throw std::invalid_argument("corpus must be an array of entries or an object with an entries array");
  CorpusSummary s;
  std::size_t index = 0;
  for (auto& j : list) {
    EntryResult r;
    try {
      r = run_entry(corpus_entry_from_json(j), opt);
    } catch (const std::exception& ex) {
      r.id = j.is_object() && j.contains("id") && j.at("id").is_string() ? j.at("id").get<std::string>()
                                                                          : "#" + std::to_string(index);
      r.status = EntryStatus::fail;
      r.diffs.push_back(std::string("malformed entry: ") + ex.what());
      r.detail["id"] = r.id;
      r.detail["status"] = "fail";
      r.detail["diffs"] = r.diffs;
    }
    ++index;
    switch (r.status) {
      case EntryStatus::pass: ++s.pass; break;
      case EntryStatus::fail: ++s.fail; break;
      case EntryStatus::undetermined: ++s.undetermined; break;
    }
    s.entries.push_back(std::move(r));
  }
  return s;
}

inline CorpusSummary run_corpus(const std::string& path, const CorpusOptions& opt = {}) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  return run_corpus_json(nlohmann::json::parse(in), opt);
}

inline nlohmann::ordered_json to_json(const CorpusSummary& s) {
  nlohmann::ordered_json j;
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"undetermined", s.undetermined}};
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (auto& e : s.entries) entries.push_back(e.detail);
  j["entries"] = entries;
  return j;
}

}  // namespace hyperend
