#pragma once

// Command-line front end. Exit codes: 0 success, 1 a requested check failed, 2 usage error.

#include <hyperend/classify/classify.hpp>
#include <hyperend/corpus/corpus.hpp>
#include <hyperend/galois/galois.hpp>
#include <hyperend/modrep/module.hpp>
#include <hyperend/numfield/numfield.hpp>
#include <hyperend/permgrp/group.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace hyperend {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace cli {

inline std::string dims_text(const std::vector<int>& dims) {
  std::string s = "{";
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s + "}";
}

inline IntPolynomial read_poly(const std::string& text) {
  try {
    return parse_polynomial(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("cannot parse polynomial: ") + e.what());
  }
}

inline void write_json(const nlohmann::ordered_json& j, const std::string& dest, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (dest == "-") {
    out << text;
    return;
  }
  std::ofstream f(dest, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + dest);
  f << text;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

struct ClassifyArgs {
  std::string poly, json_out, abstract_spec;
  std::uint64_t sample_bound = kDefaultSampleBound;
};

inline int run_classify(const ClassifyArgs& a, std::ostream& out) {
  if (a.poly.empty() == a.abstract_spec.empty()) throw UsageError("classify needs exactly one of --poly and --abstract");
  ConstraintReport report;
  if (!a.abstract_spec.empty()) {
    report = classify_abstract(read_json_file(a.abstract_spec));
  } else {
    const IntPolynomial f = read_poly(a.poly);
    const int p = f.degree();
    if (p < 5 || p % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw UsageError("degree must be an odd prime >= 5");
    if (!prime_degree_screen(f).irreducible) {
      out << "screen failed: " << to_string(f) << " is reducible\n";
      return kExitCheckFailed;
    }
    ClassifyOptions opt;
    opt.sample_bound = a.sample_bound;
    report = classify(f, opt);
  }
  if (!a.json_out.empty()) {
    write_json(to_json(report), a.json_out, out);
    return kExitOk;
  }
  const auto& h = report.hypotheses;
  out << "p = " << h.p << ", g = " << h.g << ", Gal = " << (h.galois_label ? h.galois_label->name() : std::string("undeclared")) << ", l = " << h.l
      << ", ord_l = " << h.ord_l_mod_p << ", index = " << h.index_of_l << "\n";
  out << "certainty: " << report.certainty << "\n";
  for (auto& sc : report.scenarios) {
    out << "scenario " << to_string(sc.kind) << "\n";
    for (auto& c : sc.constraints) out << "  - " << clause_text(c.id, h.l) << "  [" << c.citation << "]\n";
    for (auto& L : sc.L_candidates) {
      out << "  L " << L.relation << " " << L.description;
      if (L.defpoly) out << " (" << *L.defpoly << ")";
      if (!L.condition.empty()) out << " when " << L.condition;
      out << "  [" << L.citation << "]\n";
    }
  }
  for (auto& e : report.excluded) out << "excluded " << to_string(e.kind) << ": " << e.reason << "  [" << e.citation << "]\n";
  if (report.s_bound) out << "s_bound = " << *report.s_bound << "\n";
  return kExitOk;
}

struct GaloisArgs {
  std::string poly;
  bool certify = false;
  std::uint64_t sample_bound = kDefaultSampleBound;
};

inline int run_galois(const GaloisArgs& a, std::ostream& out) {
  const IntPolynomial f = read_poly(a.poly);
  const int p = f.degree();
  if (p < 5 || p % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(p))) throw UsageError("degree must be an odd prime >= 5");
  if (a.sample_bound < kMinimumSampleBound) throw UsageError("insufficient sample: --sample-bound must be at least 100");
  const auto screen = prime_degree_screen(f);
  nlohmann::ordered_json j;
  j["poly"] = to_string(f);
  j["screen"] = {{"p", screen.p},
                 {"irreducible", screen.irreducible},
                 {"order_p_element", screen.order_p_element},
                 {"ord2_mod_p", screen.ord2_mod_p},
                 {"index_of_2", screen.index_of_2}};
  if (!screen.irreducible) {
    out << j.dump(2) << "\n";
    return kExitCheckFailed;
  }
  const GaloisLabel L = galois_label(f, a.sample_bound);
  j["galois"] = to_json(L);
  out << j.dump(2) << "\n";
  return a.certify && L.certainty != Certainty::certified ? kExitCheckFailed : kExitOk;
}

struct NfArgs {
  std::string poly;
  std::uint64_t prime = 0;
  bool maximal = false, shape = false, quartic = false, ramified = false;
};

inline int run_nf(const NfArgs& a, std::ostream& out) {
  const IntPolynomial f = read_poly(a.poly);
  if (f.degree() < 1 || f.lead() != 1 || !is_irreducible(f)) throw UsageError("defining polynomial must be monic irreducible");
  const int modes = a.maximal + a.shape + a.quartic + a.ramified;
  if ((a.maximal || a.shape) && a.prime == 0) throw UsageError("--maximal and --shape need --prime");
  if (a.prime && !is_prime_u64(a.prime)) throw UsageError("--prime must be prime");
  if (a.maximal) out << (is_l_maximal(f, a.prime) ? "l-maximal" : "not l-maximal") << "\n";
  if (a.shape) out << to_string(splitting_shape(f, a.prime)) << "\n";
  if (a.quartic) {
    if (f.degree() != 4) throw UsageError("--quartic needs a quartic");
    auto q = quartic_invariants(f);
    out << to_string(q.galois_type) << (q.totally_imaginary ? ", totally imaginary" : "") << (q.is_cm ? ", CM" : "")
        << (q.is_cyclic ? ", cyclic" : "");
    if (q.real_quadratic_subfield) out << ", real quadratic subfield " << q.real_quadratic_subfield->get_str();
    out << "\n";
  }
  if (a.ramified) {
    auto r = ramified_primes(f);
    std::string s = "{";
    for (std::size_t i = 0; i < r.ramified.size(); ++i) s += (i ? "," : "") + r.ramified[i].get_str();
    out << "ramified " << s << "}";
    if (!r.undetermined.empty()) {
      std::string u;
      for (std::size_t i = 0; i < r.undetermined.size(); ++i) u += (i ? "," : "") + r.undetermined[i].get_str();
      out << " undetermined {" << u << "}";
    }
    out << "\n";
  }
  if (modes == 0) {
    nlohmann::ordered_json j = to_json(make_number_field(f));
    if (a.prime) {
      j["l_maximal"] = is_l_maximal(f, a.prime);
      j["splitting_shape"] = to_json(splitting_shape(f, a.prime));
    }
    out << j.dump(2) << "\n";
  }
  return kExitOk;
}

struct ReplabArgs {
  std::uint64_t p = 0, l = 0;
  int symplectic = 0;
  std::string centralizer;
};

inline int run_replab(const ReplabArgs& a, std::ostream& out) {
  if (!is_prime_u64(a.p) || !is_prime_u64(a.l)) throw UsageError("--p and --l must be primes");
  if (a.p == a.l) throw UsageError("wild case out of scope: l = p");
  bool ok = true;
  if (a.symplectic) {
    if (2 * static_cast<std::uint64_t>(a.symplectic) + 1 != a.p) throw UsageError("--symplectic G needs p = 2G + 1");
    const auto el = symplectic_order_p_element(a.symplectic, a.l);
    const auto dims = module_constituents(el.module);
    const bool form = preserves_form(el.module.action, el.space.gram);
    const bool distinct = el.u_charpoly != el.w_charpoly;
    out << "decomposition " << dims_text(dims) << ", " << (distinct ? "non-isomorphic" : "isomorphic") << "\n";
    out << "U: " << to_string(el.u_charpoly) << ", W: " << to_string(el.w_charpoly) << "\n";
    out << "form preserved: " << (form ? "yes" : "no") << "\n";
    ok = form && distinct && dims == std::vector<int>{a.symplectic, a.symplectic};
  }
  if (!a.centralizer.empty()) {
    std::optional<PermutationGroup> G;
    try {
      G = label_group(label_from_name(a.centralizer, static_cast<int>(a.p)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!G) throw UsageError("no permutation model for " + a.centralizer);
    const int s = stabilizer_orbit_count(*G);
    const int full = centralizer_algebra_dim(permutation_module(*G, a.l));
    out << a.centralizer << ": order " << G->order() << ", s = " << s << ", dim End(F_l[X]) = " << full;
    bool here = full == s + 1;
    if (a.p % a.l) {
      const int del = centralizer_algebra_dim(deleted_permutation_module(*G, a.l));
      out << ", dim End(F_l[X]^0) = " << del;
      here = here && del <= s;
    }
    out << "\n";
    ok = ok && here;
  }
  if (!a.symplectic && a.centralizer.empty()) {
    const auto cf = cyclotomic_factors_mod(a.p, a.l);
    out << "x^" << a.p << "-1 mod " << a.l << ":";
    for (auto& [h, e] : cf.factors.factors) out << " (" << to_string(h) << ")";
    out << "\ns = " << cf.s << ", faithful irreducible dimension " << cf.s << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct CorpusArgs {
  std::string file, report;
  std::uint64_t sample_bound = kDefaultSampleBound;
};

inline int run_corpus_command(const CorpusArgs& a, std::ostream& out) {
  CorpusOptions opt;
  opt.sample_bound = a.sample_bound;
  std::ifstream probe(a.file);
  if (!probe) throw UsageError("cannot open corpus " + a.file);
  CorpusSummary s;
  try {
    s = run_corpus_json(nlohmann::json::parse(probe), opt);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(a.file + ": " + e.what());
  }
  if (!a.report.empty()) write_json(to_json(s), a.report, out);
  if (a.report != "-") {
    for (auto& e : s.entries) {
      out << to_string(e.status) << "  " << e.id << "\n";
      for (auto& d : e.diffs) out << "      " << d << "\n";
    }
    out << "pass " << s.pass << ", fail " << s.fail << ", undetermined " << s.undetermined << "\n";
  }
  return s.exit_code();
}

}  // namespace cli

inline int cli_dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"hyperend: Galois groups and endomorphism constraints for hyperelliptic Jacobians", "hyperend"};
  app.require_subcommand(1);

  cli::ClassifyArgs ca;
  auto* classify_cmd = app.add_subcommand("classify", "constraint report for y^2 = f(x)");
  classify_cmd->add_option("--poly", ca.poly, "polynomial in x");
  classify_cmd->add_option("--json", ca.json_out, "write the JSON report to a file, - for stdout");
  classify_cmd->add_option("--abstract", ca.abstract_spec, "JSON file of declared hypotheses");
  classify_cmd->add_option("--sample-bound", ca.sample_bound, "prime bound for Frobenius sampling");

  cli::GaloisArgs ga;
  auto* galois_cmd = app.add_subcommand("galois", "Galois group label with certificate");
  galois_cmd->add_option("--poly", ga.poly, "polynomial in x")->required();
  galois_cmd->add_flag("--certify", ga.certify, "exit 1 unless the label is certified");
  galois_cmd->add_option("--sample-bound", ga.sample_bound, "prime bound for Frobenius sampling");

  cli::NfArgs na;
  auto* nf_cmd = app.add_subcommand("nf", "number field invariants");
  nf_cmd->add_option("--poly", na.poly, "monic irreducible defining polynomial")->required();
  nf_cmd->add_option("--prime", na.prime, "rational prime l");
  nf_cmd->add_flag("--maximal", na.maximal, "Dedekind criterion at l");
  nf_cmd->add_flag("--shape", na.shape, "splitting shape of l");
  nf_cmd->add_flag("--quartic", na.quartic, "quartic invariants");
  nf_cmd->add_flag("--ramified", na.ramified, "ramified primes");

  cli::ReplabArgs ra;
  auto* replab_cmd = app.add_subcommand("replab", "F_l[C_p] modules and permutation modules");
  replab_cmd->add_option("--p", ra.p, "prime p")->required();
  replab_cmd->add_option("--l", ra.l, "prime l")->required();
  replab_cmd->add_option("--symplectic", ra.symplectic, "order-p element of Sp_2g(F_l) for this g");
  replab_cmd->add_option("--centralizer", ra.centralizer, "group label such as C5, D5, F5, S5");

  cli::CorpusArgs cra;
  auto* corpus_cmd = app.add_subcommand("corpus", "regression corpus");
  corpus_cmd->require_subcommand(1);
  auto* run_cmd = corpus_cmd->add_subcommand("run", "run a corpus file");
  run_cmd->add_option("file", cra.file, "corpus JSON")->required();
  run_cmd->add_option("--report", cra.report, "write the JSON report to a file, - for stdout");
  run_cmd->add_option("--sample-bound", cra.sample_bound, "prime bound for Frobenius sampling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*classify_cmd) return cli::run_classify(ca, out);
    if (*galois_cmd) return cli::run_galois(ga, out);
    if (*nf_cmd) return cli::run_nf(na, out);
    if (*replab_cmd) return cli::run_replab(ra, out);
    if (*corpus_cmd) return cli::run_corpus_command(cra, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace hyperend
