// dyadic: command-line front end.
//
//   dyadic decide FORMULA | --sequent "G |- D"   exit 0 proven, 1 refuted, 2 error
//   dyadic check-proof PATH [--calculus plus|cut] exit 0 iff the proof checks
//   dyadic eval MODEL FORMULA                     exit 0 iff valid in the model
//   dyadic corpus PATH...                         exit 0 iff every entry matches
//
// Results go to stdout, diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyadic/dyadic.hpp"

namespace {

using namespace dyadic;

constexpr int kExitError = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_max_steps() {
  if (const char* env = std::getenv("DYADIC_MAX_STEPS")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed DYADIC_MAX_STEPS='" << env << "'\n";
    }
  }
  return kDefaultMaxSteps;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Failure(path + ": invalid JSON: " + e.what());
  }
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Failure("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string render_model(const PreferenceModel& m) {
  std::ostringstream out;
  out << "worlds:";
  for (auto id : m.ids) out << ' ' << id;
  out << "\nbetter:";
  bool any = false;
  for (std::size_t x = 0; x < m.world_count(); ++x)
    for (std::size_t y = 0; y < m.world_count(); ++y)
      if (m.better[x][y]) {
        out << ' ' << m.ids[x] << '>' << m.ids[y];
        any = true;
      }
  if (!any) out << " (none)";
  for (std::size_t w = 0; w < m.world_count(); ++w) {
    out << "\nV(" << m.ids[w] << ") = {";
    for (std::size_t a = 0; a < m.valuation[w].size(); ++a) out << (a ? ", " : "") << m.valuation[w][a];
    out << '}';
  }
  return out.str();
}

std::string render_stats(const SearchStats& s) {
  std::ostringstream out;
  out << "nodes_expanded=" << s.nodes_expanded << " max_components=" << s.max_components
      << " max_component_formulas=" << s.max_component_formulas << " max_branch_length=" << s.max_branch_length;
  return out.str();
}

/// Re-verifies a verdict with the independent checkers.
std::optional<std::string> self_check(const Sequent& root, const Verdict& v) {
  if (v.proven()) {
    auto report = check(v.proof().proof, CheckedCalculus::HEPlus);
    if (!report.ok) return "proof rejected at " + report.path + " (" + report.rule + "): " + report.message;
    return std::nullopt;
  }
  const auto& r = v.refutation();
  if (!is_saturated(r.saturated)) return "leaf is not saturated";
  if (!truth_lemma_check(r.saturated, r.model)) return "truth lemma fails on the extracted model";
  if (eval(r.model, r.falsifying_world, as_formula(root))) return "model does not falsify the root at the reported world";
  return std::nullopt;
}

// ── decide ──────────────────────────────────────────────────────────────────

struct DecideArgs {
  std::string formula;
  std::string sequent;
  std::string emit_proof;
  std::string emit_model;
  std::string format = "text";
  bool stats = false;
  bool self_check = false;
  bool allow_bet = false;
  std::uint64_t max_steps = 0;
};

int run_decide(const DecideArgs& a) {
  if (a.formula.empty() == a.sequent.empty()) throw Failure("give exactly one of FORMULA or --sequent");
  const ParseOptions popts{.allow_bet = a.allow_bet};
  Sequent root;
  if (!a.sequent.empty()) {
    auto st = parse_sequent(a.sequent, popts);
    root = make_sequent(st.antecedent, st.succedent);
  } else {
    root = make_sequent({}, {parse(a.formula, popts)});
  }

  const Verdict v = decide(root, SearchOptions{.max_steps = a.max_steps, .allow_bet = a.allow_bet});

  if (a.self_check) {
    if (auto problem = self_check(root, v)) throw Failure("self-check failed: " + *problem);
  }
  if (!a.emit_proof.empty()) {
    if (!v.proven()) throw Failure("--emit-proof: the root was refuted, there is no proof");
    write_json(a.emit_proof, to_json(v.proof().proof));
  }
  if (!a.emit_model.empty()) {
    if (v.proven()) throw Failure("--emit-model: the root was proven, there is no countermodel");
    write_json(a.emit_model, to_json(v.refutation().model));
  }

  if (a.format == "json") {
    std::cout << to_json(v).dump(2) << '\n';
  } else if (v.proven()) {
    std::cout << "proven (" << node_count(v.proof().proof) << " proof nodes)\n";
    if (a.stats) std::cout << "stats: " << render_stats(v.stats) << '\n';
  } else {
    const auto& r = v.refutation();
    std::cout << "refuted at world " << r.falsifying_world << '\n';
    std::cout << "saturated: " << render(r.saturated) << '\n';
    std::cout << render_model(r.model) << '\n';
    if (a.stats) std::cout << "stats: " << render_stats(v.stats) << '\n';
  }
  return v.proven() ? 0 : 1;
}

// ── check-proof ─────────────────────────────────────────────────────────────

int run_check_proof(const std::string& path, const std::string& calculus, const std::string& format) {
  const ProofNode proof = proof_from_json(read_json(path));
  const auto mode = calculus == "cut" ? CheckedCalculus::HEWithCut : CheckedCalculus::HEPlus;
  const auto report = check(proof, mode);
  if (format == "json") {
    Json j{{"ok", report.ok}, {"calculus", std::string(to_string(mode))}, {"nodes", node_count(proof)}};
    if (!report.ok) {
      j["path"] = report.path;
      j["rule"] = report.rule;
      j["message"] = report.message;
    }
    std::cout << j.dump(2) << '\n';
  } else if (report.ok) {
    std::cout << "ok: " << node_count(proof) << " nodes checked in " << to_string(mode) << '\n';
  } else {
    std::cout << "rejected at " << report.path << (report.rule.empty() ? "" : " (" + report.rule + ")") << ": "
              << report.message << '\n';
  }
  return report.ok ? 0 : 1;
}

// ── eval ────────────────────────────────────────────────────────────────────

int run_eval(const std::string& model_path, const std::string& text, const std::string& format) {
  const PreferenceModel m = model_from_json(read_json(model_path));
  const Formula f = parse(text, ParseOptions{.allow_bet = true});
  const Extension ext = extension(m, f);
  bool valid = true;
  for (bool b : ext) valid = valid && b;
  if (format == "json") {
    Json worlds = Json::object();
    for (std::size_t w = 0; w < m.world_count(); ++w) worlds[std::to_string(m.ids[w])] = static_cast<bool>(ext[w]);
    std::cout << Json{{"formula", render(f)}, {"worlds", worlds}, {"valid", valid}}.dump(2) << '\n';
  } else {
    for (std::size_t w = 0; w < m.world_count(); ++w)
      std::cout << "world " << m.ids[w] << ": " << (ext[w] ? "true" : "false") << '\n';
    std::cout << (valid ? "valid" : "not valid") << '\n';
  }
  return valid ? 0 : 1;
}

// ── corpus ──────────────────────────────────────────────────────────────────

int run_corpus(const std::vector<std::string>& paths, std::uint64_t max_steps, bool do_self_check, const std::string& format) {
  std::size_t total = 0;
  std::size_t passed = 0;
  SearchStats peak;
  std::uint64_t expanded = 0;
  Json entries = Json::array();
  for (const auto& path : paths) {
    for (const auto& e : load_corpus(path)) {
      ++total;
      Json rec{{"file", path}, {"name", e.name}, {"expected", e.expected == Expectation::Proven ? "proven" : "refuted"}};
      std::string outcome;
      std::string problem;
      try {
        const Sequent root = parse_root(e.input);
        const Verdict v = decide(root, SearchOptions{.max_steps = max_steps});
        outcome = v.proven() ? "proven" : "refuted";
        if (v.proven() != (e.expected == Expectation::Proven)) problem = "expected " + rec["expected"].get<std::string>();
        if (problem.empty() && do_self_check) {
          if (auto p = self_check(root, v)) problem = "self-check failed: " + *p;
        }
        expanded += v.stats.nodes_expanded;
        peak.max_components = std::max(peak.max_components, v.stats.max_components);
        peak.max_component_formulas = std::max(peak.max_component_formulas, v.stats.max_component_formulas);
        peak.max_branch_length = std::max(peak.max_branch_length, v.stats.max_branch_length);
        rec["stats"] = to_json(v.stats);
      } catch (const SearchLimitExceeded& ex) {
        outcome = "limit";
        problem = ex.what();
      } catch (const ParseError& ex) {
        outcome = "error";
        problem = ex.what();
      }
      const bool ok = problem.empty();
      passed += ok;
      rec["outcome"] = outcome;
      rec["pass"] = ok;
      if (!ok) rec["problem"] = problem;
      entries.push_back(rec);
      if (format != "json") {
        std::cout << (ok ? "PASS " : "FAIL ") << e.name << ": " << outcome;
        if (!ok) std::cout << " (" << problem << ")";
        std::cout << '\n';
      }
    }
  }
  peak.nodes_expanded = expanded;
  if (format == "json") {
    std::cout << Json{{"entries", entries}, {"passed", passed}, {"total", total}, {"stats", to_json(peak)}}.dump(2) << '\n';
  } else {
    std::cout << passed << '/' << total << " passed; " << render_stats(peak) << '\n';
  }
  return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decision procedure for dyadic deontic logic"};
  app.require_subcommand(1);

  DecideArgs d;
  d.max_steps = default_max_steps();
  auto* dec = app.add_subcommand("decide", "Prove or refute a formula or sequent");
  dec->add_option("formula", d.formula, "Formula to decide");
  dec->add_option("--sequent", d.sequent, "Sequent 'A, B |- C, D'");
  dec->add_option("--emit-proof", d.emit_proof, "Write the proof tree as JSON");
  dec->add_option("--emit-model", d.emit_model, "Write the countermodel as JSON");
  dec->add_flag("--stats", d.stats, "Print search statistics");
  dec->add_flag("--self-check", d.self_check, "Re-verify the answer with the independent checkers");
  dec->add_option("--format", d.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  dec->add_option("--max-steps", d.max_steps, "Rule application cap (default: DYADIC_MAX_STEPS or 1000000)");
  dec->add_flag("--allow-bet", d.allow_bet, "Accept Bet in the input");

  std::string proof_path, calculus = "plus", check_format = "text";
  auto* chk = app.add_subcommand("check-proof", "Replay a proof JSON file");
  chk->add_option("path", proof_path, "Proof file")->required();
  chk->add_option("--calculus", calculus, "plus: search calculus; cut: calculus with cut")
      ->check(CLI::IsMember({"plus", "cut"}));
  chk->add_option("--format", check_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string model_path, eval_formula, eval_format = "text";
  auto* ev = app.add_subcommand("eval", "Evaluate a formula in a model file");
  ev->add_option("model", model_path, "Model file")->required();
  ev->add_option("formula", eval_formula, "Formula")->required();
  ev->add_option("--format", eval_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> corpus_paths;
  std::string corpus_format = "text";
  bool corpus_self_check = false;
  std::uint64_t corpus_steps = default_max_steps();
  auto* cor = app.add_subcommand("corpus", "Run corpus files against their expectations");
  cor->add_option("paths", corpus_paths, "Corpus files")->required();
  cor->add_flag("--self-check", corpus_self_check, "Re-verify every answer");
  cor->add_option("--max-steps", corpus_steps, "Rule application cap per entry");
  cor->add_option("--format", corpus_format, "Output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*dec) return run_decide(d);
    if (*chk) return run_check_proof(proof_path, calculus, check_format);
    if (*ev) return run_eval(model_path, eval_formula, eval_format);
    if (*cor) return run_corpus(corpus_paths, corpus_steps, corpus_self_check, corpus_format);
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
  } catch (const SearchLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitError;
}
