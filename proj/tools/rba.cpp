// Command-line front end: normal forms, dendriform axiom checks, composition
// checks, bounded completion and the embedding verification pipeline.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "rba/completion.hpp"
#include "rba/compositions.hpp"
#include "rba/dendriform.hpp"
#include "rba/text.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "text";  // "text" or "json"
  std::string path;             // empty = stdout

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", path, "Write the report to a file instead of standard output");
  }

  void emit(const std::string& text_report, const std::string& json_report) const {
    const std::string& report = format == "json" ? json_report : text_report;
    if (path.empty()) {
      std::cout << report;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << report;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

rba::Scalar parse_lambda(const std::string& text) {
  try {
    return rba::parse_scalar(text);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--lambda", e.what());
  }
}

nlohmann::json read_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

bool holds_rule_system(const nlohmann::json& j) {
  return j.is_object() && (j.contains("rules") || j.contains("system"));
}

// A rule system may arrive bare or riding inside a completion checkpoint;
// unwrap the latter so a checkpoint can be reduced against or resumed.
rba::RuleSystem load_rule_system(const nlohmann::json& j) {
  if (!j.contains("rules") && j.contains("system"))
    return rba::rule_system_from_json(j.at("system").dump());
  return rba::rule_system_from_json(j.dump());
}

int run_nf(const std::string& expr, const std::string& alg_path, const std::string& rules_path,
           const std::string& lambda_text, bool lambda_given, std::uint32_t alphabet,
           bool trace, const Output& out) {
  rba::RuleSystem S;
  std::string system_name = "(none)";
  if (!alg_path.empty()) {
    const rba::DendriformAlgebra D = rba::load_dendriform_file(alg_path);
    const rba::Scalar lambda = parse_lambda(lambda_text);
    S = lambda == 0 ? rba::full_gsb(D) : rba::enveloping_relations(D, lambda);
    system_name = D.name;
  } else if (!rules_path.empty()) {
    const nlohmann::json j = read_json(rules_path);
    if (!holds_rule_system(j))
      throw std::runtime_error(rules_path + ": not a rule system or completion checkpoint");
    S = load_rule_system(j);
    if (lambda_given && parse_lambda(lambda_text) != S.lambda)
      throw CLI::ValidationError("--lambda",
                                 "conflicts with the weight stored in " + rules_path);
    system_name = rules_path;
  } else {
    S.lambda = parse_lambda(lambda_text);
    S.alphabet_size = alphabet;
  }

  const rba::Poly input = rba::parse_poly(expr, S.lambda, S.alphabet_size);
  const rba::Reduction red = rba::reduce(input, S);

  std::string text = rba::to_string(red.poly) + "\n";
  if (trace)
    for (const rba::TraceStep& st : red.trace)
      text += "  step: " + st.rule_label + " at " + rba::to_string(st.context) + ", site " +
              rba::to_string(st.rewritten) + ", coeff " + rba::to_string(st.coeff) + "\n";

  nlohmann::ordered_json j;
  j["kind"] = "normal-form";
  j["input"] = expr;
  j["lambda"] = rba::to_string(S.lambda);
  j["system"] = system_name;
  j["normal_form"] = rba::to_string(red.poly);
  j["steps"] = red.trace.size();
  if (trace) {
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const rba::TraceStep& st : red.trace)
      steps.push_back({{"rule", st.rule_label},
                       {"context", rba::to_string(st.context)},
                       {"site", rba::to_string(st.rewritten)},
                       {"coeff", rba::to_string(st.coeff)}});
    j["trace"] = std::move(steps);
  }

  out.emit(text, j.dump(2) + "\n");
  return kExitPass;
}

int run_axioms(const std::string& alg_path, const Output& out) {
  const rba::DendriformAlgebra D = rba::load_dendriform_file(alg_path);
  const rba::AxiomReport r = rba::check_axioms(D);
  out.emit(rba::axioms_to_text(r), rba::axioms_to_json(r));
  return r.pass() ? kExitPass : kExitVerificationFailed;
}

int run_gsb_check(const std::string& alg_path, std::size_t max_deg, std::size_t probes,
                  const std::string& lambda_text, const Output& out) {
  const rba::DendriformAlgebra D = rba::load_dendriform_file(alg_path);
  const rba::Scalar lambda = parse_lambda(lambda_text);
  // weight 0 gets the bracket-saturated schema; other weights check the
  // explicit relations alone
  const rba::RuleSystem S =
      lambda == 0 ? rba::full_gsb(D) : rba::enveloping_relations(D, lambda);
  const rba::GsbReport r = rba::check_gsb(S, max_deg, probes);
  out.emit(rba::report_to_text(r), rba::report_to_json(r));
  return r.gsb_up_to_bound() ? kExitPass : kExitVerificationFailed;
}

int run_complete(const std::string& path, std::size_t max_deg, std::size_t probes,
                 std::size_t budget, const std::string& lambda_text, const Output& out) {
  rba::RuleSystem S;
  const nlohmann::json j = read_json(path);
  if (j.is_object() && j.contains("dim")) {
    const rba::DendriformAlgebra D = rba::load_dendriform_file(path);
    S = rba::enveloping_relations(D, parse_lambda(lambda_text));
  } else if (holds_rule_system(j)) {
    S = load_rule_system(j);
  } else {
    throw std::runtime_error(path +
                             ": neither an algebra (\"dim\"), a rule system (\"rules\"), "
                             "nor a completion checkpoint (\"system\")");
  }
  const rba::CompletionResult r = rba::shirshov_complete(S, max_deg, probes, budget);
  out.emit(rba::completion_to_text(r), rba::completion_to_json(r));
  return r.status == rba::CompletionStatus::saturated_up_to_bound ? kExitPass
                                                                  : kExitVerificationFailed;
}

int run_embed_verify(const std::string& alg_path, std::size_t depth, std::size_t max_deg,
                     std::size_t probes, const Output& out) {
  const rba::DendriformAlgebra D = rba::load_dendriform_file(alg_path);
  const rba::EmbeddingReport r = rba::verify_embedding(D, depth, max_deg, probes);
  out.emit(rba::embedding_to_text(r), rba::embedding_to_json(r));
  return r.verdict() ? kExitPass : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free Rota-Baxter algebra workbench: normal forms, composition checks,\n"
               "bounded completion and dendriform embedding verification"};
  app.require_subcommand(1);

  // nf
  std::string expr, nf_alg, nf_rules, nf_lambda = "0";
  std::uint32_t nf_alphabet = 0;
  bool nf_trace = false;
  Output nf_out;
  CLI::App* nf = app.add_subcommand("nf", "Reduce an expression to its normal form");
  nf->add_option("expr", expr, "Expression, e.g. \"x1 P(x2) - 2 P(x1 x1)\"")->required();
  nf->add_option("--alg", nf_alg, "Dendriform algebra file; reduce modulo its relations");
  nf->add_option("--rules", nf_rules,
                 "Rule-system or completion-checkpoint file; reduce modulo its rules");
  nf->add_option("--lambda", nf_lambda, "Weight of the Rota-Baxter expansion")
      ->capture_default_str();
  nf->add_option("--alphabet", nf_alphabet,
                 "Permitted generator indices when no system is given (0 = any)");
  nf->add_flag("--trace", nf_trace, "Include the rewriting steps");
  nf_out.add_flags(nf);
  nf->get_option("--alg")->excludes(nf->get_option("--rules"));

  // axioms
  std::string ax_alg;
  Output ax_out;
  CLI::App* ax = app.add_subcommand("axioms", "Check the dendriform axioms of an algebra file");
  ax->add_option("algebra", ax_alg, "Algebra file (JSON coordinate tables)")->required();
  ax_out.add_flags(ax);

  // gsb-check
  std::string gc_alg, gc_lambda = "0";
  std::size_t gc_deg = 5, gc_probes = 2;
  Output gc_out;
  CLI::App* gc = app.add_subcommand(
      "gsb-check", "Check all compositions of the enveloping relations up to a bound");
  gc->add_option("algebra", gc_alg, "Algebra file")->required();
  gc->add_option("--max-deg", gc_deg, "Ambient degree bound")->capture_default_str();
  gc->add_option("--probes", gc_probes, "Degree bound for multiplication probes")
      ->capture_default_str();
  gc->add_option("--lambda", gc_lambda, "Weight (0 includes the bracket-saturated schema)")
      ->capture_default_str();
  gc_out.add_flags(gc);

  // complete
  std::string cp_path, cp_lambda = "0";
  std::size_t cp_deg = 5, cp_probes = 2, cp_budget = 100;
  Output cp_out;
  CLI::App* cp = app.add_subcommand(
      "complete", "Adjoin nontrivial compositions until saturated or out of budget");
  cp->add_option("input", cp_path, "Algebra, rule-system or checkpoint file")->required();
  cp->add_option("--max-deg", cp_deg, "Ambient degree bound")->capture_default_str();
  cp->add_option("--probes", cp_probes, "Degree bound for multiplication probes")
      ->capture_default_str();
  cp->add_option("--budget", cp_budget, "Maximum number of adjoined rules")
      ->capture_default_str();
  cp->add_option("--lambda", cp_lambda, "Weight used when the input is an algebra file")
      ->capture_default_str();
  cp_out.add_flags(cp);

  // embed-verify
  std::string ev_alg;
  std::size_t ev_depth = 2, ev_deg = 5, ev_probes = 2;
  Output ev_out;
  CLI::App* ev = app.add_subcommand(
      "embed-verify", "Verify the embedding of an algebra into its enveloping system");
  ev->add_option("algebra", ev_alg, "Algebra file")->required();
  ev->add_option("--depth", ev_depth, "Expression depth for the homomorphism check")
      ->capture_default_str();
  ev->add_option("--max-deg", ev_deg, "Ambient degree bound")->capture_default_str();
  ev->add_option("--probes", ev_probes, "Degree bound for multiplication probes")
      ->capture_default_str();
  ev_out.add_flags(ev);

  try {
    app.parse(argc, argv);
    if (nf->parsed())
      return run_nf(expr, nf_alg, nf_rules, nf_lambda, nf->count("--lambda") > 0, nf_alphabet,
                    nf_trace, nf_out);
    if (ax->parsed()) return run_axioms(ax_alg, ax_out);
    if (gc->parsed()) return run_gsb_check(gc_alg, gc_deg, gc_probes, gc_lambda, gc_out);
    if (cp->parsed()) return run_complete(cp_path, cp_deg, cp_probes, cp_budget, cp_lambda, cp_out);
    if (ev->parsed()) return run_embed_verify(ev_alg, ev_depth, ev_deg, ev_probes, ev_out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  } catch (const rba::ParseError& e) {
    std::cerr << "parse error at " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
