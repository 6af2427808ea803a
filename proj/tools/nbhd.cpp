#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "nbhd/decide.hpp"
#include "nbhd/error.hpp"
#include "nbhd/filtration.hpp"
#include "nbhd/io.hpp"
#include "nbhd/suites.hpp"
#include "nbhd/transform.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kBadInput = 3;

// Formula strings come from the command line, so parse errors are usage errors.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

nbhd::Formula formula_arg(const std::string& text) {
  try {
    return nbhd::parse(text);
  } catch (const nbhd::ParseError& e) {
    throw UsageError(std::string("invalid formula: ") + e.what());
  }
}

int cmd_parse(const std::string& text) {
  const nbhd::ParsedFormula parsed = [&] {
    try {
      return nbhd::parse_surface(text);
    } catch (const nbhd::ParseError& e) {
      throw UsageError(std::string("invalid formula: ") + e.what());
    }
  }();
  json subformulas = json::array();
  for (const auto& f : nbhd::subformula_closure(parsed.formula)) subformulas.push_back(nbhd::render(f));
  json out{{"formula", nbhd::render(parsed.formula)},
           {"variable_free", nbhd::is_variable_free(parsed)},
           {"modal_depth", nbhd::modal_depth(parsed.formula)},
           {"subformulas", std::move(subformulas)}};
  std::cout << out.dump() << '\n';
  return kOk;
}

int cmd_eval(const std::string& model_path, const std::string& text, int world, bool has_world) {
  const nbhd::Model m = nbhd::load_model(model_path);
  const nbhd::Formula f = formula_arg(text);
  if (has_world) {
    if (world < 0 || world >= m.worlds()) {
      throw UsageError("--world " + std::to_string(world) + " is outside [0, " + std::to_string(m.worlds()) + ")");
    }
    std::cout << json(nbhd::holds_at(m, world, f)).dump() << '\n';
  } else {
    std::cout << json(nbhd::truth_set(m, f).bits()).dump() << '\n';
  }
  return kOk;
}

int cmd_props(const std::string& frame_path) {
  const nbhd::Frame fr = nbhd::load_frame(frame_path);
  json out = json::object();
  for (const auto p : nbhd::kAllProperties) out[std::string(nbhd::to_string(p))] = nbhd::has_property(fr, p);
  const nbhd::AxiomReport report = nbhd::axiom_report(fr);
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"axiom", row.axiom},
                    {"formula", nbhd::render(row.formula)},
                    {"valid", row.valid},
                    {"property", std::string(nbhd::to_string(row.property))},
                    {"holds", row.holds}});
  }
  out["axioms"] = std::move(rows);
  out["mismatch"] = report.mismatch();
  std::cout << out.dump() << '\n';
  if (report.mismatch()) {
    std::cerr << "axiom validity disagrees with a frame property\n";
    return kFailed;
  }
  return kOk;
}

int cmd_transform(const std::string& frame_path, const std::string& op) {
  const nbhd::Model m = nbhd::load_model(frame_path);
  nbhd::Frame out = m.frame();
  if (op == "supplement") {
    out = nbhd::supplement(m.frame());
  } else if (op == "hat") {
    out = nbhd::hat_closure(m.frame());
  } else if (op == "iclose") {
    out = nbhd::intersection_closure(m.frame());
  } else {
    out = nbhd::rm_closure(m.frame());
  }
  if (m.valuation().empty()) {
    std::cout << nbhd::frame_to_json(out) << '\n';
  } else {
    std::cout << nbhd::model_to_json(nbhd::Model(std::move(out), m.valuation())) << '\n';
  }
  return kOk;
}

int cmd_filtrate(const std::string& model_path, const std::string& text, const std::string& kind_name) {
  const nbhd::Model m = nbhd::load_model(model_path);
  const nbhd::Formula f = formula_arg(text);
  const nbhd::FiltrationResult fr = nbhd::filtrate(m, f, nbhd::parse_filtration_kind(kind_name));
  const nbhd::FiltrationReport report = nbhd::verify_filtration(m, fr);
  std::cout << nbhd::filtration_to_json(fr) << '\n';
  for (const auto& check : report.checks) {
    std::cerr << (check.passed ? "pass " : "FAIL ") << nbhd::to_string(check.clause);
    if (check.formula) std::cerr << ' ' << nbhd::render(*check.formula);
    if (!check.detail.empty()) std::cerr << ": " << check.detail;
    std::cerr << '\n';
  }
  std::cerr << (report.passed() ? "filtration verified" : "filtration verification FAILED") << '\n';
  return report.passed() ? kOk : kFailed;
}

int cmd_sat(const std::string& text, const std::string& class_name, int max_worlds, std::size_t budget,
            std::uint64_t seed) {
  const nbhd::Formula f = formula_arg(text);
  nbhd::SearchConfig cfg;
  cfg.max_worlds = max_worlds;
  cfg.exhaustive_limit = std::min(2, max_worlds);
  cfg.sample_budget = budget;
  cfg.seed = seed;
  const nbhd::SatResult result = nbhd::bounded_sat(f, nbhd::parse_frame_class(class_name), cfg);
  if (result.satisfiable()) {
    json out = json::parse(nbhd::model_to_json(result.witness().model));
    out["outcome"] = "satisfiable";
    out["witness_world"] = result.witness().world;
    std::cout << out.dump() << '\n';
    std::cerr << "witness with " << result.witness().model.worlds() << " world(s), at world "
              << result.witness().world << '\n';
  } else {
    const auto& u = result.unknown();
    json out{{"outcome", "unknown"},
             {"max_worlds", u.max_worlds},
             {"frames_examined", u.frames_examined},
             {"frames_in_class", u.frames_in_class}};
    std::cout << out.dump() << '\n';
    std::cerr << "no witness up to " << u.max_worlds << " worlds; this is not a proof of unsatisfiability\n";
  }
  return kOk;
}

int cmd_lemmas(const std::string& level, std::uint64_t seed) {
  int failed = 0;
  for (const auto& r : nbhd::suites::run_all(nbhd::suites::parse_level(level), seed)) {
    std::cout << nbhd::suites::format(r) << std::endl;
    if (!r.passed()) ++failed;
  }
  return failed == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Neighborhood semantics toolkit: evaluation, closures, filtrations and bounded search"};
  app.require_subcommand(1, 1);

  std::string formula, model_path, frame_path, op, kind, class_name, level = "quick";
  int world = 0, max_worlds = 3;
  std::size_t budget = 100000;
  std::uint64_t seed = nbhd::kDefaultSeed;

  auto* parse_cmd = app.add_subcommand("parse", "Print the core form and subformula closure of a formula");
  parse_cmd->add_option("formula", formula, "Formula text")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Truth set of a formula in a model, or truth at one world");
  eval_cmd->add_option("--model", model_path, "Model file")->required();
  eval_cmd->add_option("--formula", formula, "Formula text")->required();
  auto* world_opt = eval_cmd->add_option("--world", world, "World index");

  auto* props_cmd = app.add_subcommand("props", "Frame properties next to the validity of T, M, C, 4");
  props_cmd->add_option("--frame", frame_path, "Frame or model file")->required();

  auto* transform_cmd = app.add_subcommand("transform", "Apply a closure operator to a frame");
  transform_cmd->add_option("--frame", frame_path, "Frame or model file")->required();
  transform_cmd->add_option("--op", op, "Operator")
      ->required()
      ->check(CLI::IsMember({"supplement", "hat", "iclose", "rmclose"}));

  auto* filtrate_cmd = app.add_subcommand("filtrate", "Filtrate a model through the subformulas of a formula");
  filtrate_cmd->add_option("--model", model_path, "Model file")->required();
  filtrate_cmd->add_option("--formula", formula, "Formula text")->required();
  filtrate_cmd->add_option("--kind", kind, "Filtration kind")
      ->required()
      ->check(CLI::IsMember({"minimal", "transitive", "s04", "emc4"}));

  auto* sat_cmd = app.add_subcommand("sat", "Bounded search for a pointed model in a frame class");
  sat_cmd->add_option("--formula", formula, "Formula text")->required();
  sat_cmd->add_option("--class", class_name, "Frame class")->required()->check(CLI::IsMember({"E", "E4", "EMC4", "S04"}));
  sat_cmd->add_option("--max-worlds", max_worlds, "Largest world count searched")->check(CLI::Range(1, 16));
  sat_cmd->add_option("--budget", budget, "Sampled frames per world count beyond the exhaustive range");
  sat_cmd->add_option("--seed", seed, "Random seed");

  auto* lemmas_cmd = app.add_subcommand("lemmas", "Run the property suites and print one line per suite");
  lemmas_cmd->add_option("--level", level, "Suite size")->check(CLI::IsMember({"quick", "full"}));
  lemmas_cmd->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*parse_cmd) return cmd_parse(formula);
    if (*eval_cmd) return cmd_eval(model_path, formula, world, world_opt->count() > 0);
    if (*props_cmd) return cmd_props(frame_path);
    if (*transform_cmd) return cmd_transform(frame_path, op);
    if (*filtrate_cmd) return cmd_filtrate(model_path, formula, kind);
    if (*sat_cmd) return cmd_sat(formula, class_name, max_worlds, budget, seed);
    if (*lemmas_cmd) return cmd_lemmas(level, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nbhd::FormatError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kBadInput;
  } catch (const nbhd::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const nbhd::GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const nbhd::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
