#include "inse/inls/rules_text.hpp"
#include "inse/ins_set.hpp"
#include "inse/logic/check.hpp"
#include "inse/logic/text.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace inse;

int cmd_insop(const std::string& op, const std::string& a_path, const std::string& b_path,
              double k, const std::string& out_path) {
  InsSet a = load_ins_set(a_path);
  auto need_b = [&]() {
    if (b_path.empty()) throw error("operator '" + op + "' needs -b FILE");
    return load_ins_set(b_path);
  };
  std::string out;
  if (op == "complement") out = to_text(ins_complement(a));
  else if (op == "union") out = to_text(ins_union(a, need_b()));
  else if (op == "intersect") out = to_text(ins_intersect(a, need_b()));
  else if (op == "difference") out = to_text(ins_difference(a, need_b()));
  else if (op == "add") out = to_text(ins_add(a, need_b()));
  else if (op == "product") out = to_text(ins_cartesian_product(a, need_b()));
  else if (op == "truth-favorite") out = to_text(ins_truth_favorite(a));
  else if (op == "false-favorite") out = to_text(ins_false_favorite(a));
  else if (op == "scalar-mul") out = to_text(ins_scalar_mul(a, k));
  else if (op == "scalar-div") out = to_text(ins_scalar_div(a, k));
  else if (op == "contains") out = ins_contains(a, need_b()) ? "true\n" : "false\n";
  else if (op == "is-empty") out = ins_is_empty(a) ? "true\n" : "false\n";
  else throw error("unknown operator '" + op + "'");
  if (out_path.empty()) {
    std::cout << out;
  } else {
    std::ofstream f(out_path);
    if (!f) throw error("cannot write '" + out_path + "'");
    f << out;
  }
  return 0;
}

logic::DesignatedConvention convention_from(const std::string& truth,
                                            const std::string& falsity, bool predicate) {
  logic::DesignatedConvention conv =
      predicate ? logic::pred_convention() : logic::prop_convention();
  if (!truth.empty()) conv.truth = parse_triple(truth);
  if (!falsity.empty()) conv.falsity = parse_triple(falsity);
  if (conv.truth == conv.falsity) throw error("designated truth and falsity must differ");
  return conv;
}

std::string interp_text(const logic::Interpretation& m) {
  std::string out;
  for (const auto& [name, v] : m) out += "  " + name + " = " + to_string(v) + "\n";
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"interval neutrosophic set, logic and inference toolkit"};
  app.require_subcommand(1);

  // insop: set algebra on .ins files
  auto* insop = app.add_subcommand("insop", "set-theoretic operators on .ins files");
  std::string op, a_path, b_path, out_path;
  double scalar = 1.0;
  insop->add_option("--op", op,
                    "complement|union|intersect|difference|add|product|truth-favorite|"
                    "false-favorite|scalar-mul|scalar-div|contains|is-empty")
      ->required();
  insop->add_option("-a", a_path, "first operand file")->required();
  insop->add_option("-b", b_path, "second operand file");
  insop->add_option("-k", scalar, "scalar for scalar-mul/scalar-div");
  insop->add_option("-o", out_path, "output file (default stdout)");

  // logic: evaluate / check formulas
  auto* lg = app.add_subcommand("logic", "formula evaluation and falsification checks");
  lg->require_subcommand(1);
  std::string formula, formula2, interp_path, model_path, truth_text, falsity_text, env_text;
  int samples = 1000, trials = 100, schema_id = 0;
  std::uint64_t seed = 1;
  bool all_schemas = false;

  auto* ev = lg->add_subcommand("eval", "evaluate a formula");
  ev->add_option("-f", formula, "s-expression formula")->required();
  ev->add_option("--interp", interp_path, "interpretation file (propositional)");
  ev->add_option("--model", model_path, "finite model file (predicate)");
  ev->add_option("--env", env_text, "variable bindings x=elem,y=elem");

  auto* taut = lg->add_subcommand("taut", "falsification-based tautology check");
  taut->add_option("-f", formula, "s-expression formula")->required();
  taut->add_option("--samples", samples, "random samples after the corner sweep");
  taut->add_option("--seed", seed, "sampling seed");
  taut->add_option("--truth", truth_text, "designated truth triple");
  taut->add_option("--falsity", falsity_text, "designated falsity triple");

  auto* equiv = lg->add_subcommand("equiv", "equivalence check by sampling");
  equiv->add_option("-f", formula, "first formula")->required();
  equiv->add_option("-g", formula2, "second formula")->required();
  equiv->add_option("--samples", samples, "random samples after the corner sweep");
  equiv->add_option("--seed", seed, "sampling seed");

  auto* schema = lg->add_subcommand("schema", "first-order scheme identity checks");
  schema->add_option("--id", schema_id, "schema id (1..22)");
  schema->add_flag("--all", all_schemas, "check the whole catalog");
  schema->add_option("--trials", trials, "random models per schema");
  schema->add_option("--seed", seed, "model sampling seed");

  // infer: INLS pipeline
  auto* infer = app.add_subcommand("infer", "run the neutrosophic inference pipeline");
  std::string rules_path, inputs_text, weights_text;
  int grid = 1001;
  bool trace = false;
  infer->add_option("--rules", rules_path, "rulebase file")->required();
  infer->add_option("--in", inputs_text, "crisp inputs x=1.5,y=2")->required();
  infer->add_option("--grid", grid, "output grid resolution");
  infer->add_option("--weights", weights_text, "synthesization weights a,b,c,d");
  infer->add_flag("--trace", trace, "print per-rule intermediate results");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (insop->parsed()) return cmd_insop(op, a_path, b_path, scalar, out_path);

    if (lg->parsed()) {
      if (ev->parsed()) {
        if (!model_path.empty()) {
          logic::FiniteModel m = logic::load_model(model_path);
          logic::Env env;
          if (!env_text.empty()) {
            std::istringstream ss(env_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
              std::size_t eq = item.find('=');
              if (eq == std::string::npos) throw error("bad --env entry '" + item + "'");
              int idx = m.element_index(item.substr(eq + 1));
              if (idx < 0) throw error("unknown element '" + item.substr(eq + 1) + "'");
              env[item.substr(0, eq)] = idx;
            }
          }
          auto f = logic::parse_pred_formula(formula);
          std::cout << to_string(logic::eval_pred(f, m, env)) << "\n";
        } else if (!interp_path.empty()) {
          auto f = logic::parse_prop_formula(formula);
          std::cout << to_string(logic::eval_prop(f, logic::load_interpretation(interp_path)))
                    << "\n";
        } else {
          throw error("logic eval needs --interp or --model");
        }
        return 0;
      }
      if (taut->parsed()) {
        auto f = logic::parse_prop_formula(formula);
        auto conv = convention_from(truth_text, falsity_text, false);
        auto v = logic::check_tautology(f, conv, samples, seed);
        if (v.falsified) {
          std::cout << "falsified (value " << to_string(v.value) << ") at\n"
                    << interp_text(v.counterexample);
          std::cout << "convention truth " << to_string(v.convention.truth) << "\n";
          return 1;
        }
        std::cout << "no counterexample in " << v.samples_run << " interpretations (truth "
                  << to_string(v.convention.truth) << ")\n";
        return 0;
      }
      if (equiv->parsed()) {
        auto f = logic::parse_prop_formula(formula);
        auto g = logic::parse_prop_formula(formula2);
        auto v = logic::check_equivalence(f, g, samples, seed);
        if (v.falsified) {
          std::cout << "falsified: lhs " << to_string(v.lhs_value) << " rhs "
                    << to_string(v.rhs_value) << " at\n"
                    << interp_text(v.counterexample);
          return 1;
        }
        std::cout << "no counterexample in " << v.samples_run << " interpretations\n";
        return 0;
      }
      if (schema->parsed()) {
        std::vector<int> ids;
        if (all_schemas)
          for (int id = 1; id <= logic::schema_count(); ++id) ids.push_back(id);
        else if (schema_id >= 1)
          ids.push_back(schema_id);
        else
          throw error("give --id N or --all");
        bool any_fail = false;
        for (int id : ids) {
          auto rep = logic::check_schema_identity(id, trials, seed);
          std::cout << (rep.holds ? "identity-holds " : "counterexample ") << id << ": "
                    << rep.info.text << "\n";
          if (!rep.holds) {
            std::cout << "  " << rep.counterexample << "\n";
            any_fail = true;
          }
        }
        return any_fail ? 1 : 0;
      }
    }

    if (infer->parsed()) {
      inls::RuleBase rb = inls::load_rulebase(rules_path);
      inls::Inputs inputs;
      std::istringstream ss(inputs_text);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw error("bad --in entry '" + item + "'");
        inputs[item.substr(0, eq)] = inls::InputValue::of(std::stod(item.substr(eq + 1)));
      }
      inls::EngineConfig cfg;
      cfg.y_samples = grid;
      if (!weights_text.empty()) {
        std::istringstream ws(weights_text);
        char comma;
        if (!(ws >> cfg.weights.truth >> comma >> cfg.weights.not_false >> comma >>
              cfg.weights.indet >> comma >> cfg.weights.not_indet))
          throw error("bad --weights, expected a,b,c,d");
      }
      auto res = inls::run_inference(rb, inputs, cfg);
      if (trace) {
        for (std::size_t k = 0; k < res.trace.rules.size(); ++k) {
          const auto& rt = res.trace.rules[k];
          std::cout << "rule " << k + 1 << (rt.fired ? " fired" : " not fired")
                    << ", strength " << to_string(rt.firing) << "\n";
        }
      }
      std::cout << fmt_grade(res.output) << "\n";
      return 0;
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
