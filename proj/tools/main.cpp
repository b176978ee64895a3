#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knowwh/bisim.hpp"
#include "knowwh/eval.hpp"
#include "knowwh/kh.hpp"
#include "knowwh/lab.hpp"
#include "knowwh/model_json.hpp"
#include "knowwh/parse.hpp"
#include "knowwh/suites.hpp"
#include "knowwh/translate.hpp"

namespace {

using namespace knowwh;
using nlohmann::json;

// 0 true/valid, 1 false/invalid, 2 error.
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

AnyModel load_model(const std::string& path) { return parse_model(slurp(path)); }

void add_budget_flags(CLI::App* cmd, SearchBudget* budget) {
  cmd->add_option("--max-worlds", budget->max_worlds, "world/state bound (default 3)");
  cmd->add_option("--max-agents", budget->max_agents, "agent bound for generated instances");
  cmd->add_option("--max-values", budget->max_values, "value-domain bound (default 2)");
  cmd->add_option("--max-actions", budget->max_actions, "action bound (default 2)");
  cmd->add_option("--max-letters", budget->max_letters, "letter bound for generated instances");
}

std::string plan_joined(const Plan& plan) {
  std::string out;
  for (const auto& a : plan) out += a;
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"knowwh: model checking and validity search for logics of "
               "knowing whether, knowing what and knowing how"};
  app.require_subcommand(1);

  // check
  std::string model_path, world, formula_text;
  bool as_json = false;
  auto* check = app.add_subcommand("check", "evaluate a formula at a pointed model");
  check->add_option("model", model_path, "model JSON file")->required();
  check->add_option("--at", world, "evaluation world")->required();
  check->add_option("formula", formula_text, "formula")->required();
  check->add_flag("--json", as_json, "machine-readable output");

  // valid
  std::string frames = "arbitrary", emit_path;
  SearchBudget budget;
  auto* validc = app.add_subcommand("valid", "exhaustive validity over a frame class");
  validc->add_option("formula", formula_text, "formula")->required();
  validc->add_option("--frames", frames, "frame class (default arbitrary)");
  add_budget_flags(validc, &budget);
  validc->add_option("--emit", emit_path, "write the countermodel to this file");
  validc->add_flag("--json", as_json, "machine-readable output");

  // frame-valid
  auto* framec = app.add_subcommand("frame-valid", "truth under all valuations over a frame");
  framec->add_option("frame", model_path, "frame JSON file")->required();
  framec->add_option("formula", formula_text, "formula")->required();
  framec->add_flag("--json", as_json, "machine-readable output");

  // bisim
  bool delta = false;
  std::string m2_path, world2;
  auto* bisimc = app.add_subcommand("bisim", "pointed (delta-)bisimilarity");
  bisimc->add_flag("--delta", delta, "delta-bisimulation instead of standard");
  bisimc->add_option("m1", model_path, "first model JSON")->required();
  bisimc->add_option("w1", world, "world of m1")->required();
  bisimc->add_option("m2", m2_path, "second model JSON")->required();
  bisimc->add_option("w2", world2, "world of m2")->required();
  bisimc->add_flag("--json", as_json, "machine-readable output");

  // update
  std::string announce_text, aw_text, inspect_const;
  auto* updatec = app.add_subcommand("update", "announcement / inspection updates");
  updatec->add_option("model", model_path, "model JSON file")->required();
  auto* a_opt = updatec->add_option("--announce", announce_text, "announce a formula");
  auto* aw_opt = updatec->add_option("--announce-whether", aw_text,
                                     "announce a formula or its negation, per --at");
  auto* in_opt = updatec->add_option("--inspect", inspect_const,
                                     "reveal a constant's value at --at");
  updatec->add_option("--at", world, "actual world for --announce-whether/--inspect");

  // plan
  std::string pre_text, goal_text;
  auto* planc = app.add_subcommand("plan", "uniform plan search on an LTS");
  planc->add_option("lts", model_path, "LTS JSON file")->required();
  planc->add_option("--pre", pre_text, "precondition formula")->required();
  planc->add_option("--goal", goal_text, "goal formula")->required();
  planc->add_flag("--json", as_json, "machine-readable output");

  // translate
  bool t_ncl_ml = false, t_ml_ncl = false, t_expand = false;
  auto* transc = app.add_subcommand("translate", "syntactic translations");
  transc->add_flag("--ncl-to-ml", t_ncl_ml, "knowing whether into box");
  transc->add_flag("--ml-to-ncl", t_ml_ncl, "box into knowing whether (reflexive models)");
  transc->add_flag("--expand-diamond", t_expand, "binary value diamond into unary diamonds");
  transc->add_option("formula", formula_text, "formula")->required();
  transc->add_flag("--json", as_json, "machine-readable output");

  // axioms
  std::string suite_id;
  auto* axiomsc = app.add_subcommand("axioms", "run an axiom suite");
  axiomsc->add_option("--suite", suite_id, "suite id")->required();
  add_budget_flags(axiomsc, &budget);
  axiomsc->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  if (check->parsed()) {
    AnyModel m = load_model(model_path);
    bool result = eval(m, world, parse(formula_text));
    if (as_json) std::cout << json{{"result", result}}.dump() << "\n";
    else std::cout << (result ? "true" : "false") << "\n";
    return result ? kTrue : kFalse;
  }

  if (validc->parsed()) {
    auto cls = frame_class_from_string(frames);
    if (!cls) throw std::runtime_error("unknown frame class '" + frames + "'");
    Verdict v = valid(parse(formula_text), *cls, budget);
    if (!emit_path.empty() && v.counter) {
      std::ofstream out(emit_path);
      out << v.counter->model.dump(2) << "\n";
    }
    if (as_json) {
      json j{{"status", v.valid ? "valid-up-to-budget" : "invalid"},
             {"models_examined", v.models_examined}};
      if (v.counter) {
        j["countermodel"] = v.counter->model;
        j["world"] = v.counter->world;
      }
      std::cout << j.dump() << "\n";
    } else if (v.valid) {
      std::cout << "valid-up-to-budget (models=" << v.models_examined << ")\n";
    } else {
      std::cout << "invalid (models=" << v.models_examined << ")\n";
      std::cout << "countermodel at " << v.counter->world << ": " << v.counter->model.dump()
                << "\n";
    }
    return v.valid ? kTrue : kFalse;
  }

  if (framec->parsed()) {
    AnyModel m = load_model(model_path);
    auto* frame = std::get_if<KripkeModel>(&m);
    if (!frame) throw std::runtime_error("frame-valid expects a kripke model");
    Verdict v = frame_valid(*frame, parse(formula_text));
    if (as_json) {
      json j{{"status", v.valid ? "valid" : "invalid"},
             {"valuations_examined", v.models_examined}};
      if (v.counter) {
        j["countermodel"] = v.counter->model;
        j["world"] = v.counter->world;
      }
      std::cout << j.dump() << "\n";
    } else if (v.valid) {
      std::cout << "valid\n";
    } else {
      std::cout << "invalid\n";
      std::cout << "countermodel at " << v.counter->world << ": " << v.counter->model.dump()
                << "\n";
    }
    return v.valid ? kTrue : kFalse;
  }

  if (bisimc->parsed()) {
    AnyModel m1 = load_model(model_path);
    AnyModel m2 = load_model(m2_path);
    auto* k1 = std::get_if<KripkeModel>(&m1);
    auto* k2 = std::get_if<KripkeModel>(&m2);
    if (!k1 || !k2) throw std::runtime_error("bisim expects kripke models");
    BisimResult r =
        check_bisim(*k1, world, *k2, world2, delta ? BisimKind::Delta : BisimKind::Standard);
    if (as_json) {
      json pairs = json::array();
      for (const auto& [a, b] : r.witness) pairs.push_back({a, b});
      std::cout << json{{"related", r.related}, {"witness", pairs}}.dump() << "\n";
    } else {
      std::cout << (r.related ? "true" : "false") << "\n";
    }
    return r.related ? kTrue : kFalse;
  }

  if (updatec->parsed()) {
    AnyModel m = load_model(model_path);
    int given = (a_opt->count() ? 1 : 0) + (aw_opt->count() ? 1 : 0) + (in_opt->count() ? 1 : 0);
    if (given != 1)
      throw std::runtime_error("update needs exactly one of --announce, --announce-whether, "
                               "--inspect");
    json out;
    if (a_opt->count()) {
      Formula f = parse(announce_text);
      if (auto* km = std::get_if<KripkeModel>(&m)) out = to_json(announce(*km, f));
      else if (auto* fm = std::get_if<FOEpistemicModel>(&m)) out = to_json(announce(*fm, f));
      else throw std::runtime_error("--announce expects a kripke or fo model");
    } else if (aw_opt->count()) {
      if (world.empty()) throw std::runtime_error("--announce-whether needs --at");
      Formula f = parse(aw_text);
      if (auto* km = std::get_if<KripkeModel>(&m)) out = to_json(announce_whether(*km, f, world));
      else if (auto* fm = std::get_if<FOEpistemicModel>(&m))
        out = to_json(announce_whether(*fm, f, world));
      else throw std::runtime_error("--announce-whether expects a kripke or fo model");
    } else {
      if (world.empty()) throw std::runtime_error("--inspect needs --at");
      auto* fm = std::get_if<FOEpistemicModel>(&m);
      if (!fm) throw std::runtime_error("--inspect expects an fo model");
      out = to_json(inspect(*fm, inspect_const, world));
    }
    std::cout << out.dump(2) << "\n";
    return kTrue;
  }

  if (planc->parsed()) {
    AnyModel m = load_model(model_path);
    auto* lts = std::get_if<LtsModel>(&m);
    if (!lts) throw std::runtime_error("plan expects an lts model");
    KhResult r = eval_kh(*lts, parse(pre_text), parse(goal_text));
    if (as_json) {
      json j{{"known", r.holds}};
      if (r.witness) j["plan"] = *r.witness;
      std::cout << j.dump() << "\n";
    } else if (r.holds) {
      std::cout << plan_joined(*r.witness) << "\n";
    } else {
      std::cout << "no uniform plan\n";
    }
    return r.holds ? kTrue : kFalse;
  }

  if (transc->parsed()) {
    if (t_ncl_ml + t_ml_ncl + t_expand != 1)
      throw std::runtime_error("translate needs exactly one of --ncl-to-ml, --ml-to-ncl, "
                               "--expand-diamond");
    Formula f = parse(formula_text);
    Formula out = Formula::top();
    if (t_ncl_ml) out = ncl_to_ml(f);
    else if (t_ml_ncl) out = ml_to_ncl_reflexive(f);
    else {
      if (f.op() == Op::DiaC2)
        out = expand_binary_diamond(f.left(), f.right(), f.agent(), f.constant());
      else if (f.op() == Op::DiaC)
        out = expand_binary_diamond(f.left(), f.left(), f.agent(), f.constant());
      else
        throw std::runtime_error("--expand-diamond expects a dia{i,$c}(...) formula");
    }
    if (as_json) std::cout << json{{"formula", to_string(out)}}.dump() << "\n";
    else std::cout << to_string(out) << "\n";
    return kTrue;
  }

  if (axiomsc->parsed()) {
    SuiteReport report = run_suite(suite_id, budget);
    if (as_json) std::cout << report_json(report).dump(2) << "\n";
    else std::cout << report_text(report);
    return report.all_ok ? kTrue : kFalse;
  }

  return kError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
