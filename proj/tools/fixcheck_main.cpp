#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fixcheck/model.hpp"
#include "fixcheck/report.hpp"
#include "fixcheck/transition.hpp"

using namespace fixcheck;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool color_enabled() {
  const char* v = std::getenv("FIXCHECK_COLOR");
  return v && std::string(v) == "1";
}

Mode parse_mode(const std::string& s) {
  if (s == "least") return Mode::Least;
  if (s == "greatest") return Mode::Greatest;
  if (s == "post-below-least") return Mode::PostBelowLeast;
  if (s == "pre-above-greatest") return Mode::PreAboveGreatest;
  throw Error("unknown mode '" + s + "'");
}

int finish(const CheckReport& r, const std::string& json_path) {
  std::cout << report_text(r, color_enabled());
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw Error("cannot write '" + json_path + "'");
    out << report_json(r);
  }
  return report_exit_code(r);
}

struct ModelArgs {
  std::string file, diagram, candidate;

  Model model;
  DiagramPtr d;
  Valuation a;

  void load() {
    model = parse_model(slurp(file), file);
    auto dit = model.diagrams.find(diagram);
    if (dit == model.diagrams.end()) throw Error("no diagram named '" + diagram + "'");
    d = dit->second.diagram;
    auto vit = model.valuations.find(candidate);
    if (vit == model.valuations.end()) throw Error("no valuation named '" + candidate + "'");
    a = vit->second.valuation;
  }
};

CheckReport run_mode(const DiagramPtr& d, const Valuation& a, Mode mode) {
  switch (mode) {
    case Mode::Least: return check_least(d, a);
    case Mode::Greatest: return check_greatest(d, a);
    case Mode::PostBelowLeast: return check_post_below_least(d, a);
    case Mode::PreAboveGreatest: return check_pre_above_greatest(d, a);
  }
  throw Error("unreachable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixcheck: fixpoint checks for non-expansive functions over MV-chains"};
  app.require_subcommand(1);

  ModelArgs ma;
  std::string mode_s = "least", json_path, system_path, epsilon_s = "1/1000000000";
  int max_rounds = 100;

  auto add_model_opts = [&](CLI::App* cmd) {
    cmd->add_option("--file", ma.file, "model file")->required();
    cmd->add_option("--diagram", ma.diagram, "diagram name")->required();
    cmd->add_option("--candidate", ma.candidate, "candidate valuation name")->required();
  };

  auto* check = app.add_subcommand("check", "check a candidate fixpoint of a diagram");
  add_model_opts(check);
  check->add_option("--mode", mode_s, "least|greatest|post-below-least|pre-above-greatest");
  check->add_option("--json", json_path, "write the JSON report here");

  auto* eval = app.add_subcommand("eval", "evaluate a diagram at a valuation");
  add_model_opts(eval);

  auto* gfp = app.add_subcommand("gfp-approx", "greatest fixpoint of the approximation");
  add_model_opts(gfp);

  auto* iter = app.add_subcommand("iterate", "iterate to the least fixpoint from above");
  add_model_opts(iter);
  iter->add_option("--max-rounds", max_rounds, "detect-and-decrease round budget");
  iter->add_option("--epsilon", epsilon_s, "descent tolerance (rational)");
  iter->add_option("--json", json_path, "write the JSON report here");

  auto* term = app.add_subcommand("termination", "termination probabilities of a Markov chain");
  term->add_option("--system", system_path, ".mc file")->required();
  term->add_option("--candidate", ma.candidate, "ones|zeros|inline valuation name")->required();
  term->add_option("--mode", mode_s, "check mode");
  term->add_option("--json", json_path, "write the JSON report here");

  auto* metric = app.add_subcommand("metric", "behavioural metric of a transition system");
  metric->add_option("--system", system_path, ".lmc or .nts file")->required();
  metric->add_option("--candidate", ma.candidate, "ones|zeros|inline valuation name")->required();
  metric->add_option("--mode", mode_s, "check mode");
  metric->add_option("--json", json_path, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      ma.load();
      return finish(run_mode(ma.d, ma.a, parse_mode(mode_s)), json_path);
    }
    if (eval->parsed()) {
      ma.load();
      Valuation r = evaluate(*ma.d, ma.a);
      for (const auto& e : r.domain.elems)
        std::cout << e << ": " << rational_str(r.at(e).value) << "\n";
      return 0;
    }
    if (gfp->parsed()) {
      ma.load();
      Subset nu = gfp_approx(*ma.d, ma.a);
      std::cout << "{";
      bool first = true;
      for (const auto& e : nu.members) {
        std::cout << (first ? "" : ", ") << e;
        first = false;
      }
      std::cout << "}\n";
      return nu.empty() ? 0 : 1;
    }
    if (iter->parsed()) {
      ma.load();
      IterateResult r =
          iterate_to_least_from_above(ma.d, ma.a, max_rounds, parse_rational(epsilon_s));
      for (const auto& e : r.result.domain.elems)
        std::cout << e << ": " << rational_str(r.result.at(e).value) << "\n";
      std::cout << "rounds: " << r.rounds << "\n";
      std::cout << "reached least: " << (r.reached_least ? "yes" : "no") << "\n";
      if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
      return r.reached_least ? 0 : 2;
    }
    if (term->parsed()) {
      TransitionSystem ts = parse_transition_system(slurp(system_path), system_path);
      if (ts.kind != TransitionSystem::Kind::MC)
        throw Error("termination needs a .mc system");
      DiagramPtr d = build_termination_diagram(ts.mc);
      Valuation a = resolve_candidate(ts, ma.candidate, ts.mc.states);
      return finish(run_mode(d, a, parse_mode(mode_s)), json_path);
    }
    if (metric->parsed()) {
      TransitionSystem ts = parse_transition_system(slurp(system_path), system_path);
      Mode mode = parse_mode(mode_s);
      if (ts.kind == TransitionSystem::Kind::LMC) {
        DiagramPtr d = build_behavioural_diagram(ts.lmc);
        Valuation a =
            resolve_candidate(ts, ma.candidate, set_product(ts.lmc.states, ts.lmc.states));
        return finish(run_mode(d, a, mode), json_path);
      }
      if (ts.kind == TransitionSystem::Kind::NTS) {
        const NondetTS& sys = ts.nts;
        Valuation a = resolve_candidate(ts, ma.candidate, set_product(sys.states, sys.states));
        ApplyFn f = [&](const Valuation& v) {
          std::vector<MVValue> vals;
          for (const auto& x : sys.states.elems)
            for (const auto& y : sys.states.elems)
              vals.push_back(hausdorff_powerset(v, sys.succ.at(x), sys.succ.at(y)));
          return Valuation(v.domain, std::move(vals));
        };
        ApproxFn ap = [&](const Valuation& v, const Subset& u) { return w_approx(v, u, sys); };
        CheckReport r;
        if (mode == Mode::Least)
          r = check_least_fn(f, ap, a);
        else if (mode == Mode::PostBelowLeast)
          r = check_post_below_least_fn(f, ap, a);
        else
          throw Error("greatest-side modes are not supported for .nts systems");
        return finish(r, json_path);
      }
      throw Error("metric needs a .lmc or .nts system");
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  }
  return 3;
}
