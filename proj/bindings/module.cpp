// python bindings for the main operations: model checks, transition-system
// frontends, and the metric liftings. exact rationals cross the boundary as
// canonical "p/q" strings.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "fixcheck/liftings.hpp"
#include "fixcheck/model.hpp"
#include "fixcheck/report.hpp"
#include "fixcheck/transition.hpp"

namespace py = pybind11;
using namespace fixcheck;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Mode parse_mode(const std::string& s) {
  if (s == "least") return Mode::Least;
  if (s == "greatest") return Mode::Greatest;
  if (s == "post-below-least") return Mode::PostBelowLeast;
  if (s == "pre-above-greatest") return Mode::PreAboveGreatest;
  throw Error("unknown mode '" + s + "'");
}

py::dict valuation_dict(const Valuation& v) {
  py::dict d;
  for (const auto& e : v.domain.elems) d[py::str(e)] = rational_str(v.at(e).value);
  return d;
}

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["mode"] = mode_str(r.mode);
  d["is_fixpoint"] = r.is_fixpoint;
  d["verdict"] = verdict_str(r.verdict);
  d["witness"] = std::vector<Element>(r.witness.begin(), r.witness.end());
  d["suggested_delta"] =
      r.suggested_delta ? py::object(py::str(rational_str(r.suggested_delta->value)))
                        : py::object(py::none());
  d["corrected"] = r.corrected ? py::object(valuation_dict(*r.corrected)) : py::object(py::none());
  py::list iters;
  for (const auto& s : r.iterations) iters.append(std::vector<Element>(s.begin(), s.end()));
  d["iterations"] = iters;
  if (!r.note.empty()) d["note"] = r.note;
  return d;
}

struct LoadedModel {
  Model model;
  DiagramPtr diagram;
  Valuation candidate;
};

LoadedModel load_model(const std::string& path, const std::string& diagram,
                       const std::string& candidate) {
  LoadedModel lm{parse_model(slurp(path), path)};
  auto dit = lm.model.diagrams.find(diagram);
  if (dit == lm.model.diagrams.end()) throw Error("no diagram named '" + diagram + "'");
  lm.diagram = dit->second.diagram;
  auto vit = lm.model.valuations.find(candidate);
  if (vit == lm.model.valuations.end()) throw Error("no valuation named '" + candidate + "'");
  lm.candidate = vit->second.valuation;
  return lm;
}

CheckReport dispatch(const DiagramPtr& d, const Valuation& a, Mode mode) {
  switch (mode) {
    case Mode::Least: return check_least(d, a);
    case Mode::Greatest: return check_greatest(d, a);
    case Mode::PostBelowLeast: return check_post_below_least(d, a);
    case Mode::PreAboveGreatest: return check_pre_above_greatest(d, a);
  }
  throw Error("unreachable");
}

Distribution make_distribution(const FiniteSet& base, const std::map<Element, std::string>& w) {
  Weights weights;
  for (const auto& [e, v] : w) weights[e] = parse_rational(v);
  return Distribution(base, weights);
}

FiniteSet union_base(const std::map<std::pair<Element, Element>, std::string>& d,
                     std::set<Element> s) {
  for (const auto& [pr, v] : d) {
    s.insert(pr.first);
    s.insert(pr.second);
  }
  return FiniteSet(std::vector<Element>(s.begin(), s.end()));
}

std::set<Element> key_set(const std::map<Element, std::string>& p1,
                          const std::map<Element, std::string>& p2) {
  std::set<Element> s;
  for (const auto& [e, v] : p1) s.insert(e);
  for (const auto& [e, v] : p2) s.insert(e);
  return s;
}

Valuation pair_valuation(const FiniteSet& base,
                         const std::map<std::pair<Element, Element>, std::string>& d) {
  FiniteSet dom = set_product(base, base);
  const MVAlgebra alg = real_interval(1);
  std::vector<MVValue> vals(dom.size(), mv_bottom(alg));
  for (const auto& [pr, v] : d) {
    Element e = pair_element(pr.first, pr.second);
    if (!dom.contains(e)) throw Error("distance key " + e + " is outside the base set");
    vals[dom.index_of(e)] = mv(alg, parse_rational(v));
  }
  return Valuation(dom, std::move(vals));
}

}  // namespace

PYBIND11_MODULE(_fixcheck, m) {
  m.doc() = "fixpoint checks for non-expansive functions over MV-chains";

  py::register_exception<Error>(m, "FixcheckError");

  m.def(
      "check_model",
      [](const std::string& path, const std::string& diagram, const std::string& candidate,
         const std::string& mode) {
        auto lm = load_model(path, diagram, candidate);
        return report_dict(dispatch(lm.diagram, lm.candidate, parse_mode(mode)));
      },
      py::arg("path"), py::arg("diagram"), py::arg("candidate"), py::arg("mode") = "least",
      "Check a candidate fixpoint of a named diagram in a model file.");

  m.def(
      "eval_model",
      [](const std::string& path, const std::string& diagram, const std::string& candidate) {
        auto lm = load_model(path, diagram, candidate);
        return valuation_dict(evaluate(*lm.diagram, lm.candidate));
      },
      py::arg("path"), py::arg("diagram"), py::arg("candidate"),
      "Evaluate a named diagram at a named valuation.");

  m.def(
      "iterate_model",
      [](const std::string& path, const std::string& diagram, const std::string& candidate,
         int max_rounds, const std::string& epsilon) {
        auto lm = load_model(path, diagram, candidate);
        auto r =
            iterate_to_least_from_above(lm.diagram, lm.candidate, max_rounds,
                                        parse_rational(epsilon));
        py::dict d;
        d["result"] = valuation_dict(r.result);
        d["reached_least"] = r.reached_least;
        d["rounds"] = r.rounds;
        d["residual"] = rational_str(r.residual);
        if (!r.note.empty()) d["note"] = r.note;
        return d;
      },
      py::arg("path"), py::arg("diagram"), py::arg("candidate"), py::arg("max_rounds") = 100,
      py::arg("epsilon") = "1/1000000000",
      "Iterate to the least fixpoint from a pre-fixpoint above it.");

  m.def(
      "check_termination",
      [](const std::string& path, const std::string& candidate, const std::string& mode) {
        auto ts = parse_transition_system(slurp(path), path);
        if (ts.kind != TransitionSystem::Kind::MC) throw Error("termination needs a .mc system");
        auto d = build_termination_diagram(ts.mc);
        auto a = resolve_candidate(ts, candidate, ts.mc.states);
        return report_dict(dispatch(d, a, parse_mode(mode)));
      },
      py::arg("path"), py::arg("candidate"), py::arg("mode") = "least",
      "Check a candidate termination-probability valuation of a .mc file.");

  m.def(
      "check_metric",
      [](const std::string& path, const std::string& candidate, const std::string& mode) {
        auto ts = parse_transition_system(slurp(path), path);
        Mode md = parse_mode(mode);
        if (ts.kind == TransitionSystem::Kind::LMC) {
          auto d = build_behavioural_diagram(ts.lmc);
          auto a = resolve_candidate(ts, candidate, set_product(ts.lmc.states, ts.lmc.states));
          return report_dict(dispatch(d, a, md));
        }
        if (ts.kind != TransitionSystem::Kind::NTS) throw Error("metric needs .lmc or .nts");
        const NondetTS& sys = ts.nts;
        auto a = resolve_candidate(ts, candidate, set_product(sys.states, sys.states));
        ApplyFn f = [&sys](const Valuation& v) {
          std::vector<MVValue> vals;
          for (const auto& x : sys.states.elems)
            for (const auto& y : sys.states.elems)
              vals.push_back(hausdorff_powerset(v, sys.succ.at(x), sys.succ.at(y)));
          return Valuation(v.domain, std::move(vals));
        };
        ApproxFn ap = [&sys](const Valuation& v, const Subset& u) { return w_approx(v, u, sys); };
        if (md == Mode::Least) return report_dict(check_least_fn(f, ap, a));
        if (md == Mode::PostBelowLeast) return report_dict(check_post_below_least_fn(f, ap, a));
        throw Error("greatest-side modes are not supported for .nts systems");
      },
      py::arg("path"), py::arg("candidate"), py::arg("mode") = "least",
      "Check a candidate behavioural metric of a .lmc or .nts file.");

  m.def(
      "wasserstein",
      [](const std::map<std::pair<Element, Element>, std::string>& d,
         const std::map<Element, std::string>& p1, const std::map<Element, std::string>& p2) {
        FiniteSet base = union_base(d, key_set(p1, p2));
        auto dv = pair_valuation(base, d);
        return rational_str(
            wasserstein_distribution(dv, make_distribution(base, p1), make_distribution(base, p2))
                .value);
      },
      py::arg("distance"), py::arg("p1"), py::arg("p2"),
      "Exact Wasserstein distance of two distributions under a ground distance.");

  m.def(
      "hausdorff",
      [](const std::map<std::pair<Element, Element>, std::string>& d,
         const std::set<Element>& s1, const std::set<Element>& s2) {
        std::set<Element> all = s1;
        all.insert(s2.begin(), s2.end());
        FiniteSet base = union_base(d, std::move(all));
        return rational_str(hausdorff_powerset(pair_valuation(base, d), s1, s2).value);
      },
      py::arg("distance"), py::arg("s1"), py::arg("s2"),
      "Hausdorff distance of two finite sets under a ground distance.");

  m.def(
      "transport_vertices",
      [](const std::map<Element, std::string>& p1, const std::map<Element, std::string>& p2) {
        auto keys = key_set(p1, p2);
        FiniteSet base(std::vector<Element>(keys.begin(), keys.end()));
        std::vector<std::map<std::pair<Element, Element>, std::string>> out;
        for (const auto& t :
             transport_vertices(make_distribution(base, p1), make_distribution(base, p2))) {
          std::map<std::pair<Element, Element>, std::string> v;
          for (const auto& [pr, w] : t) v[pr] = rational_str(w);
          out.push_back(std::move(v));
        }
        return out;
      },
      py::arg("p1"), py::arg("p2"),
      "All vertices of the transportation polytope of two distributions.");

  m.def(
      "model_roundtrip",
      [](const std::string& path) { return print_model(parse_model(slurp(path), path)); },
      py::arg("path"), "Parse a model file and return its canonical printed form.");
}
