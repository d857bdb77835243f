#include "fixcheck/transition.hpp"

#include <sstream>

namespace fixcheck {

const FiniteSet& TransitionSystem::states() const {
  switch (kind) {
    case Kind::MC: return mc.states;
    case Kind::LMC: return lmc.states;
    case Kind::NTS: return nts.states;
  }
  throw Error("unreachable");
}

namespace {

std::string kind_of(const std::string& filename) {
  auto dot = filename.rfind('.');
  std::string ext = dot == std::string::npos ? "" : filename.substr(dot);
  if (ext == ".mc" || ext == ".lmc" || ext == ".nts") return ext.substr(1);
  throw Error(filename + ": unknown transition-system extension (expected .mc, .lmc or .nts)");
}

struct LineParser {
  std::string file;
  int line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(file + ":" + std::to_string(line_no) + ": " + msg);
  }

  std::vector<std::string> split(const std::string& line) const {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) {
      if (w[0] == '#') break;
      out.push_back(w);
    }
    return out;
  }
};

}  // namespace

TransitionSystem parse_transition_system(const std::string& text, const std::string& filename) {
  std::string kind = kind_of(filename);
  TransitionSystem ts;
  ts.kind = kind == "mc"    ? TransitionSystem::Kind::MC
            : kind == "lmc" ? TransitionSystem::Kind::LMC
                            : TransitionSystem::Kind::NTS;

  FiniteSet states;
  std::set<Element> terminal;
  std::map<Element, std::string> labels;
  std::map<Element, Weights> edges;
  std::map<Element, std::set<Element>> succ;

  LineParser lp{filename};
  std::istringstream in(text);
  std::string line;
  auto known = [&](const std::string& s) {
    if (!states.contains(s)) lp.fail("unknown state '" + s + "'");
  };
  while (std::getline(in, line)) {
    ++lp.line_no;
    auto w = lp.split(line);
    if (w.empty()) continue;
    if (w[0] == "states") {
      if (states.size()) lp.fail("duplicate states line");
      states = FiniteSet(std::vector<Element>(w.begin() + 1, w.end()));
      if (!states.size()) lp.fail("empty states line");
    } else if (w[0] == "terminal") {
      if (kind != "mc") lp.fail("'terminal' is only valid in .mc files");
      for (size_t i = 1; i < w.size(); ++i) {
        known(w[i]);
        terminal.insert(w[i]);
      }
    } else if (w[0] == "label") {
      if (kind != "lmc") lp.fail("'label' is only valid in .lmc files");
      if (w.size() != 3) lp.fail("expected: label STATE ATOM");
      known(w[1]);
      labels[w[1]] = w[2];
    } else if (w[0] == "edge") {
      if (w.size() < 4 || w[2] != "->") lp.fail("expected: edge S -> T [prob P]");
      known(w[1]);
      known(w[3]);
      if (kind == "nts") {
        if (w.size() != 4) lp.fail("no probabilities in .nts files");
        succ[w[1]].insert(w[3]);
      } else {
        if (w.size() != 6 || w[4] != "prob") lp.fail("expected: edge S -> T prob P");
        Rational p = parse_rational(w[5]);
        if (p <= 0 || p > 1) lp.fail("edge probability must be in (0,1]");
        if (edges[w[1]].count(w[3])) lp.fail("duplicate edge");
        edges[w[1]][w[3]] = p;
      }
    } else if (w[0] == "valuation") {
      // valuation NAME { key: value, ... }  (may span the rest of the line)
      if (w.size() < 2) lp.fail("expected: valuation NAME { ... }");
      std::string rest;
      for (size_t i = 2; i < w.size(); ++i) rest += w[i] + " ";
      auto lb = rest.find('{');
      auto rb = rest.rfind('}');
      if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        lp.fail("expected a single-line { ... } body");
      std::map<Element, Rational> vals;
      std::string body = rest.substr(lb + 1, rb - lb - 1);
      // split on commas at parenthesis depth 0 (pair keys contain commas)
      std::vector<std::string> entries;
      std::string cur;
      int depth = 0;
      for (char c : body) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
          entries.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (cur.find_first_not_of(" \t") != std::string::npos) entries.push_back(cur);
      for (const std::string& entry : entries) {
        auto colon = entry.rfind(':');
        if (colon == std::string::npos) lp.fail("expected KEY: VALUE entries");
        auto trim = [](std::string s) {
          size_t a = s.find_first_not_of(" \t");
          size_t b = s.find_last_not_of(" \t");
          return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(entry.substr(0, colon));
        std::string val = trim(entry.substr(colon + 1));
        if (key.empty()) lp.fail("empty key");
        if (vals.count(key)) lp.fail("duplicate key '" + key + "'");
        vals[key] = parse_rational(val);
      }
      if (ts.valuations.count(w[1])) lp.fail("duplicate valuation '" + w[1] + "'");
      ts.valuations[w[1]] = std::move(vals);
    } else {
      lp.fail("unknown directive '" + w[0] + "'");
    }
  }
  lp.line_no = 0;
  if (!states.size()) throw Error(filename + ": missing states line");

  if (kind == "nts") {
    ts.nts.states = states;
    for (const auto& s : states.elems) ts.nts.succ[s];  // default empty successor set
    for (auto& [s, t] : succ) ts.nts.succ[s] = std::move(t);
    return ts;
  }

  std::map<Element, Distribution> next;
  for (const auto& s : states.elems) {
    auto it = edges.find(s);
    if (it == edges.end()) {
      if (kind == "mc" && terminal.count(s)) continue;
      throw Error(filename + ": state '" + s + "' has no outgoing edges");
    }
    if (kind == "mc" && terminal.count(s))
      throw Error(filename + ": terminal state '" + s + "' has outgoing edges");
    next.emplace(s, Distribution(states, it->second));
  }
  if (kind == "mc") {
    ts.mc.states = states;
    ts.mc.terminal = terminal;
    ts.mc.next = std::move(next);
  } else {
    ts.lmc.states = states;
    for (const auto& s : states.elems) {
      auto it = labels.find(s);
      ts.lmc.labels[s] = it == labels.end() ? "" : it->second;
    }
    ts.lmc.next = std::move(next);
  }
  return ts;
}

Valuation resolve_candidate(const TransitionSystem& ts, const std::string& name,
                            const FiniteSet& carrier) {
  MVAlgebra alg = real_interval(1);
  if (name == "ones") return ones(carrier, alg);
  if (name == "zeros") return zeros(carrier, alg);
  auto it = ts.valuations.find(name);
  if (it == ts.valuations.end())
    throw Error("unknown candidate '" + name + "' (not ones/zeros or an inline valuation)");
  std::vector<MVValue> vals;
  for (const auto& e : carrier.elems) {
    auto v = it->second.find(e);
    vals.push_back(v == it->second.end() ? mv_bottom(alg) : mv(alg, v->second));
  }
  for (const auto& [k, v] : it->second)
    if (!carrier.contains(k)) throw Error("valuation key '" + k + "' is not in the carrier");
  return Valuation(carrier, std::move(vals));
}

}  // namespace fixcheck
