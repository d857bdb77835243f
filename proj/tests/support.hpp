// shared helpers for the test binaries: deterministic rng, random values,
// and random well-typed diagram generators
#pragma once

#include <random>
#include <string>
#include <vector>

#include "fixcheck/diagram.hpp"
#include "fixcheck/valuation.hpp"

namespace fixcheck::testing {

struct Rng {
  std::mt19937_64 g;
  explicit Rng(uint64_t seed) : g(seed) {}

  int range(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(g);
  }
  bool flip() { return range(0, 1) == 1; }

  Rational rational(int max_den, long max_val) {
    int q = range(1, max_den);
    return Rational(range(0, static_cast<int>(max_val) * q), q);
  }

  MVValue value(const MVAlgebra& alg, int max_den = 8) {
    if (alg.kind == AlgebraKind::FiniteChain) return mv(alg, range(0, (int)alg.k));
    return mv(alg, rational(max_den, alg.k));
  }

  Valuation valuation(const FiniteSet& dom, const MVAlgebra& alg, int max_den = 8) {
    std::vector<MVValue> vals;
    for (size_t i = 0; i < dom.size(); ++i) vals.push_back(value(alg, max_den));
    return Valuation(dom, std::move(vals));
  }

  Subset subset(const FiniteSet& dom) {
    std::set<Element> m;
    for (const auto& e : dom.elems)
      if (flip()) m.insert(e);
    return Subset(dom, std::move(m));
  }

  // nonempty subset
  Subset subset1(const FiniteSet& dom) {
    auto s = subset(dom);
    if (s.members.empty() && dom.size()) s.members.insert(dom.elems[range(0, (int)dom.size() - 1)]);
    return s;
  }

  Element pick(const FiniteSet& s) { return s.elems[range(0, (int)s.size() - 1)]; }
};

struct NameGen {
  int n = 0;
  std::string prefix;
  explicit NameGen(std::string p = "g") : prefix(std::move(p)) {}
  Element fresh() { return prefix + std::to_string(n++); }
  FiniteSet fresh_set(int size) {
    std::vector<Element> e;
    for (int i = 0; i < size; ++i) e.push_back(fresh());
    return FiniteSet(std::move(e));
  }
};

inline Weights random_weights(Rng& rng, const FiniteSet& dom, const MVAlgebra& alg) {
  Weights w;
  for (const auto& e : dom.elems) w[e] = rng.value(alg).value;
  return w;
}

inline std::set<std::pair<Element, Element>> random_relation(Rng& rng, const FiniteSet& in, const FiniteSet& out) {
  std::set<std::pair<Element, Element>> r;
  for (const auto& a : in.elems)
    for (const auto& b : out.elems)
      if (rng.flip()) r.insert({a, b});
  return r;
}

// random block with the given input carrier; output carrier drawn from `names`
// (Expect is excluded: it needs the real unit interval and a distribution set)
inline DiagramPtr random_block_atom(Rng& rng, const MVAlgebra& alg, const FiniteSet& in,
                                    NameGen& names) {
  int choice = rng.range(0, in.size() ? 4 : 0);
  if (!in.size() || choice == 0) {
    FiniteSet out = names.fresh_set(rng.range(1, 3));
    auto k = d_block(make_const(rng.valuation(out, alg), alg));
    if (!in.size()) return k;
    // keep the input carrier: discharge it in parallel with the constant
    return d_tensor(d_disch(in, alg), k);
  }
  if (choice == 1) {
    FiniteSet out = names.fresh_set(rng.range(1, 3));
    std::map<Element, Element> g;
    for (const auto& z : out.elems) g[z] = rng.pick(in);
    return d_block(make_reindex(in, out, g, alg));
  }
  if (choice == 2 || choice == 3) {
    FiniteSet out = names.fresh_set(rng.range(1, 3));
    auto r = random_relation(rng, in, out);
    return d_block(choice == 2 ? make_minrel(in, out, r, alg) : make_maxrel(in, out, r, alg));
  }
  Valuation w = rng.valuation(in, alg);
  return d_block(rng.flip() ? make_add(w) : make_sub(w));
}

// random well-typed diagram with the given input carrier; carriers stay
// duplicate-free so the diagrams are usable through the keyed api too
inline DiagramPtr random_diagram(Rng& rng, const MVAlgebra& alg, const FiniteSet& in, int depth,
                                 NameGen& names) {
  if (depth <= 0) return random_block_atom(rng, alg, in, names);
  switch (rng.range(0, 4)) {
    case 0:
      return random_block_atom(rng, alg, in, names);
    case 1: {  // sequential composition through the intermediate carrier
      auto l = random_diagram(rng, alg, in, depth - 1, names);
      FiniteSet mid(l->output);
      auto r = random_diagram(rng, alg, mid, depth - 1, names);
      return d_seq(l, r);
    }
    case 2: {  // tensor over a split of the input
      if (in.size() < 2) return random_diagram(rng, alg, in, depth - 1, names);
      int cut = rng.range(1, (int)in.size() - 1);
      FiniteSet a(std::vector<Element>(in.elems.begin(), in.elems.begin() + cut));
      FiniteSet b(std::vector<Element>(in.elems.begin() + cut, in.elems.end()));
      return d_tensor(random_diagram(rng, alg, a, depth - 1, names),
                      random_diagram(rng, alg, b, depth - 1, names));
    }
    case 3: {  // symmetry then recurse
      if (in.size() < 2) return random_diagram(rng, alg, in, depth - 1, names);
      int cut = rng.range(1, (int)in.size() - 1);
      FiniteSet a(std::vector<Element>(in.elems.begin(), in.elems.begin() + cut));
      FiniteSet b(std::vector<Element>(in.elems.begin() + cut, in.elems.end()));
      auto sym = d_sym(a, b, alg);
      FiniteSet mid(sym->output);
      return d_seq(sym, random_diagram(rng, alg, mid, depth - 1, names));
    }
    default: {  // discharge part of the input
      if (in.size() < 2) return random_diagram(rng, alg, in, depth - 1, names);
      int cut = rng.range(1, (int)in.size() - 1);
      FiniteSet a(std::vector<Element>(in.elems.begin(), in.elems.begin() + cut));
      FiniteSet b(std::vector<Element>(in.elems.begin() + cut, in.elems.end()));
      auto d = d_tensor(random_diagram(rng, alg, a, depth - 1, names), d_disch(b, alg));
      FiniteSet mid(d->output);
      return d_seq(d, random_diagram(rng, alg, mid, depth - 1, names));
    }
  }
}

// random endo block on carrier s
inline DiagramPtr random_endo_atom(Rng& rng, const MVAlgebra& alg, const FiniteSet& s) {
  switch (rng.range(0, 3)) {
    case 0: {
      std::map<Element, Element> g;
      for (const auto& z : s.elems) g[z] = rng.pick(s);
      return d_block(make_reindex(s, s, g, alg));
    }
    case 1:
    case 2: {
      auto r = random_relation(rng, s, s);
      return d_block(rng.flip() ? make_minrel(s, s, r, alg) : make_maxrel(s, s, r, alg));
    }
    default: {
      Valuation w = rng.valuation(s, alg);
      return d_block(rng.flip() ? make_add(w) : make_sub(w));
    }
  }
}

// random endo diagram on carrier s (input == output == s as a set)
inline DiagramPtr random_endo_diagram(Rng& rng, const MVAlgebra& alg, const FiniteSet& s,
                                      int depth) {
  if (depth <= 0) return random_endo_atom(rng, alg, s);
  switch (rng.range(0, 2)) {
    case 0:
      return random_endo_atom(rng, alg, s);
    case 1:
      return d_seq(random_endo_diagram(rng, alg, s, depth - 1),
                   random_endo_diagram(rng, alg, s, depth - 1));
    default: {
      if (s.size() < 2) return random_endo_atom(rng, alg, s);
      int cut = rng.range(1, (int)s.size() - 1);
      FiniteSet a(std::vector<Element>(s.elems.begin(), s.elems.begin() + cut));
      FiniteSet b(std::vector<Element>(s.elems.begin() + cut, s.elems.end()));
      return d_tensor(random_endo_diagram(rng, alg, a, depth - 1),
                      random_endo_diagram(rng, alg, b, depth - 1));
    }
  }
}

}  // namespace fixcheck::testing
