#include "fixcheck/liftings.hpp"

#include <algorithm>

#include "fixcheck/lp.hpp"

namespace fixcheck {

Distribution::Distribution(FiniteSet b, Weights w) : base(std::move(b)), weights(std::move(w)) {
  Rational total = 0;
  for (auto it = weights.begin(); it != weights.end();) {
    if (!base.contains(it->first))
      throw Error("distribution weight on '" + it->first + "' outside its base");
    if (it->second < 0) throw Error("negative weight on '" + it->first + "'");
    total += it->second;
    if (it->second == 0)
      it = weights.erase(it);
    else
      ++it;
  }
  if (total != 1) throw Error("distribution weights sum to " + rational_str(total));
}

Rational Distribution::at(const Element& e) const {
  auto it = weights.find(e);
  return it == weights.end() ? Rational(0) : it->second;
}

std::set<Element> Distribution::support() const {
  std::set<Element> s;
  for (const auto& [e, w] : weights) s.insert(e);
  return s;
}

static const MVAlgebra kUnit = real_interval(1);

static void require_unit(const Valuation& d) {
  if (d.values.empty() || d.algebra() != kUnit)
    throw Error("Wasserstein machinery needs the real unit interval algebra");
}

namespace {

// transport LP over the support product; columns ordered row-major
struct TransportLp {
  std::vector<Element> rows, cols;
  std::vector<std::pair<Element, Element>> vars;

  TransportLp(const Distribution& p1, const Distribution& p2,
              const std::set<std::pair<Element, Element>>* allowed) {
    for (const auto& [e, w] : p1.weights) rows.push_back(e);
    for (const auto& [e, w] : p2.weights) cols.push_back(e);
    for (const auto& r : rows)
      for (const auto& c : cols)
        if (!allowed || allowed->count({r, c})) vars.push_back({r, c});
  }

  LpResult solve(const Distribution& p1, const Distribution& p2, const Valuation& d) const {
    size_t m = rows.size() + cols.size(), n = vars.size();
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n, 0));
    std::vector<Rational> b(m), c(n);
    for (size_t j = 0; j < n; ++j) {
      size_t ri = size_t(std::find(rows.begin(), rows.end(), vars[j].first) - rows.begin());
      size_t ci = size_t(std::find(cols.begin(), cols.end(), vars[j].second) - cols.begin());
      A[ri][j] = 1;
      A[rows.size() + ci][j] = 1;
      c[j] = d.at(pair_element(vars[j].first, vars[j].second)).value;
    }
    for (size_t i = 0; i < rows.size(); ++i) b[i] = p1.at(rows[i]);
    for (size_t i = 0; i < cols.size(); ++i) b[rows.size() + i] = p2.at(cols[i]);
    return lp_minimize(std::move(A), std::move(b), std::move(c));
  }
};

}  // namespace

MVValue wasserstein_distribution(const Valuation& d, const Distribution& p1,
                                 const Distribution& p2) {
  require_unit(d);
  TransportLp lp(p1, p2, nullptr);
  LpResult r = lp.solve(p1, p2, d);
  if (!r.feasible) throw Error("transport LP infeasible (impossible for full support)");
  return mv(kUnit, r.value);
}

namespace {

struct VertexEnum {
  std::set<PairCoupling> seen;
  long budget = 2000000;

  void run(std::vector<std::pair<Element, Rational>> supply,
           std::vector<std::pair<Element, Rational>> demand, PairCoupling partial) {
    if (supply.empty() && demand.empty()) {
      seen.insert(partial);
      return;
    }
    if (supply.empty() || demand.empty())
      throw Error("transport vertex enumeration: unbalanced marginals");
    for (size_t i = 0; i < supply.size(); ++i) {
      for (size_t j = 0; j < demand.size(); ++j) {
        if (--budget < 0)
          throw Error("transport vertex enumeration exceeded its work budget");
        auto s = supply;
        auto t = demand;
        PairCoupling p = partial;
        Rational amount = std::min(s[i].second, t[j].second);
        p[{s[i].first, t[j].first}] += amount;
        bool drop_s = s[i].second == amount, drop_t = t[j].second == amount;
        s[i].second -= amount;
        t[j].second -= amount;
        if (drop_s) s.erase(s.begin() + long(i));
        if (drop_t) t.erase(t.begin() + long(j));
        run(std::move(s), std::move(t), std::move(p));
      }
    }
  }
};

}  // namespace

std::vector<PairCoupling> transport_vertices(const Distribution& p1, const Distribution& p2,
                                             size_t support_cap) {
  if (p1.weights.size() > support_cap || p2.weights.size() > support_cap)
    throw Error("transport vertex enumeration: support larger than the configured cap of " +
                std::to_string(support_cap));
  VertexEnum ve;
  std::vector<std::pair<Element, Rational>> supply(p1.weights.begin(), p1.weights.end());
  std::vector<std::pair<Element, Rational>> demand(p2.weights.begin(), p2.weights.end());
  ve.run(std::move(supply), std::move(demand), {});
  std::vector<PairCoupling> out(ve.seen.begin(), ve.seen.end());
  return out;
}

bool lifting_member_distribution(const PairCoupling& t, const Valuation& d,
                                 const Subset& yprime) {
  require_unit(d);
  for (const auto& [pr, w] : t) {
    if (w == 0) continue;
    if (!yprime.contains(pair_element(pr.first, pr.second))) return false;
  }
  return true;
}

bool lifting_member_powerset(const SetCoupling& t, const Valuation& d, const Subset& yprime) {
  // some pair inside Y' must strictly dominate every pair outside it
  Rational outside_max = -1;
  for (const auto& [a, b] : t) {
    Element e = pair_element(a, b);
    if (!yprime.contains(e) && d.at(e).value > outside_max) outside_max = d.at(e).value;
  }
  for (const auto& [a, b] : t) {
    Element e = pair_element(a, b);
    if (yprime.contains(e) && d.at(e).value > outside_max) return true;
  }
  return false;
}

MVValue dist_lifting_value(const Valuation& d, const PairCoupling& t) {
  require_unit(d);
  Rational s = 0;
  for (const auto& [pr, w] : t) s += w * d.at(pair_element(pr.first, pr.second)).value;
  return mv(kUnit, s);
}

MVValue pow_lifting_value(const Valuation& d, const SetCoupling& t) {
  MVValue m = mv_bottom(d.algebra());
  for (const auto& [a, b] : t) m = mv_join(m, d.at(pair_element(a, b)));
  return m;
}

MVValue hausdorff_powerset(const Valuation& d, const std::set<Element>& s1,
                           const std::set<Element>& s2) {
  const MVAlgebra& alg = d.algebra();
  if (s1.empty() && s2.empty()) return mv_bottom(alg);
  if (s1.empty() || s2.empty()) return mv_top(alg);
  auto directed = [&](const std::set<Element>& from, const std::set<Element>& to, bool flip) {
    MVValue outer = mv_bottom(alg);
    for (const auto& a : from) {
      MVValue inner = mv_top(alg);
      for (const auto& b : to)
        inner = mv_meet(inner, d.at(flip ? pair_element(b, a) : pair_element(a, b)));
      outer = mv_join(outer, inner);
    }
    return outer;
  };
  return mv_join(directed(s1, s2, false), directed(s2, s1, true));
}

std::vector<SetCoupling> powerset_couplings(const std::set<Element>& s1,
                                            const std::set<Element>& s2, size_t cap) {
  if (s1.empty() && s2.empty()) return {SetCoupling{}};
  if (s1.empty() || s2.empty()) return {};
  std::vector<std::pair<Element, Element>> prod;
  for (const auto& a : s1)
    for (const auto& b : s2) prod.push_back({a, b});
  if (prod.size() > cap)
    throw Error("powerset coupling enumeration: product larger than the cap of " +
                std::to_string(cap));
  std::vector<SetCoupling> out;
  for (size_t mask = 1; mask < (size_t(1) << prod.size()); ++mask) {
    SetCoupling t;
    std::set<Element> pa, pb;
    for (size_t i = 0; i < prod.size(); ++i)
      if (mask & (size_t(1) << i)) {
        t.insert(prod[i]);
        pa.insert(prod[i].first);
        pb.insert(prod[i].second);
      }
    if (pa == s1 && pb == s2) out.push_back(std::move(t));
  }
  return out;
}

Subset w_approx(const Valuation& d, const Subset& yprime, const LabelledMarkovChain& sys) {
  require_unit(d);
  FiniteSet pairs = set_product(sys.states, sys.states);
  for (const auto& e : yprime.members)
    if (d.at(e).value == 0) throw Error("approximation subset must lie inside the nonzero support");
  std::set<std::pair<Element, Element>> allowed;
  for (const auto& x : sys.states.elems)
    for (const auto& y : sys.states.elems)
      if (yprime.contains(pair_element(x, y))) allowed.insert({x, y});
  std::set<Element> out;
  for (const auto& x : sys.states.elems) {
    for (const auto& y : sys.states.elems) {
      if (sys.labels.at(x) != sys.labels.at(y)) continue;  // constant branch, nothing to gain
      const Distribution& p1 = sys.next.at(x);
      const Distribution& p2 = sys.next.at(y);
      TransportLp full(p1, p2, nullptr);
      LpResult opt = full.solve(p1, p2, d);
      if (!opt.feasible) throw Error("transport LP infeasible");
      if (opt.value == 0) continue;  // outside the nonzero support of W(d)
      TransportLp restricted(p1, p2, &allowed);
      LpResult r = restricted.solve(p1, p2, d);
      if (r.feasible && r.value == opt.value) out.insert(pair_element(x, y));
    }
  }
  return Subset(pairs, std::move(out));
}

Subset w_approx(const Valuation& d, const Subset& yprime, const NondetTS& sys) {
  FiniteSet pairs = set_product(sys.states, sys.states);
  for (const auto& e : yprime.members)
    if (d.at(e).value == 0) throw Error("approximation subset must lie inside the nonzero support");
  std::set<Element> out;
  for (const auto& x : sys.states.elems) {
    for (const auto& y : sys.states.elems) {
      const auto& s1 = sys.succ.at(x);
      const auto& s2 = sys.succ.at(y);
      MVValue h = hausdorff_powerset(d, s1, s2);
      if (h.value == 0) continue;
      for (const auto& t : powerset_couplings(s1, s2)) {
        if (pow_lifting_value(d, t).value != h.value) continue;
        if (lifting_member_powerset(t, d, yprime)) {
          out.insert(pair_element(x, y));
          break;
        }
      }
    }
  }
  return Subset(pairs, std::move(out));
}

template <typename Sys>
static Subset gfp_w(const Valuation& d, const Sys& sys) {
  std::set<Element> cur = support_nonzero(d).members;
  for (;;) {
    Subset next = w_approx(d, Subset(d.domain, cur), sys);
    std::set<Element> n;
    for (const auto& e : next.members)
      if (cur.count(e)) n.insert(e);
    if (n == cur) return Subset(d.domain, std::move(cur));
    cur = std::move(n);
  }
}

Subset gfp_w_approx(const Valuation& d, const LabelledMarkovChain& sys) { return gfp_w(d, sys); }
Subset gfp_w_approx(const Valuation& d, const NondetTS& sys) { return gfp_w(d, sys); }

Element tag_l(const Element& e) { return "l" + e; }
Element tag_r(const Element& e) { return "r" + e; }

namespace {

struct BehaviouralParts {
  FiniteSet pairs;
  Block expect, minrel, reindex;
};

std::pair<Distribution, Distribution> coupling_marginals(const PairCoupling& t,
                                                         const FiniteSet& states) {
  Weights w1, w2;
  for (const auto& [pr, w] : t) {
    w1[pr.first] += w;
    w2[pr.second] += w;
  }
  return {Distribution(states, std::move(w1)), Distribution(states, std::move(w2))};
}

BehaviouralParts behavioural_parts(const LabelledMarkovChain& lmc) {
  FiniteSet pairs = set_product(lmc.states, lmc.states);

  // vertex couplings over all equal-label pairs, deduplicated in a
  // deterministic first-seen order
  std::vector<PairCoupling> vertices;
  std::set<PairCoupling> vertex_set;
  for (const auto& x : lmc.states.elems)
    for (const auto& y : lmc.states.elems) {
      if (lmc.labels.at(x) != lmc.labels.at(y)) continue;
      for (const auto& v : transport_vertices(lmc.next.at(x), lmc.next.at(y)))
        if (vertex_set.insert(v).second) vertices.push_back(v);
    }
  std::vector<Element> dnames;
  std::map<Element, Weights> dists;
  for (size_t i = 0; i < vertices.size(); ++i) {
    Element name = "t" + std::to_string(i);
    dnames.push_back(name);
    Weights w;
    for (const auto& [pr, val] : vertices[i]) w[pair_element(pr.first, pr.second)] = val;
    dists[name] = std::move(w);
  }
  FiniteSet dset(dnames);

  // one marginal-pair element per distinct (eta(x), eta(y))
  std::vector<Element> wnames;
  std::map<std::pair<Element, Element>, Element> wof;  // keyed by canonical marginal pair
  std::map<Element, Element> reindex_map;              // r(x,y) -> w element
  auto canon = [&](const Distribution& p) {
    std::string s;
    for (const auto& [e, w] : p.weights) s += e + ":" + rational_str(w) + ";";
    return s;
  };
  std::map<std::pair<std::string, std::string>, Element> seen;
  for (const auto& x : lmc.states.elems)
    for (const auto& y : lmc.states.elems) {
      auto key = std::make_pair(canon(lmc.next.at(x)), canon(lmc.next.at(y)));
      auto it = seen.find(key);
      if (it == seen.end()) {
        Element name = "u" + std::to_string(wnames.size());
        wnames.push_back(name);
        it = seen.emplace(key, name).first;
      }
      reindex_map[tag_r(pair_element(x, y))] = it->second;
    }
  FiniteSet wset(wnames);

  // relate each vertex coupling to its marginal pair
  std::set<std::pair<Element, Element>> rel;
  for (size_t i = 0; i < vertices.size(); ++i) {
    auto [m1, m2] = coupling_marginals(vertices[i], lmc.states);
    auto key = std::make_pair(canon(m1), canon(m2));
    auto it = seen.find(key);
    if (it != seen.end()) rel.insert({dnames[i], it->second});
  }

  std::vector<Element> rnames;
  for (const auto& p : pairs.elems) rnames.push_back(tag_r(p));
  FiniteSet rset(rnames);

  BehaviouralParts parts{pairs,
                         make_expect(pairs, dset, dists, kUnit),
                         make_minrel(dset, wset, rel, kUnit),
                         make_reindex(wset, rset, reindex_map, kUnit)};
  return parts;
}

}  // namespace

DiagramPtr build_wasserstein_chain(const LabelledMarkovChain& lmc) {
  BehaviouralParts p = behavioural_parts(lmc);
  return d_seq(d_seq(d_block(p.expect), d_block(p.minrel)), d_block(p.reindex));
}

DiagramPtr build_behavioural_diagram(const LabelledMarkovChain& lmc) {
  BehaviouralParts p = behavioural_parts(lmc);
  DiagramPtr chain = d_seq(d_seq(d_block(p.expect), d_block(p.minrel)), d_block(p.reindex));

  std::vector<Element> lnames;
  std::vector<MVValue> lvals;
  std::set<std::pair<Element, Element>> codiag;
  for (const auto& x : lmc.states.elems)
    for (const auto& y : lmc.states.elems) {
      Element pe = pair_element(x, y);
      lnames.push_back(tag_l(pe));
      lvals.push_back(lmc.labels.at(x) != lmc.labels.at(y) ? mv_top(kUnit) : mv_bottom(kUnit));
      codiag.insert({tag_l(pe), pe});
      codiag.insert({tag_r(pe), pe});
    }
  FiniteSet lset(lnames);
  Block c = make_const(Valuation(lset, lvals), kUnit);
  FiniteSet both = set_union_disjoint(lset, FiniteSet(chain->output));
  Block join = make_maxrel(both, p.pairs, codiag, kUnit);
  return d_seq(d_tensor(d_block(c), chain), d_block(join));
}

DiagramPtr build_termination_diagram(const MarkovChain& mc) {
  FiniteSet term(std::vector<Element>(mc.terminal.begin(), mc.terminal.end()));
  FiniteSet rest = set_difference(mc.states, term);
  for (const auto& s : rest.elems)
    if (!mc.next.count(s)) throw Error("no distribution for non-terminal state '" + s + "'");

  std::vector<Element> dnames;
  std::map<Element, Weights> dists;
  std::map<Element, Element> reindex_map;
  std::map<std::string, Element> seen;
  auto canon = [&](const Distribution& p) {
    std::string s;
    for (const auto& [e, w] : p.weights) s += e + ":" + rational_str(w) + ";";
    return s;
  };
  for (const auto& s : rest.elems) {
    const Distribution& p = mc.next.at(s);
    auto it = seen.find(canon(p));
    if (it == seen.end()) {
      Element name = "p" + std::to_string(dnames.size());
      dnames.push_back(name);
      Weights w;
      for (const auto& [e, val] : p.weights) w[e] = val;
      dists[name] = std::move(w);
      it = seen.emplace(canon(p), name).first;
    }
    reindex_map[s] = it->second;
  }
  FiniteSet dset(dnames);
  Block expect = make_expect(mc.states, dset, dists, kUnit);
  Block reindex = make_reindex(dset, rest, reindex_map, kUnit);
  Block c = make_const(ones(term, kUnit), kUnit);
  return d_tensor(d_seq(d_block(expect), d_block(reindex)), d_block(c));
}

}  // namespace fixcheck
