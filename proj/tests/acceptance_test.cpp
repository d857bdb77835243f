// Acceptance gate: one test case per criterion, each printing a single
// PASS/FAIL line. Sub-check failures are reported through doctest as well,
// so ctest fails whenever a criterion does.
#include <doctest.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fixcheck/fixpoint.hpp"
#include "fixcheck/liftings.hpp"
#include "fixcheck/oracle.hpp"
#include "fixcheck/transition.hpp"
#include "gs.hpp"
#include "support.hpp"

using namespace fixcheck;
using fixcheck::testing::NameGen;
using fixcheck::testing::Rng;

namespace {

const MVAlgebra I = real_interval(1);

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TransitionSystem load(const std::string& name) {
  return parse_transition_system(slurp(std::string(DATA_DIR) + "/" + name), name);
}

struct Gate {
  int number;
  std::string title;
  double limit_s;
  std::vector<std::string> fails;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Gate(int n, std::string t, double limit) : number(n), title(std::move(t)), limit_s(limit) {}

  void sub(bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
  }

  void finish() {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_s)
      fails.push_back("time limit exceeded: " + std::to_string(secs) + "s > " +
                      std::to_string(limit_s) + "s");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", secs);
    std::cout << "ACCEPTANCE " << number << ": " << (fails.empty() ? "PASS" : "FAIL") << " ["
              << buf << "] " << title << "\n";
    for (const auto& f : fails) {
      std::cout << "  - " << f << "\n";
      FAIL_CHECK("criterion " << number << ": " << f);
    }
  }
};

Valuation candidate(const TransitionSystem& ts, const std::string& name, const FiniteSet& dom) {
  return resolve_candidate(ts, name, dom);
}

Distribution random_distribution(Rng& rng, const FiniteSet& base, int max_support, int max_den) {
  Weights w;
  std::vector<Element> pool = base.elems;
  std::shuffle(pool.begin(), pool.end(), rng.g);
  int n = rng.range(1, std::min<int>(max_support, (int)pool.size()));
  Rational left = 1;
  for (int i = 0; i < n; ++i) {
    Rational v = i + 1 == n ? left : Rational(rng.range(0, max_den), max_den) * left;
    if (v > 0) w[pool[i]] = v;
    left -= v;
  }
  if (left > 0) w[pool[0]] += left;
  return Distribution(base, w);
}

LabelledMarkovChain random_lmc(Rng& rng) {
  int n = rng.range(2, 5);
  std::vector<Element> names;
  for (int i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  LabelledMarkovChain lmc;
  lmc.states = FiniteSet(names);
  for (const auto& s : names) {
    lmc.labels[s] = "";
    lmc.next.emplace(s, random_distribution(rng, lmc.states, 3, 12));
  }
  return lmc;
}

MVValue sup_norm(const Valuation& a, const Valuation& b) {
  return mv_join(norm(pointwise_ominus(a, b)), norm(pointwise_ominus(b, a)));
}

}  // namespace

TEST_CASE("criterion 1: termination of the four-state chain") {
  Gate g(1, "termination probabilities of the four-state chain", 1.0);
  auto ts = load("term_chain.mc");
  auto T = build_termination_diagram(ts.mc);
  g.sub(is_endo(*T), "termination diagram is not an endo");

  auto mu = candidate(ts, "mu", ts.mc.states);
  g.sub(evaluate(*T, mu) == mu, "mu is not a fixpoint");
  auto ok = check_least(T, mu);
  g.sub(ok.verdict == Verdict::Confirmed, "mu not confirmed as the least fixpoint");

  auto all = ones(ts.mc.states, I);
  auto bad = check_least(T, all);
  g.sub(bad.is_fixpoint, "the all-ones valuation should be a fixpoint");
  g.sub(bad.verdict == Verdict::Refuted, "the all-ones fixpoint was not refuted");
  g.sub(bad.witness == std::set<Element>{"y", "z"}, "witness is not {y, z}");
  g.sub(bad.suggested_delta && bad.suggested_delta->value == 1, "suggested delta is not 1");
  g.sub(bad.corrected && pointwise_leq(evaluate(*T, *bad.corrected), *bad.corrected),
        "corrected valuation is not a pre-fixpoint");

  auto it = iterate_to_least_from_above(T, all, 20, 0);
  g.sub(it.reached_least && it.result == mu, "iteration from the top did not reach mu");
  g.finish();
}

TEST_CASE("criterion 2: behavioural metric of the two-class chain") {
  Gate g(2, "d8 candidate metric on the four-state labelled chain", 5.0);
  auto ts = load("four_state.lmc");
  auto B = build_behavioural_diagram(ts.lmc);
  FiniteSet pairs = set_product(ts.lmc.states, ts.lmc.states);
  auto d = candidate(ts, "d8", pairs);

  g.sub(evaluate(*B, d) == d, "the candidate metric is not a fixpoint");
  auto least = check_least(B, d);
  g.sub(least.is_fixpoint, "check_least does not see a fixpoint");
  g.sub(least.verdict == Verdict::Refuted, "least mode did not refute");
  g.sub(least.witness == std::set<Element>{"(4,4)"}, "obstruction is not {(4,4)}");
  g.sub(least.corrected && pointwise_leq(evaluate(*B, *least.corrected), *least.corrected),
        "corrected valuation is not a pre-fixpoint");

  auto greatest = check_greatest(B, d);
  g.sub(greatest.verdict == Verdict::Refuted, "greatest mode did not refute");
  g.finish();
}

TEST_CASE("criterion 3: the probabilistic two-cycle") {
  Gate g(3, "off-diagonal candidate on the two-state cycle", 1.0);
  auto ts = load("two_state_loop.lmc");
  auto B = build_behavioural_diagram(ts.lmc);
  FiniteSet pairs = set_product(ts.lmc.states, ts.lmc.states);
  auto d = candidate(ts, "offdiag", pairs);

  g.sub(evaluate(*B, d) == d, "the off-diagonal candidate is not a fixpoint");
  auto r = check_least(B, d);
  g.sub(r.verdict == Verdict::Refuted, "candidate was not refuted");
  g.sub(r.witness == std::set<Element>{"(1,2)", "(2,1)"}, "obstruction is not both pairs");

  auto it = iterate_to_least_from_above(B, d, 20, 0);
  g.sub(it.reached_least, "iteration did not certify the least fixpoint");
  g.sub(it.result == zeros(pairs, I), "the behavioural metric is not identically zero");
  g.finish();
}

TEST_CASE("criterion 4: the three-state chain with a plateau") {
  Gate g(4, "discrete candidate on the three-state chain", 5.0);
  auto ts = load("three_state.lmc");
  auto B = build_behavioural_diagram(ts.lmc);
  FiniteSet pairs = set_product(ts.lmc.states, ts.lmc.states);
  auto d = candidate(ts, "done", pairs);

  // the expected behaviour per the criterion: the discrete candidate is a
  // fixpoint and the obstruction is all six off-diagonal pairs
  auto fd = evaluate(*B, d);
  bool is_fix = fd == d;
  g.sub(is_fix, "the discrete candidate is not a fixpoint: its image moves (y,z) from 1 to " +
                    rational_str(fd.at("(y,z)").value) +
                    " (the unique coupling of next(y) and next(z) has expected distance 1/2), "
                    "so the six-pair obstruction claim cannot hold");
  if (is_fix) {
    auto r = check_least(B, d);
    g.sub(r.witness.size() == 6, "obstruction is not all six off-diagonal pairs");
  }

  // regression on the honest values: exactly the pairs reaching the
  // plateau state x on both sides sustain a decrease
  std::set<Element> honest = {"(x,y)", "(y,x)", "(x,z)", "(z,x)"};
  auto nu = gfp_w_approx(d, ts.lmc);
  CHECK(nu.members == honest);
  auto via_diagram = gfp_approx(*B, d);
  CHECK(via_diagram.members == honest);
  CHECK(fd.at("(y,z)").value == Rational(1, 2));
  CHECK(fd.at("(x,y)").value == 1);
  g.finish();
}

TEST_CASE("criterion 5: nondeterministic two-state system") {
  Gate g(5, "hausdorff-lifted check on the two-state system", 1.0);
  auto ts = load("two_state.nts");
  const auto& nts = ts.nts;
  FiniteSet pairs = set_product(nts.states, nts.states);
  auto d = candidate(ts, "dhalf", pairs);

  ApplyFn apply = [&](const Valuation& v) {
    std::vector<MVValue> out;
    for (const auto& p : pairs.elems) {
      auto comma = p.find(',');
      Element x = p.substr(1, comma - 1), y = p.substr(comma + 1, p.size() - comma - 2);
      out.push_back(hausdorff_powerset(v, nts.succ.at(x), nts.succ.at(y)));
    }
    return Valuation(pairs, std::move(out));
  };
  ApproxFn approx = [&](const Valuation& v, const Subset& u) { return w_approx(v, u, nts); };

  g.sub(apply(d) == d, "the half-distance candidate is not a fixpoint");
  auto r = check_least_fn(apply, approx, d);
  g.sub(r.verdict == Verdict::Refuted, "candidate was not refuted");
  g.sub(r.witness == std::set<Element>{"(x,y)", "(y,x)"}, "obstruction is not the mixed pairs");
  g.sub(r.corrected && pointwise_leq(apply(*r.corrected), *r.corrected),
        "corrected valuation is not a pre-fixpoint");
  g.sub(check_least_fn(apply, approx, zeros(pairs, I)).verdict == Verdict::Confirmed,
        "the zero metric is not confirmed least");

  // the optimal coupling of next(x) and next(y) witnesses the lifted value
  SetCoupling t = {{"x", "x"}, {"y", "x"}};
  g.sub(pow_lifting_value(d, t).value == Rational(1, 2), "optimal coupling value is not 1/2");
  g.sub(hausdorff_powerset(d, nts.succ.at("x"), nts.succ.at("y")).value == Rational(1, 2),
        "lifted distance of (x,y) is not 1/2");
  g.finish();
}

TEST_CASE("criterion 6: random labelled chains, lp vs vertices vs diagram") {
  Gate g(6, "100 random labelled markov chains", 60.0);
  Rng rng(601);
  int lp_checks = 0, route_checks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto lmc = random_lmc(rng);
    FiniteSet pairs = set_product(lmc.states, lmc.states);
    auto d = rng.valuation(pairs, I, 12);

    // exact optimum equals the vertex minimum for sampled state pairs
    for (int probe = 0; probe < 3; ++probe) {
      const auto& p1 = lmc.next.at(rng.pick(lmc.states));
      const auto& p2 = lmc.next.at(rng.pick(lmc.states));
      auto lp = wasserstein_distribution(d, p1, p2);
      Rational best = 2;
      for (const auto& t : transport_vertices(p1, p2))
        best = std::min(best, dist_lifting_value(d, t).value);
      if (lp.value != best) {
        g.sub(false, "lp optimum differs from the vertex minimum");
        break;
      }
      ++lp_checks;
    }

    // direct wasserstein approximation equals the generic diagram route
    auto B = build_behavioural_diagram(lmc);
    auto sup = support_nonzero(d);
    for (int probe = 0; probe < 2; ++probe) {
      std::set<Element> yp;
      for (const auto& e : sup.members)
        if (rng.flip()) yp.insert(e);
      auto direct = w_approx(d, Subset(pairs, yp), lmc);
      auto routed = approximate(*B, d, Subset(pairs, yp));
      if (direct.members != routed.members) {
        g.sub(false, "diagram approximation differs from the direct lifting");
        break;
      }
      ++route_checks;
    }
  }
  g.sub(lp_checks >= 300, "not enough lp comparisons ran");
  g.sub(route_checks >= 200, "not enough route comparisons ran");
  g.finish();
}

TEST_CASE("criterion 7: random finite-chain diagrams against the oracle") {
  Gate g(7, "220 random finite-chain diagrams", 120.0);
  Rng rng(701);
  NameGen names("a");

  int oracle_checks = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto alg = finite_chain(rng.range(1, 4));
    FiniteSet in = names.fresh_set(rng.range(1, 5));
    auto d = random_diagram(rng, alg, in, 4, names);
    FiniteSet din(d->input);
    auto a = rng.valuation(din, alg);
    std::set<Element> yp;
    for (const auto& e : support_nonzero(a).members)
      if (rng.flip()) yp.insert(e);
    auto got = approximate(*d, a, Subset(din, yp));
    auto want = oracle::approx_delta_union(*d, a, Subset(din, yp));
    if (got.members != want.members) {
      g.sub(false, "approximation differs from the delta-oracle union");
      break;
    }
    ++oracle_checks;
  }
  g.sub(oracle_checks == 120, "oracle comparison aborted early");

  int endo_checks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto alg = finite_chain(rng.range(1, 4));
    std::vector<Element> carrier;
    int n = rng.range(1, 5);
    for (int i = 0; i < n; ++i) carrier.push_back(names.fresh());
    FiniteSet s(carrier);
    auto d = random_endo_diagram(rng, alg, s, 4);

    auto lfp = oracle::brute_lfp(d);
    auto gfp = oracle::brute_gfp(d);
    if (check_least(d, lfp).verdict != Verdict::Confirmed) {
      g.sub(false, "the brute-force least fixpoint was not confirmed");
      break;
    }
    if (!(gfp == lfp)) {
      auto r = check_least(d, gfp);
      if (r.verdict != Verdict::Refuted) {
        g.sub(false, "a strictly larger fixpoint was not refuted");
        break;
      }
      bool dec = r.corrected && pointwise_leq(evaluate(*d, *r.corrected), *r.corrected) &&
                 pointwise_leq(*r.corrected, gfp) && !(*r.corrected == gfp);
      if (!dec) {
        g.sub(false, "no verified strict decrease for a refuted fixpoint");
        break;
      }
    }
    // a randomized pre-fixpoint (prefix of the descent from the top)
    Valuation b = ones(s, alg);
    int steps = rng.range(0, 3);
    for (int i = 0; i < steps; ++i) {
      Valuation fb = evaluate(*d, b);
      if (!pointwise_leq(fb, b)) break;
      b = fb;
    }
    auto it = iterate_to_least_from_above(d, b, 50, 0);
    if (!it.reached_least || !(it.result == lfp)) {
      g.sub(false, "iteration from a random pre-fixpoint missed the least fixpoint");
      break;
    }
    ++endo_checks;
  }
  g.sub(endo_checks == 100, "endo diagram checks aborted early");
  g.finish();
}

TEST_CASE("criterion 8: gs-monoidal axioms under both semantics") {
  Gate g(8, "gs-monoidal axiom suite, 50 instantiations per axiom", 60.0);
  auto rep = fixcheck::testing::run_gs_axioms(801, 50);
  g.sub(rep.instantiations >= 50, "too few instantiations");
  for (const auto& f : rep.failures) g.sub(false, f);
  g.finish();
}

TEST_CASE("criterion 9: non-expansiveness of blocks and composites") {
  Gate g(9, "non-expansiveness of every block kind and 120 composites", 60.0);
  Rng rng(901);
  NameGen names("x");

  // one batch per kind, including expectation
  for (int trial = 0; trial < 20; ++trial) {
    FiniteSet in = names.fresh_set(rng.range(1, 4));
    FiniteSet out = names.fresh_set(rng.range(1, 3));
    std::map<Element, Element> re;
    for (const auto& z : out.elems) re[z] = rng.pick(in);
    std::set<std::pair<Element, Element>> rel;
    for (const auto& a : in.elems)
      for (const auto& b : out.elems)
        if (rng.flip()) rel.insert({a, b});
    std::map<Element, Weights> dists;
    for (const auto& z : out.elems) dists[z] = random_distribution(rng, in, 3, 6).weights;

    std::vector<Block> blocks = {
        make_const(rng.valuation(out, I), I),
        make_reindex(in, out, re, I),
        make_minrel(in, out, rel, I),
        make_maxrel(in, out, rel, I),
        make_expect(in, out, dists, I),
        make_add(rng.valuation(in, I)),
        make_sub(rng.valuation(in, I)),
    };
    for (const auto& b : blocks) {
      Valuation u = rng.valuation(b.input, I), v = rng.valuation(b.input, I);
      if (!mv_leq(sup_norm(block_apply(b, u), block_apply(b, v)), sup_norm(u, v))) {
        g.sub(false, "a basic block is expansive");
        break;
      }
    }
  }

  int composites = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto alg = rng.flip() ? finite_chain(rng.range(1, 4)) : real_interval(1);
    FiniteSet in = names.fresh_set(rng.range(1, 4));
    auto d = random_diagram(rng, alg, in, 4, names);
    FiniteSet din(d->input);
    auto u = rng.valuation(din, alg), v = rng.valuation(din, alg);
    if (!mv_leq(sup_norm(evaluate(*d, u), evaluate(*d, v)), sup_norm(u, v))) {
      g.sub(false, "a composite diagram is expansive");
      break;
    }
    ++composites;
  }
  g.sub(composites == 120, "composite checks aborted early");
  g.finish();
}
