#include "fixcheck/fixpoint.hpp"

namespace fixcheck {

std::string mode_str(Mode m) {
  switch (m) {
    case Mode::Least: return "least";
    case Mode::Greatest: return "greatest";
    case Mode::PostBelowLeast: return "post-below-least";
    case Mode::PreAboveGreatest: return "pre-above-greatest";
  }
  return "?";
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::Refuted: return "refuted";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

static Subset descend(const ApproxFn& approx, const Valuation& a, std::set<Element> universe,
                      std::vector<std::set<Element>>* trace) {
  std::set<Element> cur = std::move(universe);
  if (trace) trace->push_back(cur);
  for (;;) {
    Subset next = approx(a, Subset(a.domain, cur));
    std::set<Element> n;
    for (const auto& e : next.members)
      if (cur.count(e)) n.insert(e);
    if (n == cur) return Subset(a.domain, std::move(cur));
    cur = std::move(n);
    if (trace) trace->push_back(cur);
  }
}

static ApplyFn diagram_apply(const Diagram& d) {
  if (!is_endo(d)) throw Error("fixpoint checks need an endo diagram");
  return [&d](const Valuation& a) { return evaluate(d, a); };
}

static ApproxFn diagram_approx(const Diagram& d) {
  return [&d](const Valuation& a, const Subset& u) { return approximate(d, a, u); };
}

Subset gfp_approx(const Diagram& d, const Valuation& a, std::vector<std::set<Element>>* trace) {
  if (!is_endo(d)) throw Error("approximation descent needs an endo diagram");
  return descend(diagram_approx(d), a, support_nonzero(a).members, trace);
}

std::pair<MVValue, Valuation> suggest_decrease_fn(const ApplyFn& f, const Valuation& a,
                                                  const std::set<Element>& witness) {
  const MVAlgebra& alg = a.algebra();
  auto corrected = [&](const Rational& delta) {
    return pointwise_ominus(a, delta_on(Subset(a.domain, witness), mv(alg, delta), alg));
  };
  auto verified = [&](const Rational& delta) {
    Valuation b = corrected(delta);
    return pointwise_leq(f(b), b);
  };

  if (alg.kind == AlgebraKind::FiniteChain) {
    for (long delta = alg.k; delta >= 1; --delta)
      if (verified(delta)) return {mv(alg, delta), corrected(delta)};
    throw Error("no verified decrease exists; the candidate is not a fixpoint above the least");
  }

  // exponential descent from the top, then binary refinement upward
  int budget = 64;
  Rational hi(alg.k);  // known-failing bound once a failure is seen
  Rational lo = 0;     // best verified so far
  Rational probe(alg.k);
  bool at_top = false;
  while (budget > 0) {
    --budget;
    if (verified(probe)) {
      lo = probe;
      at_top = probe == alg.k;
      break;
    }
    hi = probe;
    probe /= 2;
    if (probe == 0) break;
  }
  if (lo == 0) throw Error("decrease search exhausted its probe budget without a verified delta");
  if (!at_top) {
    while (budget-- > 0) {
      Rational mid = (lo + hi) / 2;
      if (verified(mid))
        lo = mid;
      else
        hi = mid;
    }
  }
  return {mv(alg, lo), corrected(lo)};
}

CheckReport check_least_fn(const ApplyFn& f, const ApproxFn& approx, const Valuation& a) {
  CheckReport r;
  r.mode = Mode::Least;
  Valuation fa = f(a);
  r.is_fixpoint = fa == a;
  if (!r.is_fixpoint) {
    r.verdict = Verdict::Inconclusive;
    r.witness = disagreement(a, fa);
    r.note = "candidate is not a fixpoint";
    return r;
  }
  Subset nu = descend(approx, a, support_nonzero(a).members, &r.iterations);
  if (nu.empty()) {
    r.verdict = Verdict::Confirmed;
    return r;
  }
  r.verdict = Verdict::Refuted;
  r.witness = nu.members;
  auto [delta, corrected] = suggest_decrease_fn(f, a, nu.members);
  r.suggested_delta = delta;
  r.corrected = corrected;
  return r;
}

CheckReport check_post_below_least_fn(const ApplyFn& f, const ApproxFn& approx,
                                      const Valuation& a) {
  CheckReport r;
  r.mode = Mode::PostBelowLeast;
  Valuation fa = f(a);
  r.is_fixpoint = fa == a;
  if (!pointwise_leq(a, fa)) {
    r.verdict = Verdict::Inconclusive;
    r.witness = disagreement(a, fa);
    r.note = "candidate is not a post-fixpoint";
    return r;
  }
  // restrict the approximation to points where a already agrees with f(a)
  std::set<Element> universe;
  for (const auto& e : a.domain.elems)
    if (a.at(e).value != 0 && a.at(e).value == fa.at(e).value) universe.insert(e);
  ApproxFn restricted = [&](const Valuation& v, const Subset& u) {
    Subset s = approx(v, u);
    std::set<Element> n;
    for (const auto& e : s.members)
      if (universe.count(e)) n.insert(e);
    return Subset(s.domain, std::move(n));
  };
  Subset nu = descend(restricted, a, universe, &r.iterations);
  if (nu.empty()) {
    r.verdict = Verdict::Confirmed;  // a is below the least fixpoint
  } else {
    r.verdict = Verdict::Inconclusive;  // this proof rule is sound but not complete
    r.witness = nu.members;
    r.note = "nonempty obstruction; no conclusion for this mode";
  }
  return r;
}

CheckReport check_least(const DiagramPtr& d, const Valuation& a) {
  return check_least_fn(diagram_apply(*d), diagram_approx(*d), a);
}

CheckReport check_greatest(const DiagramPtr& d, const Valuation& a) {
  DiagramPtr c = conjugate(d);
  CheckReport r = check_least_fn(diagram_apply(*c), diagram_approx(*c), pointwise_complement(a));
  r.mode = Mode::Greatest;
  if (r.corrected) r.corrected = pointwise_complement(*r.corrected);
  return r;
}

CheckReport check_post_below_least(const DiagramPtr& d, const Valuation& a) {
  return check_post_below_least_fn(diagram_apply(*d), diagram_approx(*d), a);
}

CheckReport check_pre_above_greatest(const DiagramPtr& d, const Valuation& a) {
  DiagramPtr c = conjugate(d);
  CheckReport r =
      check_post_below_least_fn(diagram_apply(*c), diagram_approx(*c), pointwise_complement(a));
  r.mode = Mode::PreAboveGreatest;
  if (r.note == "candidate is not a post-fixpoint") r.note = "candidate is not a pre-fixpoint";
  return r;
}

std::pair<MVValue, Valuation> suggest_decrease(const DiagramPtr& d, const Valuation& a,
                                               const std::set<Element>& witness) {
  return suggest_decrease_fn(diagram_apply(*d), a, witness);
}

IterateResult iterate_to_least_from_above(const DiagramPtr& d, const Valuation& a,
                                          int max_rounds, const Rational& epsilon) {
  const MVAlgebra& alg = a.algebra();
  ApplyFn f = diagram_apply(*d);
  Valuation b = a;
  if (!pointwise_leq(f(b), b))
    throw Error("iterate_to_least_from_above needs a pre-fixpoint to start from");
  IterateResult res{b};
  for (int round = 0; round < max_rounds; ++round) {
    res.rounds = round + 1;
    // Kleene descent
    for (long step = 0; step < 100000; ++step) {
      Valuation fb = f(b);
      Rational gap = norm(pointwise_ominus(b, fb)).value;
      b = fb;
      if (gap == 0) break;
      if (alg.kind == AlgebraKind::RealInterval && gap <= epsilon) break;
    }
    Valuation fb = f(b);
    res.residual = norm(pointwise_ominus(b, fb)).value;
    if (!(fb == b)) {
      res.result = b;
      res.note = "stopped at tolerance before reaching an exact fixpoint";
      return res;
    }
    CheckReport chk = check_least(d, b);
    if (chk.verdict == Verdict::Confirmed) {
      res.result = b;
      res.reached_least = true;
      return res;
    }
    b = *chk.corrected;
  }
  res.result = b;
  res.note = "round budget exhausted";
  return res;
}

}  // namespace fixcheck
