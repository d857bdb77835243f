#pragma once

#include "fixcheck/diagram.hpp"

namespace fixcheck {

struct Distribution {
  FiniteSet base;
  Weights weights;  // nonnegative, sums to 1, support inside base

  Distribution() = default;
  Distribution(FiniteSet b, Weights w);
  Rational at(const Element& e) const;
  std::set<Element> support() const;
};

struct LabelledMarkovChain {
  FiniteSet states;
  std::map<Element, std::string> labels;
  std::map<Element, Distribution> next;
};

struct MarkovChain {
  FiniteSet states;
  std::set<Element> terminal;
  std::map<Element, Distribution> next;  // total exactly on non-terminal states
};

struct NondetTS {
  FiniteSet states;
  std::map<Element, std::set<Element>> succ;
};

using PairCoupling = std::map<std::pair<Element, Element>, Rational>;
using SetCoupling = std::set<std::pair<Element, Element>>;

/// Exact optimum of the transport problem between p1 and p2 under ground
/// distance d (a valuation on the pair set, real unit interval).
MVValue wasserstein_distribution(const Valuation& d, const Distribution& p1,
                                 const Distribution& p2);

/// All vertices of the transportation polytope of (p1, p2), i.e. its
/// basic feasible solutions.
std::vector<PairCoupling> transport_vertices(const Distribution& p1, const Distribution& p2,
                                             size_t support_cap = 8);

bool lifting_member_distribution(const PairCoupling& t, const Valuation& d, const Subset& yprime);
bool lifting_member_powerset(const SetCoupling& t, const Valuation& d, const Subset& yprime);

/// Expectation / max of d over a coupling (the lifted predicate values).
MVValue dist_lifting_value(const Valuation& d, const PairCoupling& t);
MVValue pow_lifting_value(const Valuation& d, const SetCoupling& t);

MVValue hausdorff_powerset(const Valuation& d, const std::set<Element>& s1,
                           const std::set<Element>& s2);

/// All couplings of two finite sets: subsets of s1 x s2 with full
/// projections. Guarded by a size cap on |s1 x s2|.
std::vector<SetCoupling> powerset_couplings(const std::set<Element>& s1,
                                            const std::set<Element>& s2, size_t cap = 16);

Subset w_approx(const Valuation& d, const Subset& yprime, const LabelledMarkovChain& sys);
Subset w_approx(const Valuation& d, const Subset& yprime, const NondetTS& sys);

/// Greatest fixpoint of U |-> w_approx(d, U, sys) below the nonzero
/// support of d.
Subset gfp_w_approx(const Valuation& d, const LabelledMarkovChain& sys);
Subset gfp_w_approx(const Valuation& d, const NondetTS& sys);

Element tag_l(const Element& e);
Element tag_r(const Element& e);

DiagramPtr build_behavioural_diagram(const LabelledMarkovChain& lmc);
DiagramPtr build_termination_diagram(const MarkovChain& mc);

/// The Wasserstein branch of the behavioural diagram (expect, then the
/// marginal min-relation, then the reindex along eta x eta), with output
/// carrier tagged by tag_r. Exposed for route-equivalence checks.
DiagramPtr build_wasserstein_chain(const LabelledMarkovChain& lmc);

}  // namespace fixcheck
