#pragma once

#include <utility>

#include "fixcheck/valuation.hpp"

namespace fixcheck {

enum class BlockKind { Const, Reindex, MinRel, MaxRel, Expect, Add, Sub };

/// Finitely supported probability weights over some carrier.
using Weights = std::map<Element, Rational>;

/// A basic non-expansive function M^input -> M^output.
struct Block {
  BlockKind kind;
  MVAlgebra alg;
  FiniteSet input;
  FiniteSet output;
  Valuation constant;                          // Const: values on output; Add/Sub: w on input
  std::map<Element, Element> reindex;          // output element -> input element
  std::set<std::pair<Element, Element>> rel;   // subset of input x output
  std::map<Element, Weights> dists;            // Expect: output element -> weights on input
};

Block make_const(const Valuation& c, const MVAlgebra& alg);
Block make_reindex(const FiniteSet& input, const FiniteSet& output,
                   const std::map<Element, Element>& u, const MVAlgebra& alg);
Block make_minrel(const FiniteSet& input, const FiniteSet& output,
                  const std::set<std::pair<Element, Element>>& rel, const MVAlgebra& alg);
Block make_maxrel(const FiniteSet& input, const FiniteSet& output,
                  const std::set<std::pair<Element, Element>>& rel, const MVAlgebra& alg);
Block make_expect(const FiniteSet& input, const FiniteSet& output,
                  const std::map<Element, Weights>& dists, const MVAlgebra& alg);
Block make_add(const Valuation& w);
Block make_sub(const Valuation& w);

Valuation block_apply(const Block& b, const Valuation& a);

/// Best correct approximation of the block at valuation a, restricted to
/// subsets of the nonzero support of a (checked).
Subset block_approx(const Block& b, const Valuation& a, const Subset& yprime);

/// The conjugate block, computing not . f . not.
Block conjugate(const Block& b);

}  // namespace fixcheck
