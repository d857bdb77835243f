#pragma once

#include <memory>

#include "fixcheck/block.hpp"

namespace fixcheck {

/// gs-monoidal term over basic blocks. Wires are positional: the carrier of
/// a wire is an ordered list of elements, and a tensor offsets the right
/// component past the left one. Inner wires may repeat elements (e.g. after
/// a duplicator); boundary carriers must be duplicate-free for the
/// element-keyed entry points below.
struct Diagram {
  enum class Node { Block, Id, Sym, Dup, Disch, Seq, Tensor };

  Node node = Node::Id;
  MVAlgebra alg;
  std::shared_ptr<Block> block;                  // Block
  FiniteSet s, t;                                // Id(s), Dup(s), Disch(s), Sym(s,t)
  std::shared_ptr<Diagram> left, right;          // Seq, Tensor
  std::vector<size_t> perm;                      // Seq: right-input position -> left-output position
  std::vector<Element> input, output;            // positional carriers
};

using DiagramPtr = std::shared_ptr<Diagram>;

DiagramPtr d_block(const Block& b);
DiagramPtr d_id(const FiniteSet& s, const MVAlgebra& alg);
DiagramPtr d_sym(const FiniteSet& s, const FiniteSet& t, const MVAlgebra& alg);
DiagramPtr d_dup(const FiniteSet& s, const MVAlgebra& alg);
DiagramPtr d_disch(const FiniteSet& s, const MVAlgebra& alg);
/// Left-to-right composition: first d1, then d2. Requires d1's output and
/// d2's input to agree positionally, or to be duplicate-free and equal as
/// sets (an implicit permutation is inserted).
DiagramPtr d_seq(DiagramPtr d1, DiagramPtr d2);
DiagramPtr d_tensor(DiagramPtr d1, DiagramPtr d2);

/// Positional semantics.
std::vector<MVValue> evaluate_pos(const Diagram& d, const std::vector<MVValue>& a);
std::set<size_t> approximate_pos(const Diagram& d, const std::vector<MVValue>& a,
                                 const std::set<size_t>& yprime);

/// Element-keyed boundary (duplicate-free carriers required).
Valuation evaluate(const Diagram& d, const Valuation& a);
Subset approximate(const Diagram& d, const Valuation& a, const Subset& yprime);

DiagramPtr conjugate(const DiagramPtr& d);

/// True when the input and output carriers are duplicate-free and equal as
/// element sets, i.e. the diagram denotes an endo-function up to carrier
/// reordering.
bool is_endo(const Diagram& d);

FiniteSet boundary_input(const Diagram& d);   // throws on duplicated carrier
FiniteSet boundary_output(const Diagram& d);

}  // namespace fixcheck
