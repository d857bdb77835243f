#include "fixcheck/diagram.hpp"

#include <algorithm>

namespace fixcheck {

static std::string carrier_str(const std::vector<Element>& c) {
  std::string s = "[";
  for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i];
  return s + "]";
}

DiagramPtr d_block(const Block& b) {
  auto d = std::make_shared<Diagram>();
  d->node = Diagram::Node::Block;
  d->alg = b.alg;
  d->block = std::make_shared<Block>(b);
  d->input = b.input.elems;
  d->output = b.output.elems;
  return d;
}

DiagramPtr d_id(const FiniteSet& s, const MVAlgebra& alg) {
  auto d = std::make_shared<Diagram>();
  d->node = Diagram::Node::Id;
  d->alg = alg;
  d->s = s;
  d->input = s.elems;
  d->output = s.elems;
  return d;
}

DiagramPtr d_sym(const FiniteSet& s, const FiniteSet& t, const MVAlgebra& alg) {
  auto d = std::make_shared<Diagram>();
  d->node = Diagram::Node::Sym;
  d->alg = alg;
  d->s = s;
  d->t = t;
  d->input = s.elems;
  d->input.insert(d->input.end(), t.elems.begin(), t.elems.end());
  d->output = t.elems;
  d->output.insert(d->output.end(), s.elems.begin(), s.elems.end());
  return d;
}

DiagramPtr d_dup(const FiniteSet& s, const MVAlgebra& alg) {
  auto d = std::make_shared<Diagram>();
  d->node = Diagram::Node::Dup;
  d->alg = alg;
  d->s = s;
  d->input = s.elems;
  d->output = s.elems;
  d->output.insert(d->output.end(), s.elems.begin(), s.elems.end());
  return d;
}

DiagramPtr d_disch(const FiniteSet& s, const MVAlgebra& alg) {
  auto d = std::make_shared<Diagram>();
  d->node = Diagram::Node::Disch;
  d->alg = alg;
  d->s = s;
  d->input = s.elems;
  return d;
}

DiagramPtr d_seq(DiagramPtr d1, DiagramPtr d2) {
  if (d1->alg != d2->alg) throw Error("seq: algebra mismatch");
  auto d = std::make_shared<Diagram>();
  d->node = Diagram::Node::Seq;
  d->alg = d1->alg;
  if (d1->output != d2->input) {
    // tolerate a pure reordering between duplicate-free carriers
    std::set<Element> a(d1->output.begin(), d1->output.end());
    std::set<Element> b(d2->input.begin(), d2->input.end());
    if (a.size() != d1->output.size() || b.size() != d2->input.size() || a != b)
      throw Error("seq: middle carriers differ: " + carrier_str(d1->output) + " vs " +
                  carrier_str(d2->input));
    d->perm.reserve(d2->input.size());
    for (const auto& e : d2->input)
      d->perm.push_back(size_t(std::find(d1->output.begin(), d1->output.end(), e) -
                               d1->output.begin()));
  }
  d->input = d1->input;
  d->output = d2->output;
  d->left = std::move(d1);
  d->right = std::move(d2);
  return d;
}

DiagramPtr d_tensor(DiagramPtr d1, DiagramPtr d2) {
  if (d1->alg != d2->alg) throw Error("tensor: algebra mismatch");
  auto d = std::make_shared<Diagram>();
  d->node = Diagram::Node::Tensor;
  d->alg = d1->alg;
  d->input = d1->input;
  d->input.insert(d->input.end(), d2->input.begin(), d2->input.end());
  d->output = d1->output;
  d->output.insert(d->output.end(), d2->output.begin(), d2->output.end());
  d->left = std::move(d1);
  d->right = std::move(d2);
  return d;
}

std::vector<MVValue> evaluate_pos(const Diagram& d, const std::vector<MVValue>& a) {
  if (a.size() != d.input.size())
    throw Error("evaluate: expected " + std::to_string(d.input.size()) + " values, got " +
                std::to_string(a.size()));
  switch (d.node) {
    case Diagram::Node::Block: {
      Valuation va(d.block->input, a);
      return block_apply(*d.block, va).values;
    }
    case Diagram::Node::Id:
      return a;
    case Diagram::Node::Sym: {
      std::vector<MVValue> out(a.begin() + long(d.s.size()), a.end());
      out.insert(out.end(), a.begin(), a.begin() + long(d.s.size()));
      return out;
    }
    case Diagram::Node::Dup: {
      std::vector<MVValue> out = a;
      out.insert(out.end(), a.begin(), a.end());
      return out;
    }
    case Diagram::Node::Disch:
      return {};
    case Diagram::Node::Seq: {
      std::vector<MVValue> mid = evaluate_pos(*d.left, a);
      if (!d.perm.empty()) {
        std::vector<MVValue> re;
        re.reserve(mid.size());
        for (size_t i : d.perm) re.push_back(mid[i]);
        mid = std::move(re);
      }
      return evaluate_pos(*d.right, mid);
    }
    case Diagram::Node::Tensor: {
      size_t n1 = d.left->input.size();
      std::vector<MVValue> a1(a.begin(), a.begin() + long(n1));
      std::vector<MVValue> a2(a.begin() + long(n1), a.end());
      std::vector<MVValue> out = evaluate_pos(*d.left, a1);
      std::vector<MVValue> o2 = evaluate_pos(*d.right, a2);
      out.insert(out.end(), o2.begin(), o2.end());
      return out;
    }
  }
  throw Error("unreachable diagram node");
}

std::set<size_t> approximate_pos(const Diagram& d, const std::vector<MVValue>& a,
                                 const std::set<size_t>& yprime) {
  if (a.size() != d.input.size()) throw Error("approximate: wrong valuation size");
  for (size_t i : yprime) {
    if (i >= a.size()) throw Error("approximate: position out of range");
    if (a[i].value == 0) throw Error("approximation subset must lie inside the nonzero support");
  }
  switch (d.node) {
    case Diagram::Node::Block: {
      Valuation va(d.block->input, a);
      std::set<Element> mem;
      for (size_t i : yprime) mem.insert(d.block->input.elems[i]);
      Subset res = block_approx(*d.block, va, Subset(d.block->input, std::move(mem)));
      std::set<size_t> out;
      for (size_t i = 0; i < d.block->output.size(); ++i)
        if (res.contains(d.block->output.elems[i])) out.insert(i);
      return out;
    }
    case Diagram::Node::Id:
      return yprime;
    case Diagram::Node::Sym: {
      size_t n1 = d.s.size(), n2 = d.t.size();
      std::set<size_t> out;
      for (size_t i : yprime) out.insert(i < n1 ? i + n2 : i - n1);
      return out;
    }
    case Diagram::Node::Dup: {
      std::set<size_t> out = yprime;
      for (size_t i : yprime) out.insert(i + d.s.size());
      return out;
    }
    case Diagram::Node::Disch:
      return {};
    case Diagram::Node::Seq: {
      std::set<size_t> mid = approximate_pos(*d.left, a, yprime);
      std::vector<MVValue> midv = evaluate_pos(*d.left, a);
      if (!d.perm.empty()) {
        std::set<size_t> re;
        std::vector<MVValue> rev;
        rev.reserve(midv.size());
        for (size_t j = 0; j < d.perm.size(); ++j) {
          if (mid.count(d.perm[j])) re.insert(j);
          rev.push_back(midv[d.perm[j]]);
        }
        mid = std::move(re);
        midv = std::move(rev);
      }
      return approximate_pos(*d.right, midv, mid);
    }
    case Diagram::Node::Tensor: {
      size_t n1 = d.left->input.size();
      std::vector<MVValue> a1(a.begin(), a.begin() + long(n1));
      std::vector<MVValue> a2(a.begin() + long(n1), a.end());
      std::set<size_t> u1, u2;
      for (size_t i : yprime)
        (i < n1 ? u1 : u2).insert(i < n1 ? i : i - n1);
      std::set<size_t> out = approximate_pos(*d.left, a1, u1);
      size_t off = d.left->output.size();
      for (size_t i : approximate_pos(*d.right, a2, u2)) out.insert(i + off);
      return out;
    }
  }
  throw Error("unreachable diagram node");
}

static FiniteSet boundary(const std::vector<Element>& c, const char* which) {
  std::set<Element> seen(c.begin(), c.end());
  if (seen.size() != c.size())
    throw Error(std::string(which) + " carrier has repeated elements: " + carrier_str(c));
  return FiniteSet(c);
}

FiniteSet boundary_input(const Diagram& d) { return boundary(d.input, "input"); }
FiniteSet boundary_output(const Diagram& d) { return boundary(d.output, "output"); }

bool is_endo(const Diagram& d) {
  std::set<Element> a(d.input.begin(), d.input.end());
  std::set<Element> b(d.output.begin(), d.output.end());
  return a.size() == d.input.size() && b.size() == d.output.size() && a == b;
}

Valuation evaluate(const Diagram& d, const Valuation& a) {
  FiniteSet in = boundary_input(d);
  if (!a.domain.same_elements(in))
    throw Error("evaluate: valuation domain does not match the diagram input");
  std::vector<MVValue> pos;
  pos.reserve(in.size());
  for (const auto& e : d.input) pos.push_back(a.at(e));
  return Valuation(boundary_output(d), evaluate_pos(d, pos));
}

Subset approximate(const Diagram& d, const Valuation& a, const Subset& yprime) {
  FiniteSet in = boundary_input(d);
  if (!a.domain.same_elements(in))
    throw Error("approximate: valuation domain does not match the diagram input");
  if (!yprime.domain.same_elements(in)) throw Error("approximate: subset on wrong carrier");
  std::vector<MVValue> pos;
  std::set<size_t> u;
  for (size_t i = 0; i < d.input.size(); ++i) {
    pos.push_back(a.at(d.input[i]));
    if (yprime.contains(d.input[i])) u.insert(i);
  }
  std::set<size_t> res = approximate_pos(d, pos, u);
  FiniteSet out = boundary_output(d);
  std::set<Element> mem;
  for (size_t i : res) mem.insert(d.output[i]);
  return Subset(out, std::move(mem));
}

DiagramPtr conjugate(const DiagramPtr& d) {
  auto c = std::make_shared<Diagram>(*d);
  switch (d->node) {
    case Diagram::Node::Block:
      c->block = std::make_shared<Block>(conjugate(*d->block));
      break;
    case Diagram::Node::Seq:
    case Diagram::Node::Tensor:
      c->left = conjugate(d->left);
      c->right = conjugate(d->right);
      break;
    default:
      break;  // structural nodes are self-conjugate
  }
  return c;
}

}  // namespace fixcheck
