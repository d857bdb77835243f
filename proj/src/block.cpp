#include "fixcheck/block.hpp"

namespace fixcheck {

Block make_const(const Valuation& c, const MVAlgebra& alg) {
  for (const auto& v : c.values)
    if (v.algebra != alg) throw Error("const block: value algebra mismatch");
  Block b;
  b.kind = BlockKind::Const;
  b.alg = alg;
  b.input = FiniteSet{};
  b.output = c.domain;
  b.constant = c;
  return b;
}

Block make_reindex(const FiniteSet& input, const FiniteSet& output,
                   const std::map<Element, Element>& u, const MVAlgebra& alg) {
  for (const auto& z : output.elems) {
    auto it = u.find(z);
    if (it == u.end()) throw Error("reindex block: map is not total at '" + z + "'");
    if (!input.contains(it->second))
      throw Error("reindex block: image '" + it->second + "' not in input set");
  }
  Block b;
  b.kind = BlockKind::Reindex;
  b.alg = alg;
  b.input = input;
  b.output = output;
  b.reindex = u;
  return b;
}

static Block make_rel(BlockKind kind, const FiniteSet& input, const FiniteSet& output,
                      const std::set<std::pair<Element, Element>>& rel, const MVAlgebra& alg) {
  for (const auto& [y, z] : rel) {
    if (!input.contains(y)) throw Error("relation block: '" + y + "' not in input set");
    if (!output.contains(z)) throw Error("relation block: '" + z + "' not in output set");
  }
  Block b;
  b.kind = kind;
  b.alg = alg;
  b.input = input;
  b.output = output;
  b.rel = rel;
  return b;
}

Block make_minrel(const FiniteSet& input, const FiniteSet& output,
                  const std::set<std::pair<Element, Element>>& rel, const MVAlgebra& alg) {
  return make_rel(BlockKind::MinRel, input, output, rel, alg);
}

Block make_maxrel(const FiniteSet& input, const FiniteSet& output,
                  const std::set<std::pair<Element, Element>>& rel, const MVAlgebra& alg) {
  return make_rel(BlockKind::MaxRel, input, output, rel, alg);
}

Block make_expect(const FiniteSet& input, const FiniteSet& output,
                  const std::map<Element, Weights>& dists, const MVAlgebra& alg) {
  if (alg.kind != AlgebraKind::RealInterval || alg.k != 1)
    throw Error("expect block requires the real unit interval algebra");
  for (const auto& p : output.elems) {
    auto it = dists.find(p);
    if (it == dists.end()) throw Error("expect block: no weights for '" + p + "'");
    Rational total = 0;
    for (const auto& [y, w] : it->second) {
      if (!input.contains(y)) throw Error("expect block: weight on '" + y + "' outside input set");
      if (w < 0) throw Error("expect block: negative weight on '" + y + "'");
      total += w;
    }
    if (total != 1) throw Error("expect block: weights of '" + p + "' sum to " + rational_str(total));
  }
  Block b;
  b.kind = BlockKind::Expect;
  b.alg = alg;
  b.input = input;
  b.output = output;
  b.dists = dists;
  return b;
}

static Block make_shift(BlockKind kind, const Valuation& w) {
  if (w.domain.size() == 0) throw Error("add/sub block needs a nonempty weight valuation");
  Block b;
  b.kind = kind;
  b.alg = w.algebra();
  b.input = w.domain;
  b.output = w.domain;
  b.constant = w;
  return b;
}

Block make_add(const Valuation& w) { return make_shift(BlockKind::Add, w); }
Block make_sub(const Valuation& w) { return make_shift(BlockKind::Sub, w); }

Valuation block_apply(const Block& b, const Valuation& a) {
  if (!a.domain.same_elements(b.input))
    throw Error("block applied to valuation with wrong domain");
  for (const auto& v : a.values)
    if (v.algebra != b.alg) throw Error("block applied across algebras");
  std::vector<MVValue> out;
  out.reserve(b.output.size());
  switch (b.kind) {
    case BlockKind::Const:
      return b.constant;
    case BlockKind::Reindex:
      for (const auto& z : b.output.elems) out.push_back(a.at(b.reindex.at(z)));
      break;
    case BlockKind::MinRel:
    case BlockKind::MaxRel: {
      bool is_min = b.kind == BlockKind::MinRel;
      for (const auto& z : b.output.elems) {
        std::optional<MVValue> acc;
        for (const auto& [y, z2] : b.rel) {
          if (z2 != z) continue;
          const MVValue& v = a.at(y);
          if (!acc)
            acc = v;
          else
            acc = is_min ? mv_meet(*acc, v) : mv_join(*acc, v);
        }
        out.push_back(acc ? *acc : (is_min ? mv_top(b.alg) : mv_bottom(b.alg)));
      }
      break;
    }
    case BlockKind::Expect:
      for (const auto& p : b.output.elems) {
        Rational s = 0;
        for (const auto& [y, w] : b.dists.at(p)) s += w * a.at(y).value;
        out.push_back(mv(b.alg, s));
      }
      break;
    case BlockKind::Add:
      for (const auto& y : b.output.elems) out.push_back(oplus(a.at(y), b.constant.at(y)));
      break;
    case BlockKind::Sub:
      for (const auto& y : b.output.elems) out.push_back(ominus(a.at(y), b.constant.at(y)));
      break;
  }
  return Valuation(b.output, std::move(out));
}

Subset block_approx(const Block& b, const Valuation& a, const Subset& yprime) {
  if (!yprime.domain.same_elements(b.input)) throw Error("approximation subset on wrong carrier");
  for (const auto& y : yprime.members)
    if (a.at(y).value == 0)
      throw Error("approximation subset must lie inside the nonzero support");
  Valuation fa = block_apply(b, a);
  std::set<Element> out;
  switch (b.kind) {
    case BlockKind::Const:
      break;  // constants propagate nothing
    case BlockKind::Reindex:
      for (const auto& z : b.output.elems)
        if (yprime.contains(b.reindex.at(z))) out.insert(z);
      break;
    case BlockKind::MinRel:
    case BlockKind::MaxRel: {
      bool is_min = b.kind == BlockKind::MinRel;
      for (const auto& z : b.output.elems) {
        if (fa.at(z).value == 0) continue;
        // arg-min/-max of a over the preimage of z
        std::vector<Element> pre;
        for (const auto& [y, z2] : b.rel)
          if (z2 == z) pre.push_back(y);
        std::optional<Rational> best;
        for (const auto& y : pre) {
          const Rational& v = a.at(y).value;
          if (!best || (is_min ? v < *best : v > *best)) best = v;
        }
        bool ok = is_min ? false : true;
        for (const auto& y : pre) {
          if (a.at(y).value != *best) continue;
          if (is_min) {
            if (yprime.contains(y)) { ok = true; break; }
          } else if (!yprime.contains(y)) {
            ok = false;
            break;
          }
        }
        if (!pre.empty() && ok) out.insert(z);
      }
      break;
    }
    case BlockKind::Expect:
      for (const auto& p : b.output.elems) {
        if (fa.at(p).value == 0) continue;
        bool ok = true;
        for (const auto& [y, w] : b.dists.at(p))
          if (w != 0 && !yprime.contains(y)) { ok = false; break; }
        if (ok) out.insert(p);
      }
      break;
    case BlockKind::Add:
      // propagates where the untruncated sum stays within the chain
      for (const auto& y : yprime.members)
        if (a.at(y).value + b.constant.at(y).value <= b.alg.k) out.insert(y);
      break;
    case BlockKind::Sub:
      for (const auto& y : yprime.members)
        if (a.at(y).value > b.constant.at(y).value) out.insert(y);
      break;
  }
  return Subset(b.output, std::move(out));
}

Block conjugate(const Block& b) {
  Block c = b;
  switch (b.kind) {
    case BlockKind::Const:
      c.constant = pointwise_complement(b.constant);
      break;
    case BlockKind::Reindex:
    case BlockKind::Expect:
      break;  // self-conjugate
    case BlockKind::MinRel:
      c.kind = BlockKind::MaxRel;
      break;
    case BlockKind::MaxRel:
      c.kind = BlockKind::MinRel;
      break;
    case BlockKind::Add:
      c.kind = BlockKind::Sub;
      break;
    case BlockKind::Sub:
      c.kind = BlockKind::Add;
      break;
  }
  return c;
}

}  // namespace fixcheck
