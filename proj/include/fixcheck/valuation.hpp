#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "fixcheck/mv.hpp"

namespace fixcheck {

using Element = std::string;

/// Ordered, duplicate-free carrier. Order matters for tensor offsets and
/// for deterministic printing; membership and equality-as-set ignore it.
struct FiniteSet {
  std::vector<Element> elems;

  FiniteSet() = default;
  explicit FiniteSet(std::vector<Element> es);

  size_t size() const { return elems.size(); }
  bool contains(const Element& e) const;
  size_t index_of(const Element& e) const;  // throws if absent
  bool operator==(const FiniteSet& o) const { return elems == o.elems; }
  bool same_elements(const FiniteSet& o) const;
  bool disjoint_from(const FiniteSet& o) const;
};

FiniteSet set_union_disjoint(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b);
FiniteSet set_product(const FiniteSet& a, const FiniteSet& b);  // elements "(l,r)"
Element pair_element(const Element& l, const Element& r);

/// Map from a finite carrier into an MV-chain; values aligned with the
/// domain order.
struct Valuation {
  FiniteSet domain;
  std::vector<MVValue> values;

  Valuation() = default;
  Valuation(FiniteSet dom, std::vector<MVValue> vals);

  const MVAlgebra& algebra() const;
  const MVValue& at(const Element& e) const;
  const MVValue& at(size_t i) const { return values.at(i); }
  bool operator==(const Valuation& o) const;  // same element set, same values
};

Valuation constant_valuation(const FiniteSet& dom, const MVValue& v);
Valuation ones(const FiniteSet& dom, const MVAlgebra& a);
Valuation zeros(const FiniteSet& dom, const MVAlgebra& a);

struct Subset {
  FiniteSet domain;
  std::set<Element> members;  // subset of domain

  Subset() = default;
  Subset(FiniteSet dom, std::set<Element> mem);
  bool contains(const Element& e) const { return members.count(e) > 0; }
  bool empty() const { return members.empty(); }
};

MVValue norm(const Valuation& a);  // join of values; bottom on empty domain
Subset support_nonzero(const Valuation& a);
Valuation delta_on(const Subset& s, const MVValue& delta, const MVAlgebra& alg);

Valuation pointwise_oplus(const Valuation& a, const Valuation& b);
Valuation pointwise_ominus(const Valuation& a, const Valuation& b);
Valuation pointwise_complement(const Valuation& a);
bool pointwise_leq(const Valuation& a, const Valuation& b);
std::set<Element> disagreement(const Valuation& a, const Valuation& b);

}  // namespace fixcheck
