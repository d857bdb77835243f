#include "fixcheck/valuation.hpp"

#include <algorithm>

namespace fixcheck {

FiniteSet::FiniteSet(std::vector<Element> es) : elems(std::move(es)) {
  std::set<Element> seen;
  for (const auto& e : elems)
    if (!seen.insert(e).second) throw Error("duplicate element '" + e + "' in set");
}

bool FiniteSet::contains(const Element& e) const {
  return std::find(elems.begin(), elems.end(), e) != elems.end();
}

size_t FiniteSet::index_of(const Element& e) const {
  auto it = std::find(elems.begin(), elems.end(), e);
  if (it == elems.end()) throw Error("element '" + e + "' not in set");
  return size_t(it - elems.begin());
}

bool FiniteSet::same_elements(const FiniteSet& o) const {
  if (elems.size() != o.elems.size()) return false;
  std::set<Element> a(elems.begin(), elems.end()), b(o.elems.begin(), o.elems.end());
  return a == b;
}

bool FiniteSet::disjoint_from(const FiniteSet& o) const {
  for (const auto& e : elems)
    if (o.contains(e)) return false;
  return true;
}

FiniteSet set_union_disjoint(const FiniteSet& a, const FiniteSet& b) {
  if (!a.disjoint_from(b)) throw Error("sets are not disjoint");
  std::vector<Element> es = a.elems;
  es.insert(es.end(), b.elems.begin(), b.elems.end());
  return FiniteSet(std::move(es));
}

FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Element> es;
  for (const auto& e : a.elems)
    if (!b.contains(e)) es.push_back(e);
  return FiniteSet(std::move(es));
}

Element pair_element(const Element& l, const Element& r) { return "(" + l + "," + r + ")"; }

FiniteSet set_product(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Element> es;
  for (const auto& l : a.elems)
    for (const auto& r : b.elems) es.push_back(pair_element(l, r));
  return FiniteSet(std::move(es));
}

Valuation::Valuation(FiniteSet dom, std::vector<MVValue> vals)
    : domain(std::move(dom)), values(std::move(vals)) {
  if (domain.size() != values.size()) throw Error("valuation size mismatch");
  for (size_t i = 1; i < values.size(); ++i)
    if (values[i].algebra != values[0].algebra) throw Error("mixed algebras in valuation");
}

const MVAlgebra& Valuation::algebra() const {
  if (values.empty()) throw Error("empty valuation has no algebra");
  return values[0].algebra;
}

const MVValue& Valuation::at(const Element& e) const { return values.at(domain.index_of(e)); }

bool Valuation::operator==(const Valuation& o) const {
  if (!domain.same_elements(o.domain)) return false;
  for (size_t i = 0; i < domain.size(); ++i)
    if (values[i].value != o.at(domain.elems[i]).value) return false;
  return true;
}

Valuation constant_valuation(const FiniteSet& dom, const MVValue& v) {
  return Valuation(dom, std::vector<MVValue>(dom.size(), v));
}

Valuation ones(const FiniteSet& dom, const MVAlgebra& a) {
  return constant_valuation(dom, mv_top(a));
}

Valuation zeros(const FiniteSet& dom, const MVAlgebra& a) {
  return constant_valuation(dom, mv_bottom(a));
}

Subset::Subset(FiniteSet dom, std::set<Element> mem)
    : domain(std::move(dom)), members(std::move(mem)) {
  for (const auto& e : members)
    if (!domain.contains(e)) throw Error("subset member '" + e + "' not in domain");
}

MVValue norm(const Valuation& a) {
  MVValue m = a.values.empty() ? MVValue{Rational(0), MVAlgebra{}} : a.values[0];
  for (size_t i = 1; i < a.values.size(); ++i) m = mv_join(m, a.values[i]);
  return m;
}

Subset support_nonzero(const Valuation& a) {
  std::set<Element> mem;
  for (size_t i = 0; i < a.domain.size(); ++i)
    if (a.values[i].value != 0) mem.insert(a.domain.elems[i]);
  return Subset(a.domain, std::move(mem));
}

Valuation delta_on(const Subset& s, const MVValue& delta, const MVAlgebra& alg) {
  std::vector<MVValue> vals;
  vals.reserve(s.domain.size());
  for (const auto& e : s.domain.elems)
    vals.push_back(s.contains(e) ? delta : mv_bottom(alg));
  return Valuation(s.domain, std::move(vals));
}

static void require_same_domain(const Valuation& a, const Valuation& b) {
  if (!a.domain.same_elements(b.domain)) throw Error("valuation domains differ");
}

Valuation pointwise_oplus(const Valuation& a, const Valuation& b) {
  require_same_domain(a, b);
  std::vector<MVValue> vals;
  for (const auto& e : a.domain.elems) vals.push_back(oplus(a.at(e), b.at(e)));
  return Valuation(a.domain, std::move(vals));
}

Valuation pointwise_ominus(const Valuation& a, const Valuation& b) {
  require_same_domain(a, b);
  std::vector<MVValue> vals;
  for (const auto& e : a.domain.elems) vals.push_back(ominus(a.at(e), b.at(e)));
  return Valuation(a.domain, std::move(vals));
}

Valuation pointwise_complement(const Valuation& a) {
  std::vector<MVValue> vals;
  for (const auto& v : a.values) vals.push_back(mv_complement(v));
  return Valuation(a.domain, std::move(vals));
}

bool pointwise_leq(const Valuation& a, const Valuation& b) {
  require_same_domain(a, b);
  for (const auto& e : a.domain.elems)
    if (!mv_leq(a.at(e), b.at(e))) return false;
  return true;
}

std::set<Element> disagreement(const Valuation& a, const Valuation& b) {
  require_same_domain(a, b);
  std::set<Element> out;
  for (const auto& e : a.domain.elems)
    if (a.at(e).value != b.at(e).value) out.insert(e);
  return out;
}

}  // namespace fixcheck
