#include "fixcheck/oracle.hpp"

namespace fixcheck {
namespace oracle {

std::set<size_t> approx_delta_pos(const Diagram& d, const std::vector<MVValue>& a,
                                  const MVValue& delta, const std::set<size_t>& yprime) {
  if (delta.value <= 0) throw Error("oracle delta must be strictly positive");
  for (size_t i : yprime)
    if (a.at(i).value == 0) throw Error("oracle subset must lie inside the nonzero support");
  std::vector<MVValue> decreased = a;
  for (size_t i : yprime) decreased[i] = ominus(decreased[i], delta);
  std::vector<MVValue> fa = evaluate_pos(d, a);
  std::vector<MVValue> fd = evaluate_pos(d, decreased);
  std::set<size_t> out;
  for (size_t z = 0; z < fa.size(); ++z)
    if (fa[z].value != 0 && mv_leq(delta, ominus(fa[z], fd[z]))) out.insert(z);
  return out;
}

Subset approx_delta(const Diagram& d, const Valuation& a, const MVValue& delta,
                    const Subset& yprime) {
  std::vector<MVValue> pos;
  std::set<size_t> u;
  for (size_t i = 0; i < d.input.size(); ++i) {
    pos.push_back(a.at(d.input[i]));
    if (yprime.contains(d.input[i])) u.insert(i);
  }
  std::set<size_t> res = approx_delta_pos(d, pos, delta, u);
  std::set<Element> mem;
  for (size_t i : res) mem.insert(d.output[i]);
  return Subset(boundary_output(d), std::move(mem));
}

std::set<size_t> approx_delta_union_pos(const Diagram& d, const std::vector<MVValue>& a,
                                        const std::set<size_t>& yprime) {
  if (d.alg.kind != AlgebraKind::FiniteChain)
    throw Error("the exhaustive delta union is defined on finite chains only");
  std::set<size_t> out;
  for (long delta = 1; delta <= d.alg.k; ++delta)
    for (size_t z : approx_delta_pos(d, a, mv(d.alg, delta), yprime)) out.insert(z);
  return out;
}

Subset approx_delta_union(const Diagram& d, const Valuation& a, const Subset& yprime) {
  if (d.alg.kind != AlgebraKind::FiniteChain)
    throw Error("the exhaustive delta union is defined on finite chains only");
  std::set<Element> mem;
  for (long delta = 1; delta <= d.alg.k; ++delta)
    for (const auto& e : approx_delta(d, a, mv(d.alg, delta), yprime).members) mem.insert(e);
  return Subset(boundary_output(d), std::move(mem));
}

static Valuation kleene(const DiagramPtr& d, Valuation b) {
  for (;;) {
    Valuation fb = evaluate(*d, b);
    if (fb == b) return b;
    b = fb;
  }
}

Valuation brute_lfp(const DiagramPtr& d) {
  if (d->alg.kind != AlgebraKind::FiniteChain)
    throw Error("brute-force fixpoints are computed on finite chains only");
  if (!is_endo(*d)) throw Error("brute-force fixpoints need an endo diagram");
  return kleene(d, zeros(boundary_input(*d), d->alg));
}

Valuation brute_gfp(const DiagramPtr& d) {
  if (d->alg.kind != AlgebraKind::FiniteChain)
    throw Error("brute-force fixpoints are computed on finite chains only");
  if (!is_endo(*d)) throw Error("brute-force fixpoints need an endo diagram");
  return kleene(d, ones(boundary_input(*d), d->alg));
}

}  // namespace oracle
}  // namespace fixcheck
