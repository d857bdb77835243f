#pragma once

#include "fixcheck/diagram.hpp"

namespace fixcheck {
namespace oracle {

/// Literal single-delta approximation, computed from evaluations only:
/// positions z in the nonzero support of f(a) where f(a) - f(a - delta on
/// Y') still exceeds delta.
std::set<size_t> approx_delta_pos(const Diagram& d, const std::vector<MVValue>& a,
                                  const MVValue& delta, const std::set<size_t>& yprime);
Subset approx_delta(const Diagram& d, const Valuation& a, const MVValue& delta,
                    const Subset& yprime);

/// Union over all deltas of a finite chain (delta in {1..k}).
std::set<size_t> approx_delta_union_pos(const Diagram& d, const std::vector<MVValue>& a,
                                        const std::set<size_t>& yprime);
Subset approx_delta_union(const Diagram& d, const Valuation& a, const Subset& yprime);

/// Kleene iteration from bottom / top; finite chains only.
Valuation brute_lfp(const DiagramPtr& d);
Valuation brute_gfp(const DiagramPtr& d);

}  // namespace oracle
}  // namespace fixcheck
