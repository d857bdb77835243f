#pragma once

#include <vector>

#include "fixcheck/mv.hpp"

namespace fixcheck {

struct LpResult {
  bool feasible = false;
  Rational value = 0;
  std::vector<Rational> x;
};

/// Minimizes c.x subject to A x = b, x >= 0, over exact rationals.
/// Two-phase dense simplex with Bland's rule (terminates, no cycling).
LpResult lp_minimize(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                     std::vector<Rational> c);

}  // namespace fixcheck
