#pragma once

#include <functional>

#include "fixcheck/diagram.hpp"

namespace fixcheck {

enum class Mode { Least, Greatest, PostBelowLeast, PreAboveGreatest };
enum class Verdict { Confirmed, Refuted, Inconclusive };

std::string mode_str(Mode m);
std::string verdict_str(Verdict v);

struct CheckReport {
  Mode mode = Mode::Least;
  bool is_fixpoint = false;
  Verdict verdict = Verdict::Inconclusive;
  std::set<Element> witness;                 // nonempty greatest/least obstruction, if any
  std::optional<MVValue> suggested_delta;
  std::optional<Valuation> corrected;
  std::vector<std::set<Element>> iterations;  // descent trace of the approximation
  std::string note;
};

/// Greatest fixpoint of U |-> approximate(d, a, U), by Kleene descent from
/// the nonzero support of a. Optionally records the iterates.
Subset gfp_approx(const Diagram& d, const Valuation& a,
                  std::vector<std::set<Element>>* trace = nullptr);

/// Function-level entry points, for lifted functions that are not given
/// as diagrams (e.g. the Hausdorff-lifted function of a powerset system).
using ApplyFn = std::function<Valuation(const Valuation&)>;
using ApproxFn = std::function<Subset(const Valuation&, const Subset&)>;

CheckReport check_least_fn(const ApplyFn& f, const ApproxFn& approx, const Valuation& a);
CheckReport check_post_below_least_fn(const ApplyFn& f, const ApproxFn& approx,
                                      const Valuation& a);
std::pair<MVValue, Valuation> suggest_decrease_fn(const ApplyFn& f, const Valuation& a,
                                                  const std::set<Element>& witness);

CheckReport check_least(const DiagramPtr& d, const Valuation& a);
CheckReport check_greatest(const DiagramPtr& d, const Valuation& a);
CheckReport check_post_below_least(const DiagramPtr& d, const Valuation& a);
CheckReport check_pre_above_greatest(const DiagramPtr& d, const Valuation& a);

/// Largest verified delta such that a - delta on the witness is a
/// pre-fixpoint, and the corresponding corrected valuation. On finite
/// chains the scan is exhaustive; on the real interval the search probes
/// at most 64 candidates, each verified exactly.
std::pair<MVValue, Valuation> suggest_decrease(const DiagramPtr& d, const Valuation& a,
                                               const std::set<Element>& witness);

struct IterateResult {
  Valuation result;
  bool reached_least = false;  // confirmed least fixpoint
  int rounds = 0;
  Rational residual = 0;       // norm of b - f(b) at exit
  std::string note;
};

/// Alternates Kleene descent with detect-and-decrease rounds, starting from
/// a (pre-)fixpoint above the least one.
IterateResult iterate_to_least_from_above(const DiagramPtr& d, const Valuation& a,
                                          int max_rounds, const Rational& epsilon);

}  // namespace fixcheck
