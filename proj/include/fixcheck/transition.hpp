#pragma once

#include "fixcheck/liftings.hpp"

namespace fixcheck {

/// A parsed transition-system file (.mc, .lmc or .nts), plus any named
/// candidate valuations declared inline.
struct TransitionSystem {
  enum class Kind { MC, LMC, NTS } kind;
  MarkovChain mc;
  LabelledMarkovChain lmc;
  NondetTS nts;
  std::map<std::string, std::map<Element, Rational>> valuations;

  const FiniteSet& states() const;
};

TransitionSystem parse_transition_system(const std::string& text, const std::string& filename);

/// Resolves "ones", "zeros" or an inline valuation name over the given
/// carrier (states for .mc, state pairs for metrics).
Valuation resolve_candidate(const TransitionSystem& ts, const std::string& name,
                            const FiniteSet& carrier);

}  // namespace fixcheck
