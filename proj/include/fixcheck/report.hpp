#pragma once

#include "fixcheck/fixpoint.hpp"

namespace fixcheck {

/// Deterministic JSON rendering of a check report; rationals appear as
/// "p/q" strings.
std::string report_json(const CheckReport& r);

/// Human-readable one-screen summary; ANSI colors when enabled.
std::string report_text(const CheckReport& r, bool color);

int report_exit_code(const CheckReport& r);

}  // namespace fixcheck
