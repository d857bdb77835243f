#include "fixcheck/report.hpp"

#include <json.hpp>
#include <sstream>

namespace fixcheck {

std::string report_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = mode_str(r.mode);
  j["is_fixpoint"] = r.is_fixpoint;
  j["verdict"] = verdict_str(r.verdict);
  j["witness"] = nlohmann::ordered_json::array();
  for (const auto& e : r.witness) j["witness"].push_back(e);
  if (r.suggested_delta)
    j["suggested_delta"] = rational_str(r.suggested_delta->value);
  else
    j["suggested_delta"] = nullptr;
  if (r.corrected) {
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto& e : r.corrected->domain.elems) c[e] = rational_str(r.corrected->at(e).value);
    j["corrected"] = c;
  } else {
    j["corrected"] = nullptr;
  }
  j["iterations"] = nlohmann::ordered_json::array();
  for (const auto& it : r.iterations) {
    nlohmann::ordered_json step = nlohmann::ordered_json::array();
    for (const auto& e : it) step.push_back(e);
    j["iterations"].push_back(step);
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump(2) + "\n";
}

std::string report_text(const CheckReport& r, bool color) {
  auto paint = [&](const std::string& s, const char* code) {
    return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
  };
  std::ostringstream out;
  std::string v = verdict_str(r.verdict);
  const char* code = r.verdict == Verdict::Confirmed   ? "32"
                     : r.verdict == Verdict::Refuted   ? "31"
                                                       : "33";
  out << "mode: " << mode_str(r.mode) << "\n";
  out << "fixpoint: " << (r.is_fixpoint ? "yes" : "no") << "\n";
  out << "verdict: " << paint(v, code) << "\n";
  if (!r.witness.empty()) {
    out << "witness: {";
    bool first = true;
    for (const auto& e : r.witness) {
      out << (first ? "" : ", ") << e;
      first = false;
    }
    out << "}\n";
  }
  if (r.suggested_delta) out << "suggested delta: " << rational_str(r.suggested_delta->value) << "\n";
  if (r.corrected) {
    out << "corrected:";
    for (const auto& e : r.corrected->domain.elems)
      out << " " << e << "=" << rational_str(r.corrected->at(e).value);
    out << "\n";
  }
  if (!r.note.empty()) out << "note: " << r.note << "\n";
  return out.str();
}

int report_exit_code(const CheckReport& r) {
  switch (r.verdict) {
    case Verdict::Confirmed: return 0;
    case Verdict::Refuted: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 3;
}

}  // namespace fixcheck
