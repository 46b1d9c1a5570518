#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "janus/compiler.hpp"
#include "janus/matching_order.hpp"
#include "janus/operating_mode.hpp"
#include "janus/pattern.hpp"

namespace janus {

/// Summary of the quantities derived from a pattern. The mode-dependent
/// fields are empty for trivially universal patterns.
struct AnalysisReport {
  std::string pattern;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t vd = 0;
  bool trivially_universal = false;
  std::optional<std::size_t> cn;
  std::optional<std::size_t> pi;
  std::optional<CounterAssignment> assignment;
  std::optional<CompleteMatchingOrder> matching_order;
  std::optional<JanusOperatingMode> mode;
};

/// Throws std::logic_error if the canonical mode's counter number differs
/// from the variable distance.
AnalysisReport analyze(const Pattern& p);

nlohmann::json to_json(const CompleteMatchingOrder& order);
nlohmann::json to_json(const JanusOperatingMode& mode);
nlohmann::json to_json(const CounterAssignment& assignment);
nlohmann::json to_json(const AnalysisReport& report);

/// Automaton dump: role-tagged states, k, and transition rows with
/// messages "=", "<", "*" and instructions "0", "1", "r".
nlohmann::json dump_automaton(const CompiledPattern& compiled);

std::string format_mode(const JanusOperatingMode& mode);

}  // namespace janus
