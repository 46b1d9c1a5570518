#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "janus/automaton.hpp"
#include "janus/operating_mode.hpp"
#include "janus/pattern.hpp"

namespace janus {

enum class StateRole : std::uint8_t { Initial, LeftForth, LeftBack, RightForth, RightBack, Match, Final };

std::string to_string(StateRole role);

/// What a compiled state does. Movement states carry the factor position they
/// traverse; match states carry the matched pair (position, partner).
struct StateTag {
  StateRole role = StateRole::Initial;
  std::size_t block = 0;     // 1-based operating-mode block, 0 for initial/final
  std::size_t position = 0;  // moved-over factor, or left end of the match
  std::size_t partner = 0;   // right end of the match (Match only)
  std::size_t counter = 0;   // 1-based counter driving the state, 0 if none
};

struct CompiledPattern {
  Pattern pattern;
  JanusOperatingMode mode;
  CounterAssignment assignment;
  JanusAutomaton automaton;
  std::vector<StateTag> roles;  // indexed by StateId
};

/// Builds the automaton for the canonical operating mode of `p`; it has
/// vd(p) + 1 counters. Throws PatternError for trivially universal patterns.
CompiledPattern compile(const Pattern& p);

/// Builds the automaton for an arbitrary valid operating mode (cn + 1 counters).
/// Throws PatternError if the mode does not validate.
CompiledPattern compile_with_mode(const Pattern& p, const JanusOperatingMode& mode);

/// Reads the factor lengths off an accepting run: while the run sits in a
/// state for factor q, the bound of that state's counter is |u_q|.
/// Returns nullopt if some factor was never visited on the run.
std::optional<Factorization> factorization_from_run(const CompiledPattern& compiled,
                                                    const std::vector<Configuration>& run);

}  // namespace janus
