#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "janus/automaton.hpp"
#include "janus/compiler.hpp"
#include "janus/pattern.hpp"

namespace janus {

struct MatchOptions {
  std::size_t max_configs = 100'000'000;
  SearchOrder order = SearchOrder::DepthFirst;
};

struct MatchReport {
  bool matched = false;
  bool short_circuited = false;  // trivially universal pattern, no search
  std::size_t visited = 0;
  std::size_t counters = 0;
  std::size_t head_freezes = 0;
  std::size_t head_order_violations = 0;
  std::size_t max_live_counters = 0;
};

/// Decides w in L(p): trivially universal patterns accept at once, all
/// others are compiled and the computation graph is searched.
MatchReport match(const Pattern& p, std::string_view w, const MatchOptions& options = {});
MatchReport match(const CompiledPattern& compiled, std::string_view w, const MatchOptions& options = {});

bool match_test(const Pattern& p, std::string_view w);

/// Distinct configurations generated while deciding w in L(p).
std::size_t visited_bound(const Pattern& p, std::string_view w);

/// Matches every word against one compiled pattern. The OpenMP kernel and
/// the serial reference return identical reports.
std::vector<MatchReport> match_batch(const CompiledPattern& compiled, std::span<const std::string> words,
                                     const MatchOptions& options = {});
std::vector<MatchReport> match_batch_serial(const CompiledPattern& compiled, std::span<const std::string> words,
                                            const MatchOptions& options = {});

}  // namespace janus
