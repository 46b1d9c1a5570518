#include "janus/engine.hpp"

#include <exception>

namespace janus {

MatchReport match(const CompiledPattern& compiled, std::string_view w, const MatchOptions& options) {
  SearchOptions search_options;
  search_options.order = options.order;
  search_options.max_configs = options.max_configs;
  const SearchResult r = search(compiled.automaton, w, search_options);

  MatchReport report;
  report.matched = r.accepted;
  report.visited = r.visited;
  report.counters = compiled.automaton.counters();
  report.head_freezes = r.head_freezes;
  report.head_order_violations = r.head_order_violations;
  report.max_live_counters = r.max_live_counters;
  return report;
}

MatchReport match(const Pattern& p, std::string_view w, const MatchOptions& options) {
  if (is_trivially_universal(p)) {
    MatchReport report;
    report.matched = true;
    report.short_circuited = true;
    return report;
  }
  return match(compile(p), w, options);
}

bool match_test(const Pattern& p, std::string_view w) { return match(p, w).matched; }

std::size_t visited_bound(const Pattern& p, std::string_view w) { return match(p, w).visited; }

std::vector<MatchReport> match_batch_serial(const CompiledPattern& compiled, std::span<const std::string> words,
                                            const MatchOptions& options) {
  std::vector<MatchReport> out;
  out.reserve(words.size());
  for (const std::string& w : words) out.push_back(match(compiled, w, options));
  return out;
}

std::vector<MatchReport> match_batch(const CompiledPattern& compiled, std::span<const std::string> words,
                                     const MatchOptions& options) {
  std::vector<MatchReport> out(words.size());
  const auto count = static_cast<std::ptrdiff_t>(words.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = match(compiled, words[static_cast<std::size_t>(i)], options);
    } catch (...) {
#pragma omp critical(janus_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace janus
