#include "janus/diff.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>

#include "janus/compiler.hpp"
#include "janus/engine.hpp"
#include "janus/oracle.hpp"

namespace janus {

namespace {

void extend_patterns(std::vector<std::uint32_t>& current, std::uint32_t used, std::size_t max_len,
                     std::size_t max_vars, bool repeated_only, std::vector<Pattern>& out) {
  if (!current.empty()) {
    bool keep = true;
    if (repeated_only) {
      std::map<std::uint32_t, std::size_t> counts;
      for (const auto v : current) ++counts[v];
      keep = std::ranges::all_of(counts, [](const auto& kv) { return kv.second >= 2; });
    }
    if (keep) {
      std::vector<Variable> symbols;
      for (const auto v : current) symbols.push_back(Variable{v});
      out.emplace_back(std::move(symbols));
    }
  }
  if (current.size() == max_len) return;
  const std::uint32_t limit = std::min<std::uint32_t>(used + 1, static_cast<std::uint32_t>(max_vars));
  for (std::uint32_t v = 1; v <= limit; ++v) {
    current.push_back(v);
    extend_patterns(current, std::max(used, v), max_len, max_vars, repeated_only, out);
    current.pop_back();
  }
}

struct PatternOutcome {
  std::size_t cases = 0;
  std::size_t divergences = 0;
  std::optional<Divergence> first;
  std::size_t head_freezes = 0;
  std::size_t head_order_violations = 0;
  std::size_t max_live_counters = 0;
  std::size_t counters = 0;
};

PatternOutcome check_pattern(const Pattern& p, const std::vector<std::string>& words) {
  PatternOutcome outcome;
  std::optional<CompiledPattern> compiled;
  if (!is_trivially_universal(p)) compiled = compile(p);
  for (const std::string& w : words) {
    MatchReport report;
    if (compiled) {
      report = match(*compiled, w);
    } else {
      report = match(p, w);
    }
    const bool truth = oracle_membership(p, w);
    ++outcome.cases;
    outcome.head_freezes += report.head_freezes;
    outcome.head_order_violations += report.head_order_violations;
    outcome.max_live_counters = std::max(outcome.max_live_counters, report.max_live_counters);
    outcome.counters = std::max(outcome.counters, report.counters);
    if (report.matched != truth) {
      ++outcome.divergences;
      if (!outcome.first) outcome.first = Divergence{p, w, report.matched, truth};
    }
  }
  return outcome;
}

DiffSummary merge(const std::vector<PatternOutcome>& outcomes) {
  DiffSummary summary;
  for (const PatternOutcome& o : outcomes) {
    summary.cases += o.cases;
    summary.divergences += o.divergences;
    if (!summary.first_divergence && o.first) summary.first_divergence = o.first;
    summary.head_freezes += o.head_freezes;
    summary.head_order_violations += o.head_order_violations;
    summary.max_live_counters = std::max(summary.max_live_counters, o.max_live_counters);
    summary.max_counters = std::max(summary.max_counters, o.counters);
  }
  return summary;
}

}  // namespace

std::vector<Pattern> enumerate_patterns(std::size_t max_len, std::size_t max_vars, bool repeated_only) {
  std::vector<Pattern> out;
  std::vector<std::uint32_t> current;
  if (max_vars == 0) return out;
  extend_patterns(current, 0, max_len, max_vars, repeated_only, out);
  std::ranges::stable_sort(out, {}, &Pattern::size);
  return out;
}

std::vector<std::string> enumerate_words(std::size_t max_len, const std::string& alphabet) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (const char c : alphabet) out.push_back(out[i] + c);
    begin = end;
  }
  return out;
}

DiffSummary oracle_diff_serial(const DiffBounds& bounds) {
  const std::vector<Pattern> patterns = enumerate_patterns(bounds.max_pattern_len, bounds.max_vars, bounds.repeated_only);
  const std::vector<std::string> words = enumerate_words(bounds.max_word_len, bounds.alphabet);
  std::vector<PatternOutcome> outcomes;
  outcomes.reserve(patterns.size());
  for (const Pattern& p : patterns) outcomes.push_back(check_pattern(p, words));
  return merge(outcomes);
}

DiffSummary oracle_diff(const DiffBounds& bounds) {
  const std::vector<Pattern> patterns = enumerate_patterns(bounds.max_pattern_len, bounds.max_vars, bounds.repeated_only);
  const std::vector<std::string> words = enumerate_words(bounds.max_word_len, bounds.alphabet);
  std::vector<PatternOutcome> outcomes(patterns.size());
  const auto count = static_cast<std::ptrdiff_t>(patterns.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      outcomes[static_cast<std::size_t>(i)] = check_pattern(patterns[static_cast<std::size_t>(i)], words);
    } catch (...) {
#pragma omp critical(janus_diff_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return merge(outcomes);
}

DiffSummary oracle_diff_cases(const std::vector<std::pair<Pattern, std::string>>& cases) {
  std::vector<PatternOutcome> outcomes(cases.size());
  const auto count = static_cast<std::ptrdiff_t>(cases.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      const auto& [p, w] = cases[static_cast<std::size_t>(i)];
      outcomes[static_cast<std::size_t>(i)] = check_pattern(p, {w});
    } catch (...) {
#pragma omp critical(janus_diff_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return merge(outcomes);
}

Pattern random_pattern(std::mt19937_64& rng, std::size_t max_len, std::size_t max_vars) {
  if (max_len < 2 || max_vars == 0) throw PatternError("random_pattern needs max_len >= 2 and max_vars >= 1");
  const std::size_t vars_cap = std::min(max_vars, max_len / 2);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, vars_cap)(rng);
  const std::size_t len = std::uniform_int_distribution<std::size_t>(2 * m, max_len)(rng);
  std::vector<std::uint32_t> ids;
  for (std::uint32_t v = 1; v <= m; ++v) {
    ids.push_back(v);
    ids.push_back(v);
  }
  std::uniform_int_distribution<std::uint32_t> pick(1, static_cast<std::uint32_t>(m));
  while (ids.size() < len) ids.push_back(pick(rng));
  std::ranges::shuffle(ids, rng);
  std::vector<Variable> symbols;
  for (const auto v : ids) symbols.push_back(Variable{v});
  return Pattern(std::move(symbols));
}

std::string random_word(std::mt19937_64& rng, std::size_t length, const std::string& alphabet) {
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::string w(length, ' ');
  for (char& c : w) c = alphabet[pick(rng)];
  return w;
}

std::string planted_member(std::mt19937_64& rng, const Pattern& p, const std::string& alphabet, double mean_length) {
  std::geometric_distribution<std::size_t> length(1.0 / (1.0 + mean_length));
  std::map<Variable, std::string> image;
  for (const Variable v : p.variables()) image[v] = random_word(rng, length(rng), alphabet);
  std::string out;
  for (const Variable v : p.symbols()) out += image[v];
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
    if (x[i] > 0 && y[i] > 0) pts.emplace_back(std::log(x[i]), std::log(y[i]));
  if (pts.size() < 2) return 0.0;
  double mx = 0, my = 0;
  for (const auto& [a, b] : pts) {
    mx += a;
    my += b;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double sxy = 0, sxx = 0;
  for (const auto& [a, b] : pts) {
    sxy += (a - mx) * (b - my);
    sxx += (a - mx) * (a - mx);
  }
  return sxx == 0 ? 0.0 : sxy / sxx;
}

}  // namespace janus
