#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "janus/pattern.hpp"

namespace janus {

/// All patterns of length 1..max_len over at most max_vars variables, one per
/// renaming class (variables numbered in order of first occurrence).
/// With `repeated_only`, every variable must occur at least twice.
std::vector<Pattern> enumerate_patterns(std::size_t max_len, std::size_t max_vars, bool repeated_only = false);

/// All words over `alphabet` of length 0..max_len.
std::vector<std::string> enumerate_words(std::size_t max_len, const std::string& alphabet);

struct Divergence {
  Pattern pattern;
  std::string word;
  bool engine = false;
  bool oracle = false;
};

struct DiffSummary {
  std::size_t cases = 0;
  std::optional<Divergence> first_divergence;
  std::size_t divergences = 0;
  std::size_t head_freezes = 0;
  std::size_t head_order_violations = 0;
  std::size_t max_live_counters = 0;
  std::size_t max_counters = 0;

  bool ok() const { return divergences == 0; }
};

struct DiffBounds {
  std::size_t max_pattern_len = 6;
  std::size_t max_vars = 3;
  std::size_t max_word_len = 6;
  std::string alphabet = "ab";
  bool repeated_only = false;
};

/// Compares the automaton pipeline with the brute-force oracle on every
/// (pattern, word) pair within the bounds. Patterns are spread over OpenMP
/// threads; the serial reference produces the same summary.
DiffSummary oracle_diff(const DiffBounds& bounds);
DiffSummary oracle_diff_serial(const DiffBounds& bounds);

/// Same comparison over an explicit list of cases.
DiffSummary oracle_diff_cases(const std::vector<std::pair<Pattern, std::string>>& cases);

/// Random pattern of length <= max_len over <= max_vars variables in which
/// every variable occurs at least twice. Requires max_len >= 2.
Pattern random_pattern(std::mt19937_64& rng, std::size_t max_len, std::size_t max_vars);

/// Uniformly random word of the given length.
std::string random_word(std::mt19937_64& rng, std::size_t length, const std::string& alphabet);

/// Image of `p` under a random substitution whose per-variable word lengths
/// are geometric with the given mean.
std::string planted_member(std::mt19937_64& rng, const Pattern& p, const std::string& alphabet,
                           double mean_length = 1.5);

/// Least-squares slope of log(y) against log(x). Points with x or y <= 0 are
/// skipped; returns 0 with fewer than two usable points.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace janus
