#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "janus/pattern.hpp"

namespace janus {

/// A pair (l, r) of positions holding the same variable, l < r.
struct MatchingPosition {
  std::size_t left = 0;
  std::size_t right = 0;

  bool operator==(const MatchingPosition&) const = default;

  /// Orders the endpoints so that left <= right.
  static MatchingPosition normalized(std::size_t a, std::size_t b) {
    return a < b ? MatchingPosition{a, b} : MatchingPosition{b, a};
  }
};

using CompleteMatchingOrder = std::vector<MatchingPosition>;

/// Checks that `pairs` is a matching order for `v` in `p`: n_v - 1 pairs over
/// the positions of v whose graph is connected. Pairs are normalized to
/// (min, max) first; a pair with equal endpoints is rejected.
bool is_matching_order(const Pattern& p, Variable v, std::span<const MatchingPosition> pairs);

/// Checks that `order` splits per variable into matching orders and has
/// exactly |p| - |var(p)| entries.
bool is_complete_matching_order(const Pattern& p, std::span<const MatchingPosition> order);

/// Consecutive-occurrence pairs of every variable, sorted by left element.
/// Throws PatternError if some variable occurs only once.
CompleteMatchingOrder canonical_matching_order(const Pattern& p);

/// True iff every matching position in `order` compares equal factors of `w`
/// under the factor lengths `f`. Returns false if `f` does not have one
/// length per position or its lengths do not sum to |w|.
bool check_characteristic(const Pattern& p, std::string_view w, const Factorization& f,
                          std::span<const MatchingPosition> order);

}  // namespace janus
