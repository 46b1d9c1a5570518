#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "janus/matching_order.hpp"
#include "janus/pattern.hpp"

namespace janus {

enum class Head : std::uint8_t { Left, Right };

/// One entry (position, head) of an operating mode: move `head` over the
/// factor at `position`, or, for the two closing entries of a block, the
/// factors being matched.
struct HeadMovementStep {
  std::size_t position = 0;
  Head head = Head::Left;

  bool operator==(const HeadMovementStep&) const = default;
};

using MovementBlock = std::vector<HeadMovementStep>;

/// A schedule of head movements realizing a complete matching order.
///
/// Block i holds the moves that bring the heads from matching position
/// m_{i-1} to m_i, followed by (r_i, Right) and (l_i, Left).
struct JanusOperatingMode {
  std::vector<MovementBlock> blocks;
  CompleteMatchingOrder source;

  bool operator==(const JanusOperatingMode&) const = default;
};

using HeadMovementIndicator = std::vector<HeadMovementStep>;

/// Positions a head passes when moving from factor `from` towards factor `to`:
/// (from+1, ..., to-1) when from < to, otherwise (from, from-1, ..., to).
std::vector<std::size_t> passed_factors(std::size_t from, std::size_t to);

/// Builds the canonical mode: the left head moves first, and when its path
/// would overtake the right head the two heads advance in lockstep.
/// Throws PatternError unless `order` is the canonical matching order of `p`.
JanusOperatingMode canonical_operating_mode(const Pattern& p, const CompleteMatchingOrder& order);

/// Structural validity plus two replay conditions checked after every step:
/// the furthest factor reached by the left head does not exceed the furthest
/// factor reached by the right head, and the factor boundary the left head
/// currently sits on does not exceed the right head's.
bool validate_operating_mode(const Pattern& p, const JanusOperatingMode& mode);

HeadMovementIndicator head_movement_indicator(const JanusOperatingMode& mode);

/// max over indicator steps i of the number of variables x != y_{d_i} that
/// occur in the indicator both strictly before and strictly after i.
std::size_t counter_number(const Pattern& p, const JanusOperatingMode& mode);

/// Assignment of a counter to each variable such that two variables whose
/// indicator occurrences interleave (x..z..x) never share a counter.
struct CounterAssignment {
  std::map<Variable, std::size_t> counter_of;  // 1-based counter index
  std::size_t counter_count = 0;               // cn + 1
  std::size_t highest_used = 0;

  std::size_t operator()(Variable v) const { return counter_of.at(v); }
};

/// Greedy scan over the indicator: a variable takes the lowest free counter
/// at its first occurrence and frees it after its last one. Throws
/// std::logic_error if more than cn + 1 counters would be needed.
CounterAssignment counter_assignment(const Pattern& p, const JanusOperatingMode& mode);

}  // namespace janus
