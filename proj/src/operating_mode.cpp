#include "janus/operating_mode.hpp"

#include <algorithm>
#include <stdexcept>

namespace janus {

std::vector<std::size_t> passed_factors(std::size_t from, std::size_t to) {
  std::vector<std::size_t> out;
  if (from < to) {
    for (std::size_t q = from + 1; q < to; ++q) out.push_back(q);
  } else {
    for (std::size_t q = from; q >= to && q > 0; --q) out.push_back(q);
  }
  return out;
}

JanusOperatingMode canonical_operating_mode(const Pattern& p, const CompleteMatchingOrder& order) {
  if (order != canonical_matching_order(p))
    throw PatternError("canonical operating mode requires the canonical matching order");

  JanusOperatingMode mode;
  mode.source = order;
  mode.blocks.reserve(order.size());

  const auto push_run = [](MovementBlock& block, const std::vector<std::size_t>& positions, Head head) {
    for (const std::size_t q : positions) block.push_back({q, head});
  };

  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [l, r] = order[i];
    MovementBlock block;
    if (i == 0) {
      push_run(block, passed_factors(0, r), Head::Right);
    } else {
      const auto [prev_l, prev_r] = order[i - 1];
      if (l <= prev_r) {
        push_run(block, passed_factors(prev_l, l), Head::Left);
        push_run(block, passed_factors(prev_r, r), Head::Right);
      } else {
        // Left head catches up with the right head, then both advance together.
        for (std::size_t q = prev_l + 1; q <= prev_r; ++q) block.push_back({q, Head::Left});
        for (std::size_t q = prev_r + 1; q < l; ++q) {
          block.push_back({q, Head::Right});
          block.push_back({q, Head::Left});
        }
        for (std::size_t q = l; q < r; ++q) block.push_back({q, Head::Right});
      }
    }
    block.push_back({r, Head::Right});
    block.push_back({l, Head::Left});
    mode.blocks.push_back(std::move(block));
  }
  return mode;
}

bool validate_operating_mode(const Pattern& p, const JanusOperatingMode& mode) {
  CompleteMatchingOrder closing;
  for (const MovementBlock& block : mode.blocks) {
    if (block.size() < 2) return false;
    const HeadMovementStep& right = block[block.size() - 2];
    const HeadMovementStep& left = block.back();
    if (right.head != Head::Right || left.head != Head::Left) return false;
    if (left.position >= right.position) return false;
    closing.push_back({left.position, right.position});
  }
  if (closing != mode.source) return false;
  if (!is_complete_matching_order(p, closing)) return false;

  std::size_t prev_l = 0;
  std::size_t prev_r = 0;
  std::size_t reach_l = 0;
  std::size_t reach_r = 0;
  // Factor boundary each head currently sits on: passing factor q forward
  // ends on boundary q, passing it backward ends on boundary q - 1.
  std::size_t at_l = 0;
  std::size_t at_r = 0;
  for (std::size_t i = 0; i < mode.blocks.size(); ++i) {
    const MovementBlock& block = mode.blocks[i];
    const auto [l, r] = closing[i];

    // The moves must interleave the two head paths without reordering either.
    std::vector<std::size_t> left_moves;
    std::vector<std::size_t> right_moves;
    for (std::size_t s = 0; s + 2 < block.size(); ++s)
      (block[s].head == Head::Left ? left_moves : right_moves).push_back(block[s].position);
    if (left_moves != passed_factors(prev_l, l)) return false;
    if (right_moves != passed_factors(prev_r, r)) return false;

    const bool left_forth = prev_l < l;
    const bool right_forth = prev_r < r;
    for (std::size_t s = 0; s < block.size(); ++s) {
      const HeadMovementStep& step = block[s];
      if (step.position < 1 || step.position > p.size()) return false;
      const bool left = step.head == Head::Left;
      std::size_t& reach = left ? reach_l : reach_r;
      reach = std::max(reach, step.position);
      if (reach_l > reach_r) return false;
      const bool closing = s + 2 >= block.size();
      const bool forth = closing || (left ? left_forth : right_forth);
      (left ? at_l : at_r) = forth ? step.position : step.position - 1;
      if (at_l > at_r) return false;
    }
    prev_l = l;
    prev_r = r;
  }
  return true;
}

HeadMovementIndicator head_movement_indicator(const JanusOperatingMode& mode) {
  HeadMovementIndicator out;
  for (const MovementBlock& block : mode.blocks) out.insert(out.end(), block.begin(), block.end());
  return out;
}

namespace {

// Dense variable index of every indicator step.
std::vector<std::size_t> indicator_variables(const Pattern& p, const JanusOperatingMode& mode) {
  const std::vector<std::size_t> y = p.dense();
  std::vector<std::size_t> out;
  for (const HeadMovementStep& step : head_movement_indicator(mode)) out.push_back(y.at(step.position - 1));
  return out;
}

}  // namespace

std::size_t counter_number(const Pattern& p, const JanusOperatingMode& mode) {
  const std::vector<std::size_t> seq = indicator_variables(p, mode);
  std::vector<std::size_t> first(p.var_count(), SIZE_MAX);
  std::vector<std::size_t> last(p.var_count(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    first[seq[i]] = std::min(first[seq[i]], i);
    last[seq[i]] = i;
  }
  std::size_t cn = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    std::size_t open = 0;
    for (std::size_t x = 0; x < p.var_count(); ++x)
      if (x != seq[i] && first[x] != SIZE_MAX && first[x] < i && i < last[x]) ++open;
    cn = std::max(cn, open);
  }
  return cn;
}

CounterAssignment counter_assignment(const Pattern& p, const JanusOperatingMode& mode) {
  const std::vector<std::size_t> seq = indicator_variables(p, mode);
  std::vector<std::size_t> last(p.var_count(), 0);
  for (std::size_t i = 0; i < seq.size(); ++i) last[seq[i]] = i;

  CounterAssignment result;
  result.counter_count = counter_number(p, mode) + 1;

  std::vector<std::size_t> assigned(p.var_count(), 0);
  std::vector<bool> occupied(p.size() + 2, false);  // index 0 unused
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const std::size_t x = seq[i];
    if (assigned[x] == 0) {
      std::size_t c = 1;
      while (occupied[c]) ++c;
      if (c > result.counter_count)
        throw std::logic_error("counter assignment needs counter " + std::to_string(c) +
                               " but only " + std::to_string(result.counter_count) + " exist");
      assigned[x] = c;
      occupied[c] = true;
      result.highest_used = std::max(result.highest_used, c);
    }
    if (i == last[x]) occupied[assigned[x]] = false;
  }
  for (std::size_t x = 0; x < p.var_count(); ++x)
    if (assigned[x] != 0) result.counter_of[p.variables()[x]] = assigned[x];
  return result;
}

}  // namespace janus
