#pragma once

#include <string_view>

#include "janus/pattern.hpp"

namespace janus {

/// Brute-force membership test used as ground truth in differential tests.
///
/// Enumerates per-variable length vectors lexicographically, keeps only those
/// satisfying sum_i |p|_{x_i} * len_i = |w|, and checks that equal variables
/// receive equal factors. Exponential in the number of variables; intended
/// for small instances only. Shares no code with the automaton pipeline.
bool oracle_membership(const Pattern& p, std::string_view w);

}  // namespace janus
