#include "janus/matching_order.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace janus {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool is_matching_order(const Pattern& p, Variable v, std::span<const MatchingPosition> pairs) {
  const std::vector<std::size_t> positions = variable_positions(p, v);
  if (positions.empty() || pairs.size() + 1 != positions.size()) return false;

  const auto node = [&](std::size_t pos) -> std::ptrdiff_t {
    const auto it = std::lower_bound(positions.begin(), positions.end(), pos);
    return (it != positions.end() && *it == pos) ? it - positions.begin() : -1;
  };

  // n - 1 edges connect n nodes iff every edge joins two components.
  DisjointSets sets(positions.size());
  for (const MatchingPosition raw : pairs) {
    const MatchingPosition m = MatchingPosition::normalized(raw.left, raw.right);
    if (m.left == m.right) return false;
    const std::ptrdiff_t a = node(m.left);
    const std::ptrdiff_t b = node(m.right);
    if (a < 0 || b < 0) return false;
    if (!sets.unite(static_cast<std::size_t>(a), static_cast<std::size_t>(b))) return false;
  }
  return true;
}

bool is_complete_matching_order(const Pattern& p, std::span<const MatchingPosition> order) {
  if (order.size() != p.size() - p.var_count()) return false;
  std::vector<std::vector<MatchingPosition>> per_variable(p.var_count());
  for (const MatchingPosition m : order) {
    if (m.left < 1 || m.right < 1 || m.left > p.size() || m.right > p.size()) return false;
    const Variable v = p.at(m.left);
    if (p.at(m.right) != v) return false;
    per_variable[p.index_of(v)].push_back(m);
  }
  for (std::size_t i = 0; i < p.var_count(); ++i) {
    const Variable v = p.variables()[i];
    // A once-occurring variable has the empty matching order.
    if (p.occurrences(v) == 1 && per_variable[i].empty()) continue;
    if (!is_matching_order(p, v, per_variable[i])) return false;
  }
  return true;
}

CompleteMatchingOrder canonical_matching_order(const Pattern& p) {
  const std::vector<std::size_t> y = p.dense();
  std::vector<std::size_t> last_seen(p.var_count(), 0);
  CompleteMatchingOrder order;
  order.reserve(p.size() - p.var_count());
  for (std::size_t j = 1; j <= p.size(); ++j) {
    std::size_t& prev = last_seen[y[j - 1]];
    if (prev != 0) order.push_back({prev, j});
    prev = j;
  }
  for (const Variable v : p.variables())
    if (p.occurrences(v) == 1)
      throw PatternError("variable " + v.name() + " occurs only once; pattern is trivially universal");

  std::ranges::sort(order, {}, &MatchingPosition::left);
  // Each position is the left end of at most one consecutive pair.
  assert(std::ranges::adjacent_find(order, {}, &MatchingPosition::left) == order.end());
  return order;
}

bool check_characteristic(const Pattern& p, std::string_view w, const Factorization& f,
                          std::span<const MatchingPosition> order) {
  if (f.lengths.size() != p.size() || f.total() != w.size()) return false;
  const std::vector<std::size_t> offsets = f.offsets();
  for (const MatchingPosition m : order) {
    if (m.left < 1 || m.right < 1 || m.left > p.size() || m.right > p.size()) return false;
    const std::size_t len_l = f.lengths[m.left - 1];
    const std::size_t len_r = f.lengths[m.right - 1];
    if (len_l != len_r) return false;
    if (w.substr(offsets[m.left - 1], len_l) != w.substr(offsets[m.right - 1], len_r)) return false;
  }
  return true;
}

}  // namespace janus
