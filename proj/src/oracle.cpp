#include "janus/oracle.hpp"

#include <vector>

namespace janus {

namespace {

struct OracleSearch {
  std::vector<std::size_t> y;       // dense symbols
  std::vector<std::size_t> counts;  // occurrences per dense variable
  std::string_view w;
  std::vector<std::size_t> len;

  bool factors_agree() const {
    std::vector<std::size_t> first_offset(counts.size(), SIZE_MAX);
    std::size_t offset = 0;
    for (const std::size_t v : y) {
      if (first_offset[v] == SIZE_MAX) {
        first_offset[v] = offset;
      } else if (w.compare(offset, len[v], w.substr(first_offset[v], len[v])) != 0) {
        return false;
      }
      offset += len[v];
    }
    return true;
  }

  // Assigns len[v..] so that the weighted sum uses exactly `budget` letters.
  bool assign(std::size_t v, std::size_t budget) {
    if (v + 1 == counts.size()) {
      if (budget % counts[v] != 0) return false;
      len[v] = budget / counts[v];
      return factors_agree();
    }
    for (std::size_t l = 0; l * counts[v] <= budget; ++l) {
      len[v] = l;
      if (assign(v + 1, budget - l * counts[v])) return true;
    }
    return false;
  }
};

}  // namespace

bool oracle_membership(const Pattern& p, std::string_view w) {
  OracleSearch search;
  search.y = p.dense();
  search.counts.assign(p.var_count(), 0);
  for (const std::size_t v : search.y) ++search.counts[v];
  search.w = w;
  search.len.assign(p.var_count(), 0);
  return search.assign(0, w.size());
}

}  // namespace janus
