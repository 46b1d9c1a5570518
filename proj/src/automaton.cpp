#include "janus/automaton.hpp"

#include <algorithm>
#include <unordered_set>

namespace janus {

bool SymbolGuard::matches(TapeSymbol s) const {
  switch (kind) {
    case Kind::Any: return true;
    case Kind::Letter: return s < kLeftEnd;
    case Kind::NotLeftEnd: return s != kLeftEnd;
    case Kind::LeftEnd: return s == kLeftEnd;
    case Kind::RightEnd: return s == kRightEnd;
    case Kind::Exact: return s == static_cast<unsigned char>(letter);
  }
  return false;
}

int SymbolGuard::specificity() const {
  switch (kind) {
    case Kind::Any: return 0;
    case Kind::Letter:
    case Kind::NotLeftEnd: return 1;
    default: return 2;
  }
}

std::string SymbolGuard::to_string() const {
  switch (kind) {
    case Kind::Any: return "*";
    case Kind::Letter: return "letter";
    case Kind::NotLeftEnd: return "!¢";
    case Kind::LeftEnd: return "¢";
    case Kind::RightEnd: return "$";
    case Kind::Exact: return std::string(1, letter);
  }
  return "?";
}

StateId JanusAutomaton::add_state(std::string name) {
  names_.push_back(std::move(name));
  rows_.emplace_back();
  accepting_.push_back(false);
  return static_cast<StateId>(names_.size() - 1);
}

void JanusAutomaton::add_transition(Transition t) {
  if (t.from >= state_count() || t.to >= state_count())
    throw std::invalid_argument("transition refers to an unknown state");
  if (t.messages.size() != k_ || t.instructions.size() != k_)
    throw std::invalid_argument("transition must carry one message and one instruction per counter");
  if (t.move_left < -1 || t.move_left > 1 || t.move_right < -1 || t.move_right > 1)
    throw std::invalid_argument("head instructions must be -1, 0 or 1");
  rows_[t.from].push_back(std::move(t));
}

void JanusAutomaton::set_initial(StateId q) {
  if (q >= state_count()) throw std::invalid_argument("unknown initial state");
  initial_ = q;
}

void JanusAutomaton::add_accepting(StateId q) {
  if (q >= state_count()) throw std::invalid_argument("unknown accepting state");
  accepting_[q] = true;
}

std::vector<StateId> JanusAutomaton::accepting_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < state_count(); ++q)
    if (accepting_[q]) out.push_back(q);
  return out;
}

std::size_t JanusAutomaton::transition_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

const Transition* JanusAutomaton::find(StateId q, TapeSymbol left, TapeSymbol right,
                                       const std::uint32_t* counter_pairs) const {
  const Transition* best = nullptr;
  int best_score = -1;
  for (const Transition& t : rows_[q]) {
    if (!t.left.matches(left) || !t.right.matches(right)) continue;
    if (t.same_letter && (left != right || left >= kLeftEnd)) continue;
    int score = t.left.specificity() + t.right.specificity() + (t.same_letter ? 1 : 0);
    bool ok = true;
    for (std::size_t i = 0; i < k_ && ok; ++i) {
      const bool at_bound = counter_pairs[2 * i] == counter_pairs[2 * i + 1];
      switch (t.messages[i]) {
        case CounterMessage::Any: break;
        case CounterMessage::Equal: ok = at_bound; ++score; break;
        case CounterMessage::Less: ok = !at_bound; ++score; break;
      }
    }
    if (ok && score > best_score) {
      best = &t;
      best_score = score;
    }
  }
  return best;
}

const Transition* JanusAutomaton::find(StateId q, TapeSymbol left, TapeSymbol right,
                                       const std::vector<CounterValue>& counters) const {
  std::vector<std::uint32_t> flat;
  flat.reserve(2 * counters.size());
  for (const CounterValue& c : counters) {
    flat.push_back(c.value);
    flat.push_back(c.bound);
  }
  return find(q, left, right, flat.data());
}

Configuration initial_configuration(const JanusAutomaton& a) {
  Configuration c;
  c.state = a.initial();
  c.counters.assign(a.counters(), {});
  return c;
}

TapeSymbol tape_symbol(std::string_view w, std::uint32_t h) {
  if (h == 0) return kLeftEnd;
  if (h > w.size()) return kRightEnd;
  return static_cast<unsigned char>(w[h - 1]);
}

namespace {

// Configurations are stored flat: [state, h1, h2, value_1, bound_1, ...].
class ConfigArena {
 public:
  explicit ConfigArena(std::size_t counters) : stride_(3 + 2 * counters) {}

  std::size_t stride() const { return stride_; }
  std::size_t size() const { return data_.size() / stride_; }
  const std::uint32_t* at(std::size_t i) const { return data_.data() + i * stride_; }
  std::uint32_t* at(std::size_t i) { return data_.data() + i * stride_; }

  std::uint32_t* append() {
    data_.resize(data_.size() + stride_);
    return data_.data() + data_.size() - stride_;
  }
  void drop_last() { data_.resize(data_.size() - stride_); }

 private:
  std::size_t stride_;
  std::vector<std::uint32_t> data_;
};

struct ArenaHash {
  const ConfigArena* arena;
  std::size_t operator()(std::uint32_t i) const {
    const std::uint32_t* p = arena->at(i);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::size_t j = 0; j < arena->stride(); ++j) {
      h ^= p[j] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};

struct ArenaEqual {
  const ConfigArena* arena;
  bool operator()(std::uint32_t a, std::uint32_t b) const {
    return std::equal(arena->at(a), arena->at(a) + arena->stride(), arena->at(b));
  }
};

// Calls `emit(buffer)` for each successor of `src`; returns false if blocked.
template <typename Emit>
bool expand(const JanusAutomaton& a, std::string_view w, const std::uint32_t* src,
            std::vector<std::uint32_t>& scratch, std::size_t& head_freezes, Emit&& emit) {
  const std::size_t k = a.counters();
  const std::uint32_t h1 = src[1];
  const std::uint32_t h2 = src[2];
  const Transition* t = a.find(src[0], tape_symbol(w, h1), tape_symbol(w, h2), src + 3);
  if (t == nullptr) return false;

  const std::int64_t n1 = static_cast<std::int64_t>(h1) + t->move_left;
  const std::int64_t n2 = static_cast<std::int64_t>(h2) + t->move_right;
  const std::int64_t end = static_cast<std::int64_t>(w.size()) + 1;
  scratch.assign(3 + 2 * k, 0);
  scratch[0] = t->to;
  if (0 <= n1 && n1 <= n2 && n2 <= end) {
    scratch[1] = static_cast<std::uint32_t>(n1);
    scratch[2] = static_cast<std::uint32_t>(n2);
  } else {
    scratch[1] = h1;
    scratch[2] = h2;
    if (t->move_left != 0 || t->move_right != 0) ++head_freezes;
  }

  std::vector<std::size_t> resets;
  for (std::size_t i = 0; i < k; ++i) {
    const std::uint32_t value = src[3 + 2 * i];
    const std::uint32_t bound = src[4 + 2 * i];
    switch (t->instructions[i]) {
      case CounterInstruction::Keep:
        scratch[3 + 2 * i] = value;
        scratch[4 + 2 * i] = bound;
        break;
      case CounterInstruction::Increment:
        scratch[3 + 2 * i] = (value + 1) % (bound + 1);
        scratch[4 + 2 * i] = bound;
        break;
      case CounterInstruction::Reset:
        scratch[3 + 2 * i] = 0;
        scratch[4 + 2 * i] = 0;
        resets.push_back(i);
        break;
    }
  }
  // Odometer over the new bounds of all reset counters, ascending.
  const auto max_bound = static_cast<std::uint32_t>(w.size());
  while (true) {
    emit(scratch);
    std::size_t d = resets.size();
    while (d > 0) {
      std::uint32_t& b = scratch[4 + 2 * resets[d - 1]];
      if (b < max_bound) {
        ++b;
        break;
      }
      b = 0;
      --d;
    }
    if (d == 0) break;
  }
  return true;
}

Configuration unpack(const std::uint32_t* p, std::size_t k) {
  Configuration c;
  c.state = p[0];
  c.h1 = p[1];
  c.h2 = p[2];
  c.counters.resize(k);
  for (std::size_t i = 0; i < k; ++i) c.counters[i] = {p[3 + 2 * i], p[4 + 2 * i]};
  return c;
}

std::vector<std::uint32_t> pack(const Configuration& c) {
  std::vector<std::uint32_t> out{c.state, c.h1, c.h2};
  for (const auto& counter : c.counters) {
    out.push_back(counter.value);
    out.push_back(counter.bound);
  }
  return out;
}

}  // namespace

std::vector<Configuration> atomic_move(const JanusAutomaton& a, std::string_view w,
                                       const Configuration& c, std::size_t* head_freezes) {
  if (c.counters.size() != a.counters()) throw std::invalid_argument("configuration has wrong counter count");
  const std::vector<std::uint32_t> src = pack(c);
  std::vector<std::uint32_t> scratch;
  std::size_t freezes = 0;
  std::vector<Configuration> out;
  expand(a, w, src.data(), scratch, freezes,
         [&](const std::vector<std::uint32_t>& next) { out.push_back(unpack(next.data(), a.counters())); });
  if (head_freezes != nullptr) *head_freezes += freezes;
  return out;
}

SearchResult search(const JanusAutomaton& a, std::string_view w, const SearchOptions& options) {
  const std::size_t k = a.counters();
  SearchResult result;

  ConfigArena arena(k);
  std::unordered_set<std::uint32_t, ArenaHash, ArenaEqual> visited(1024, ArenaHash{&arena},
                                                                   ArenaEqual{&arena});
  std::vector<std::uint32_t> parent;
  std::optional<std::uint32_t> accepting_index;

  const auto record = [&](const std::uint32_t* cfg, std::uint32_t from) -> bool {
    std::uint32_t* slot = arena.append();
    std::copy(cfg, cfg + arena.stride(), slot);
    const auto index = static_cast<std::uint32_t>(arena.size() - 1);
    if (!visited.insert(index).second) {
      arena.drop_last();
      return false;
    }
    if (visited.size() > options.max_configs)
      throw ResourceLimitError("configuration budget of " + std::to_string(options.max_configs) +
                               " exceeded");
    if (options.record_witness) parent.push_back(from);
    const std::uint32_t* c = arena.at(index);
    if (c[1] > c[2]) ++result.head_order_violations;
    std::size_t live = 0;
    for (std::size_t i = 0; i < k; ++i) live += c[3 + 2 * i] >= 1 ? 1 : 0;
    result.max_live_counters = std::max(result.max_live_counters, live);
    if (a.is_accepting(c[0])) accepting_index = index;
    return true;
  };

  const std::vector<std::uint32_t> start = pack(initial_configuration(a));
  record(start.data(), UINT32_MAX);

  std::vector<std::uint32_t> stack{0};
  std::size_t cursor = 0;  // breadth-first: arena order is queue order
  std::vector<std::uint32_t> scratch;
  std::vector<std::uint32_t> current(arena.stride());
  while (!accepting_index) {
    std::uint32_t index;
    if (options.order == SearchOrder::DepthFirst) {
      if (stack.empty()) break;
      index = stack.back();
      stack.pop_back();
    } else {
      if (cursor >= arena.size()) break;
      index = static_cast<std::uint32_t>(cursor++);
    }
    std::copy(arena.at(index), arena.at(index) + arena.stride(), current.begin());
    expand(a, w, current.data(), scratch, result.head_freezes, [&](const std::vector<std::uint32_t>& next) {
      if (accepting_index) return;
      if (record(next.data(), index) && options.order == SearchOrder::DepthFirst)
        stack.push_back(static_cast<std::uint32_t>(arena.size() - 1));
    });
  }

  result.visited = visited.size();
  result.accepted = accepting_index.has_value();
  if (result.accepted && options.record_witness) {
    for (std::uint32_t i = *accepting_index; i != UINT32_MAX; i = parent[i])
      result.witness.push_back(unpack(arena.at(i), k));
    std::ranges::reverse(result.witness);
  }
  return result;
}

bool accepts(const JanusAutomaton& a, std::string_view w) { return search(a, w).accepted; }

}  // namespace janus
