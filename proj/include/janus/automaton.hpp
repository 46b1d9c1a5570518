#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace janus {

using StateId = std::uint32_t;

/// Tape symbols: letters are their byte value; the endmarkers sit above.
using TapeSymbol = std::uint16_t;
inline constexpr TapeSymbol kLeftEnd = 256;   // ¢
inline constexpr TapeSymbol kRightEnd = 257;  // $

enum class CounterMessage : std::uint8_t { Equal, Less, Any };
enum class CounterInstruction : std::uint8_t { Keep, Increment, Reset };

/// Condition on the symbol scanned by one head.
struct SymbolGuard {
  enum class Kind : std::uint8_t { Any, Letter, NotLeftEnd, LeftEnd, RightEnd, Exact };
  Kind kind = Kind::Any;
  char letter = 0;  // Kind::Exact only

  static SymbolGuard any() { return {Kind::Any}; }
  static SymbolGuard letters() { return {Kind::Letter}; }
  static SymbolGuard not_left_end() { return {Kind::NotLeftEnd}; }
  static SymbolGuard left_end() { return {Kind::LeftEnd}; }
  static SymbolGuard right_end() { return {Kind::RightEnd}; }
  static SymbolGuard exact(char c) { return {Kind::Exact, c}; }

  bool matches(TapeSymbol s) const;
  int specificity() const;
  std::string to_string() const;

  bool operator==(const SymbolGuard&) const = default;
};

/// One row of the transition function. A row applies when both symbol guards
/// hold, `same_letter` (if set) finds the same letter under both heads, and
/// every non-wildcard counter message agrees with the configuration.
struct Transition {
  StateId from = 0;
  SymbolGuard left;
  SymbolGuard right;
  bool same_letter = false;
  std::vector<CounterMessage> messages;
  StateId to = 0;
  std::int8_t move_left = 0;
  std::int8_t move_right = 0;
  std::vector<CounterInstruction> instructions;
};

/// A Janus automaton: two-way, two heads, `k` restricted counters.
///
/// States are dense ids handed out by `add_state`. Rows are kept per state;
/// when several rows apply, the one with the fewest wildcards wins (ties go
/// to the row added first).
class JanusAutomaton {
 public:
  explicit JanusAutomaton(std::size_t counters) : k_(counters) {}

  StateId add_state(std::string name);
  void add_transition(Transition t);
  void set_initial(StateId q);
  void add_accepting(StateId q);

  std::size_t counters() const { return k_; }
  std::size_t state_count() const { return names_.size(); }
  const std::string& state_name(StateId q) const { return names_.at(q); }
  StateId initial() const { return initial_; }
  bool is_accepting(StateId q) const { return accepting_.at(q); }
  std::vector<StateId> accepting_states() const;

  const std::vector<Transition>& rows(StateId q) const { return rows_.at(q); }
  std::size_t transition_count() const;

  /// Optional input alphabet; informational only.
  const std::optional<std::string>& alphabet() const { return alphabet_; }
  void set_alphabet(std::string sigma) { alphabet_ = std::move(sigma); }

  struct CounterValue {
    std::uint32_t value = 0;
    std::uint32_t bound = 0;
    bool operator==(const CounterValue&) const = default;
  };

  /// The applicable row, or nullptr if the machine blocks.
  const Transition* find(StateId q, TapeSymbol left, TapeSymbol right,
                         const std::vector<CounterValue>& counters) const;
  const Transition* find(StateId q, TapeSymbol left, TapeSymbol right,
                         const std::uint32_t* counter_pairs) const;

 private:
  std::size_t k_;
  std::vector<std::string> names_;
  std::vector<std::vector<Transition>> rows_;
  std::vector<bool> accepting_;
  StateId initial_ = 0;
  std::optional<std::string> alphabet_;
};

/// (state, h1, h2, (c_1, C_1), ..., (c_k, C_k)); heads range over 0..|w|+1
/// where 0 scans ¢ and |w|+1 scans $.
struct Configuration {
  StateId state = 0;
  std::uint32_t h1 = 0;
  std::uint32_t h2 = 0;
  std::vector<JanusAutomaton::CounterValue> counters;

  bool operator==(const Configuration&) const = default;
};

Configuration initial_configuration(const JanusAutomaton& a);

/// Symbol at head position `h` of the input ¢w$.
TapeSymbol tape_symbol(std::string_view w, std::uint32_t h);

/// Successors under one atomic move. Counter resets branch over every bound
/// 0..|w| (the cross product when several counters reset), bounds ascending.
/// Head moves that would leave 0 <= h1 <= h2 <= |w|+1 leave both heads in
/// place; `head_freezes`, if given, counts such moves.
std::vector<Configuration> atomic_move(const JanusAutomaton& a, std::string_view w,
                                       const Configuration& c, std::size_t* head_freezes = nullptr);

/// Raised when a search exceeds its configuration budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SearchOrder : std::uint8_t { DepthFirst, BreadthFirst };

struct SearchOptions {
  SearchOrder order = SearchOrder::DepthFirst;
  std::size_t max_configs = 100'000'000;
  bool record_witness = false;
};

struct SearchResult {
  bool accepted = false;
  std::size_t visited = 0;  // distinct configurations generated
  std::size_t head_freezes = 0;
  std::size_t head_order_violations = 0;   // h1 > h2 seen (must stay 0)
  std::size_t max_live_counters = 0;       // max #counters with value >= 1
  std::vector<Configuration> witness;      // initial .. accepting, if recorded
};

/// Explores the computation graph from the initial configuration, generating
/// configurations lazily, until an accepting state is reached or the graph is
/// exhausted. Throws ResourceLimitError past `max_configs`.
SearchResult search(const JanusAutomaton& a, std::string_view w, const SearchOptions& options = {});

bool accepts(const JanusAutomaton& a, std::string_view w);

}  // namespace janus
