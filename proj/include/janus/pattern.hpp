#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace janus {

/// Raised for malformed pattern text or invalid pattern/word construction.
class PatternError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A variable x_i, identified by its index i >= 1.
struct Variable {
  std::uint32_t id = 1;

  auto operator<=>(const Variable&) const = default;
  std::string name() const { return "x" + std::to_string(id); }
};

/// A terminal-free pattern: a nonempty sequence of variables.
///
/// Positions are 1-based throughout the library, so `at(1)` is the first
/// symbol. Occurrence counts are precomputed at construction.
class Pattern {
 public:
  explicit Pattern(std::vector<Variable> symbols);

  std::size_t size() const { return symbols_.size(); }
  std::size_t var_count() const { return occurrences_.size(); }
  const std::vector<Variable>& symbols() const { return symbols_; }

  Variable at(std::size_t position) const { return symbols_.at(position - 1); }

  std::size_t occurrences(Variable v) const;

  /// Distinct variables in order of first occurrence.
  const std::vector<Variable>& variables() const { return first_seen_; }

  /// Dense index of `v` in `variables()`; throws if absent.
  std::size_t index_of(Variable v) const;

  /// Symbols mapped to dense indices (0-based, order of first occurrence).
  std::vector<std::size_t> dense() const;

  std::string to_string() const;

  bool operator==(const Pattern& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<Variable> symbols_;
  std::map<Variable, std::size_t> occurrences_;
  std::vector<Variable> first_seen_;
};

/// Parses whitespace- or dot-separated `x<digits>` tokens.
Pattern parse_pattern(std::string_view text);

/// Strictly increasing 1-based positions of `v` in `p` (empty if absent).
std::vector<std::size_t> variable_positions(const Pattern& p, Variable v);

/// Maximum number of distinct other variables between two consecutive
/// occurrences of any variable. Single left-to-right scan.
std::size_t variable_distance(const Pattern& p);

/// True iff some variable occurs exactly once, in which case L(p) = Sigma*.
bool is_trivially_universal(const Pattern& p);

/// The endmarkers never appear in input words.
inline constexpr char kReservedRightEnd = '$';

/// A word over a finite alphabet. Letters are single bytes.
class Word {
 public:
  /// Alphabet defaults to a-z, extended by any other letters of `letters`.
  explicit Word(std::string letters);
  Word(std::string letters, std::string alphabet);

  const std::string& letters() const { return letters_; }
  const std::string& alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }

 private:
  std::string letters_;
  std::string alphabet_;  // sorted, unique
};

/// Per-position factor lengths |u_1|, ..., |u_n|.
struct Factorization {
  std::vector<std::size_t> lengths;

  /// Equal lengths at positions holding the same variable.
  bool consistent_with(const Pattern& p) const;

  std::size_t total() const;

  /// 0-based start offsets of each factor (prefix sums).
  std::vector<std::size_t> offsets() const;
};

}  // namespace janus
