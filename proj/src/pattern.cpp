#include "janus/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <set>
#include <unordered_map>

namespace janus {

Pattern::Pattern(std::vector<Variable> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw PatternError("pattern must be nonempty");
  for (const Variable v : symbols_) {
    if (v.id < 1) throw PatternError("variable ids start at 1");
    if (occurrences_[v]++ == 0) first_seen_.push_back(v);
  }
}

std::size_t Pattern::occurrences(Variable v) const {
  const auto it = occurrences_.find(v);
  return it == occurrences_.end() ? 0 : it->second;
}

std::size_t Pattern::index_of(Variable v) const {
  const auto it = std::find(first_seen_.begin(), first_seen_.end(), v);
  if (it == first_seen_.end()) throw PatternError(v.name() + " does not occur in pattern");
  return static_cast<std::size_t>(it - first_seen_.begin());
}

std::vector<std::size_t> Pattern::dense() const {
  std::map<Variable, std::size_t> index;
  for (std::size_t i = 0; i < first_seen_.size(); ++i) index[first_seen_[i]] = i;
  std::vector<std::size_t> out;
  out.reserve(symbols_.size());
  for (const Variable v : symbols_) out.push_back(index[v]);
  return out;
}

std::string Pattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ' ';
    out += symbols_[i].name();
  }
  return out;
}

Pattern parse_pattern(std::string_view text) {
  std::vector<Variable> symbols;
  std::size_t i = 0;
  const auto is_sep = [](char c) { return c == '.' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    if (is_sep(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    const std::string_view token = text.substr(start, i - start);
    const auto fail = [&](const std::string& why) {
      return PatternError("malformed token '" + std::string(token) + "' at position " +
                          std::to_string(start) + ": " + why);
    };
    if (token.size() < 2 || token[0] != 'x') throw fail("expected x<digits>");
    std::uint64_t id = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, id);
    if (ec != std::errc() || ptr != last) throw fail("expected x<digits>");
    if (id == 0) throw fail("variable ids start at 1");
    if (id > UINT32_MAX) throw fail("variable id out of range");
    symbols.push_back(Variable{static_cast<std::uint32_t>(id)});
  }
  if (symbols.empty()) throw PatternError("empty pattern");
  return Pattern(std::move(symbols));
}

std::vector<std::size_t> variable_positions(const Pattern& p, Variable v) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j <= p.size(); ++j)
    if (p.at(j) == v) out.push_back(j);
  return out;
}

std::size_t variable_distance(const Pattern& p) {
  const std::vector<std::size_t> y = p.dense();
  std::vector<std::size_t> remaining(p.var_count(), 0);
  for (const std::size_t v : y) ++remaining[v];

  // seen_since[x] is the set S_x of the scan; live while x has occurrences left.
  std::vector<std::set<std::size_t>> seen_since(p.var_count());
  std::vector<bool> live(p.var_count(), false);
  std::size_t vd = 0;
  for (const std::size_t x : y) {
    for (std::size_t other = 0; other < live.size(); ++other) {
      if (other == x || !live[other]) continue;
      seen_since[other].insert(x);
    }
    if (live[x]) vd = std::max(vd, seen_since[x].size());
    seen_since[x].clear();
    live[x] = --remaining[x] > 0;
  }
  return vd;
}

bool is_trivially_universal(const Pattern& p) {
  return std::ranges::any_of(p.variables(), [&](Variable v) { return p.occurrences(v) == 1; });
}

namespace {

void check_letter(unsigned char c) {
  if (c == static_cast<unsigned char>(kReservedRightEnd) || c >= 0x80 || std::iscntrl(c))
    throw PatternError("letter '" + std::string(1, static_cast<char>(c)) +
                       "' is reserved or not a printable ASCII symbol");
}

std::string normalize_alphabet(std::string alphabet) {
  std::ranges::sort(alphabet);
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  return alphabet;
}

}  // namespace

Word::Word(std::string letters) : letters_(std::move(letters)) {
  std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
  for (const char c : letters_) {
    check_letter(static_cast<unsigned char>(c));
    alphabet += c;
  }
  alphabet_ = normalize_alphabet(std::move(alphabet));
}

Word::Word(std::string letters, std::string alphabet)
    : letters_(std::move(letters)), alphabet_(normalize_alphabet(std::move(alphabet))) {
  if (alphabet_.empty()) throw PatternError("alphabet must be nonempty");
  for (const char c : alphabet_) check_letter(static_cast<unsigned char>(c));
  for (const char c : letters_)
    if (!std::binary_search(alphabet_.begin(), alphabet_.end(), c))
      throw PatternError("letter '" + std::string(1, c) + "' is not in the alphabet");
}

bool Factorization::consistent_with(const Pattern& p) const {
  if (lengths.size() != p.size()) return false;
  std::map<Variable, std::size_t> length_of;
  for (std::size_t j = 1; j <= p.size(); ++j) {
    const auto [it, inserted] = length_of.emplace(p.at(j), lengths[j - 1]);
    if (!inserted && it->second != lengths[j - 1]) return false;
  }
  return true;
}

std::size_t Factorization::total() const {
  return std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
}

std::vector<std::size_t> Factorization::offsets() const {
  std::vector<std::size_t> out(lengths.size(), 0);
  std::size_t acc = 0;
  for (std::size_t j = 0; j < lengths.size(); ++j) {
    out[j] = acc;
    acc += lengths[j];
  }
  return out;
}

}  // namespace janus
