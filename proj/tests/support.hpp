#pragma once

// Fixtures and independent reference checks shared by the unit tests and the
// acceptance runner.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "janus/automaton.hpp"
#include "janus/operating_mode.hpp"
#include "janus/pattern.hpp"

namespace janus::testing {

inline Pattern beta() { return parse_pattern("x1 x2 x1 x2 x3 x2 x3"); }
inline Pattern beta_prime() { return parse_pattern("x1 x2 x3 x2 x3 x1 x4 x3 x5 x5 x4"); }
inline Pattern conclusion_example() { return parse_pattern("x1 x2 x3 x1 x2 x4 x4 x5 x5 x3"); }

inline HeadMovementStep L(std::size_t q) { return {q, Head::Left}; }
inline HeadMovementStep R(std::size_t q) { return {q, Head::Right}; }

/// The hand-listed mode for beta over the order ((4,6),(1,3),(2,4),(5,7)).
inline JanusOperatingMode delta_beta() {
  JanusOperatingMode m;
  m.source = {{4, 6}, {1, 3}, {2, 4}, {5, 7}};
  m.blocks = {
      {R(1), L(1), R(2), L(2), R(3), L(3), R(4), R(5), R(6), L(4)},
      {L(4), L(3), L(2), L(1), R(6), R(5), R(4), R(3), R(3), L(1)},
      {R(4), L(2)},
      {L(3), R(5), L(4), R(6), R(7), L(5)},
  };
  return m;
}

/// Every word of length <= max_len that is an image of `p` under some
/// substitution into `alphabet`*. Generates rather than decomposes, so it
/// shares nothing with the length-enumeration oracle.
inline std::set<std::string> substitution_images(const Pattern& p, const std::string& alphabet, std::size_t max_len) {
  std::vector<std::string> words{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = words.size();
    for (std::size_t i = 0; i < end; ++i)
      if (words[i].size() == len - 1)
        for (char c : alphabet) words.push_back(words[i] + c);
  }
  std::set<std::string> out;
  const std::vector<Variable>& vars = p.variables();
  std::map<Variable, std::string> image;
  const auto rec = [&](auto&& self, std::size_t i, std::size_t budget) -> void {
    if (i == vars.size()) {
      std::string w;
      for (Variable v : p.symbols()) w += image[v];
      out.insert(w);
      return;
    }
    for (const std::string& u : words) {
      const std::size_t cost = u.size() * p.occurrences(vars[i]);
      if (cost > budget) continue;
      image[vars[i]] = u;
      self(self, i + 1, budget - cost);
    }
  };
  rec(rec, 0, max_len);
  return out;
}

/// Membership in {u a v b v u : u, v in {a,b}*} by trying every split.
inline bool in_uavbvu(const std::string& w) {
  const std::size_t n = w.size();
  if (n < 2 || n % 2 != 0) return false;
  for (std::size_t p = 0; 2 * p + 2 <= n; ++p) {
    const std::size_t q = (n - 2 - 2 * p) / 2;
    const std::string u = w.substr(0, p);
    const std::string v = w.substr(p + 1, q);
    if (w == u + "a" + v + "b" + v + u) return true;
  }
  return false;
}

/// Two-counter automaton for {u a v b v u}: counter 1 guesses |u|, counter 2
/// guesses |v|. The right head skips u, checks a, skips v, checks b and skips
/// the second v. Both heads then compare the two copies of u, ending with the
/// right head on $. The left head steps over a, the right head walks back over
/// u and v, and both heads compare the two copies of v.
inline JanusAutomaton uavbvu_automaton() {
  using CM = CounterMessage;
  using CI = CounterInstruction;
  using SG = SymbolGuard;
  JanusAutomaton a(2);
  a.set_alphabet("ab");
  std::map<std::string, StateId> s;
  for (const char* name : {"q0", "skip_u", "check_a", "skip_v", "check_b", "skip_v2", "cmp_u", "at_end", "over_a",
                           "back_u", "back_v", "cmp_v", "qf"})
    s[name] = a.add_state(name);
  a.set_initial(s["q0"]);
  a.add_accepting(s["qf"]);

  const auto row = [&](const char* from, SG l, SG r, bool same, std::vector<CM> msg, const char* to, int ml, int mr,
                       std::vector<CI> ins) {
    a.add_transition(Transition{s.at(from), l, r, same, std::move(msg), s.at(to), static_cast<std::int8_t>(ml),
                                static_cast<std::int8_t>(mr), std::move(ins)});
  };
  const SG any = SG::any();
  const SG letter = SG::letters();
  const std::vector<CM> free{CM::Any, CM::Any};
  const std::vector<CI> keep{CI::Keep, CI::Keep};
  // Counter c below / at its bound, the other counter unconstrained.
  const auto lt = [](int c) { return c == 0 ? std::vector<CM>{CM::Less, CM::Any} : std::vector<CM>{CM::Any, CM::Less}; };
  const auto eq = [](int c) { return c == 0 ? std::vector<CM>{CM::Equal, CM::Any} : std::vector<CM>{CM::Any, CM::Equal}; };
  const auto inc = [](int c) {
    return c == 0 ? std::vector<CI>{CI::Increment, CI::Keep} : std::vector<CI>{CI::Keep, CI::Increment};
  };

  row("q0", SG::left_end(), SG::left_end(), false, free, "skip_u", 1, 1, {CI::Reset, CI::Reset});
  row("skip_u", any, letter, false, lt(0), "skip_u", 0, 1, inc(0));
  row("skip_u", any, any, false, eq(0), "check_a", 0, 0, inc(0));
  row("check_a", any, SG::exact('a'), false, free, "skip_v", 0, 1, keep);
  row("skip_v", any, letter, false, lt(1), "skip_v", 0, 1, inc(1));
  row("skip_v", any, any, false, eq(1), "check_b", 0, 0, inc(1));
  row("check_b", any, SG::exact('b'), false, free, "skip_v2", 0, 1, keep);
  row("skip_v2", any, letter, false, lt(1), "skip_v2", 0, 1, inc(1));
  row("skip_v2", any, any, false, eq(1), "cmp_u", 0, 0, inc(1));
  row("cmp_u", letter, letter, true, lt(0), "cmp_u", 1, 1, inc(0));
  row("cmp_u", any, any, false, eq(0), "at_end", 0, 0, inc(0));
  row("at_end", any, SG::right_end(), false, free, "over_a", 0, 0, keep);
  row("over_a", SG::exact('a'), any, false, free, "back_u", 1, 0, keep);
  row("back_u", any, SG::not_left_end(), false, lt(0), "back_u", 0, -1, inc(0));
  row("back_u", any, any, false, eq(0), "back_v", 0, 0, inc(0));
  row("back_v", any, SG::not_left_end(), false, lt(1), "back_v", 0, -1, inc(1));
  row("back_v", any, any, false, eq(1), "cmp_v", 0, 0, inc(1));
  row("cmp_v", letter, letter, true, lt(1), "cmp_v", 1, 1, inc(1));
  row("cmp_v", any, any, false, eq(1), "qf", 0, 0, inc(1));
  return a;
}

/// True iff no two variables sharing a counter interleave as x..z..x in the
/// mode's indicator sequence. Checked by brute force over index triples.
inline bool assignment_separates(const Pattern& p, const JanusOperatingMode& mode, const CounterAssignment& co) {
  std::vector<Variable> seq;
  for (const HeadMovementStep& s : head_movement_indicator(mode)) seq.push_back(p.at(s.position));
  const std::size_t n = seq.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (seq[i] == seq[k] && seq[j] != seq[i] && co(seq[i]) == co(seq[j])) return false;
  return true;
}

/// A random complete matching order: a random spanning tree over each
/// variable's positions, all pairs shuffled together.
inline CompleteMatchingOrder random_matching_order(std::mt19937_64& rng, const Pattern& p) {
  CompleteMatchingOrder order;
  for (Variable v : p.variables()) {
    std::vector<std::size_t> pos = variable_positions(p, v);
    std::shuffle(pos.begin(), pos.end(), rng);
    for (std::size_t i = 1; i < pos.size(); ++i) {
      const std::size_t parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
      order.push_back(MatchingPosition::normalized(pos[parent], pos[i]));
    }
  }
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

/// Mode for `order` with the two head paths of each block merged. With
/// `safe` a head moving towards the other goes second (the left head goes
/// first when it moves back, the right head otherwise), which always keeps
/// the left head behind the right one; otherwise the merge is random.
inline JanusOperatingMode mode_for_order(std::mt19937_64& rng, const CompleteMatchingOrder& order, bool safe) {
  JanusOperatingMode mode;
  mode.source = order;
  std::size_t prev_l = 0;
  std::size_t prev_r = 0;
  for (const MatchingPosition m : order) {
    const std::vector<std::size_t> lm = passed_factors(prev_l, m.left);
    const std::vector<std::size_t> rm = passed_factors(prev_r, m.right);
    MovementBlock block;
    std::size_t i = 0;
    std::size_t j = 0;
    const bool left_first = prev_l >= m.left;
    while (i < lm.size() || j < rm.size()) {
      bool take_right;
      if (i == lm.size() || j == rm.size())
        take_right = j < rm.size();
      else
        take_right = safe ? !left_first : std::bernoulli_distribution(0.5)(rng);
      if (take_right) {
        block.push_back(R(rm[j++]));
      } else {
        block.push_back(L(lm[i++]));
      }
    }
    block.push_back(R(m.right));
    block.push_back(L(m.left));
    mode.blocks.push_back(std::move(block));
    prev_l = m.left;
    prev_r = m.right;
  }
  return mode;
}

/// A random mode accepted by the validator: random order and merge, retried a
/// few times, falling back to the safe merge of the last order.
inline JanusOperatingMode random_valid_mode(std::mt19937_64& rng, const Pattern& p) {
  CompleteMatchingOrder order;
  for (int attempt = 0; attempt < 8; ++attempt) {
    order = random_matching_order(rng, p);
    JanusOperatingMode mode = mode_for_order(rng, order, false);
    if (validate_operating_mode(p, mode)) return mode;
  }
  return mode_for_order(rng, order, true);
}

}  // namespace janus::testing
