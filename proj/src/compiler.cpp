#include "janus/compiler.hpp"

#include <stdexcept>

#include "janus/matching_order.hpp"

namespace janus {

std::string to_string(StateRole role) {
  switch (role) {
    case StateRole::Initial: return "initial";
    case StateRole::LeftForth: return "lforth";
    case StateRole::LeftBack: return "lback";
    case StateRole::RightForth: return "rforth";
    case StateRole::RightBack: return "rback";
    case StateRole::Match: return "match";
    case StateRole::Final: return "final";
  }
  return "unknown";
}

namespace {

// One state of the linear schedule the automaton walks through.
struct Unit {
  StateId state = 0;
  StateTag tag;
  std::size_t variable = 0;  // dense index
  std::size_t counter = 0;   // 0-based
};

bool is_forward(StateRole r) { return r == StateRole::LeftForth || r == StateRole::RightForth; }
bool moves_left_head(StateRole r) { return r == StateRole::LeftForth || r == StateRole::LeftBack; }

}  // namespace

CompiledPattern compile_with_mode(const Pattern& p, const JanusOperatingMode& mode) {
  if (is_trivially_universal(p))
    throw PatternError("pattern " + p.to_string() + " has a variable occurring once; it matches every word");
  if (!validate_operating_mode(p, mode)) throw PatternError("invalid operating mode for " + p.to_string());

  CounterAssignment assignment = counter_assignment(p, mode);
  const std::size_t k = assignment.counter_count;
  const std::vector<std::size_t> y = p.dense();
  const auto counter_at = [&](std::size_t position) { return assignment(p.at(position)) - 1; };

  CompiledPattern out{p, mode, assignment, JanusAutomaton(k), {}};
  JanusAutomaton& a = out.automaton;

  const StateId q0 = a.add_state("q0");
  out.roles.push_back({StateRole::Initial});

  std::vector<Unit> units;
  std::size_t prev_l = 0;
  std::size_t prev_r = 0;
  for (std::size_t b = 0; b < mode.blocks.size(); ++b) {
    const MovementBlock& block = mode.blocks[b];
    const MatchingPosition m = mode.source[b];
    const bool left_forth = prev_l < m.left;
    const bool right_forth = prev_r < m.right;
    for (std::size_t s = 0; s + 2 < block.size(); ++s) {
      const HeadMovementStep step = block[s];
      StateRole role;
      if (step.head == Head::Left)
        role = left_forth ? StateRole::LeftForth : StateRole::LeftBack;
      else
        role = right_forth ? StateRole::RightForth : StateRole::RightBack;
      Unit u;
      u.tag = {role, b + 1, step.position, 0, counter_at(step.position) + 1};
      u.variable = y[step.position - 1];
      u.counter = counter_at(step.position);
      u.state = a.add_state(to_string(role) + "[" + std::to_string(b + 1) + "," +
                            std::to_string(step.position) + "]");
      units.push_back(u);
    }
    Unit u;
    u.tag = {StateRole::Match, b + 1, m.left, m.right, counter_at(m.left) + 1};
    u.variable = y[m.left - 1];
    u.counter = counter_at(m.left);
    u.state = a.add_state("match[" + std::to_string(b + 1) + "]");
    units.push_back(u);
    prev_l = m.left;
    prev_r = m.right;
  }
  const StateId qf = a.add_state("qf");
  a.set_initial(q0);
  a.add_accepting(qf);

  out.roles.resize(a.state_count());
  for (const Unit& u : units) out.roles[u.state] = u.tag;
  out.roles[qf] = {StateRole::Final};

  // A counter is reset when its variable is done and a later variable reuses it.
  std::vector<std::size_t> last_unit(p.var_count(), 0);
  for (std::size_t i = 0; i < units.size(); ++i) last_unit[units[i].variable] = i;
  std::vector<bool> reset_on_exit(units.size(), false);
  std::vector<bool> counter_used(k, false);
  for (std::size_t i = 0; i < units.size(); ++i) {
    counter_used[units[i].counter] = true;
    if (last_unit[units[i].variable] != i) continue;
    for (std::size_t j = i + 1; j < units.size(); ++j)
      if (units[j].counter == units[i].counter) {
        reset_on_exit[i] = true;
        break;
      }
  }

  // The first unit completing the rightmost factor must leave its head on $.
  std::size_t end_check = units.size();
  for (std::size_t i = 0; i < units.size() && end_check == units.size(); ++i) {
    const StateTag& t = units[i].tag;
    if ((t.role == StateRole::Match && t.partner == p.size()) ||
        (t.role != StateRole::Match && t.position == p.size())) {
      if (t.role == StateRole::LeftBack || t.role == StateRole::RightBack)
        throw std::logic_error("rightmost factor is first reached by a backward move");
      end_check = i;
    }
  }

  const auto wildcard_messages = [&] { return std::vector<CounterMessage>(k, CounterMessage::Any); };
  const auto keep_all = [&] { return std::vector<CounterInstruction>(k, CounterInstruction::Keep); };

  {
    Transition t;
    t.from = q0;
    t.left = SymbolGuard::left_end();
    t.right = SymbolGuard::left_end();
    t.messages.assign(k, CounterMessage::Equal);
    t.to = units.front().state;
    t.move_left = 1;
    t.move_right = 1;
    t.instructions = keep_all();
    for (std::size_t c = 0; c < k; ++c)
      if (counter_used[c]) t.instructions[c] = CounterInstruction::Reset;
    a.add_transition(std::move(t));
  }

  for (std::size_t i = 0; i < units.size(); ++i) {
    const Unit& u = units[i];
    const StateId next = i + 1 < units.size() ? units[i + 1].state : qf;
    const bool match = u.tag.role == StateRole::Match;

    Transition step;
    step.from = u.state;
    step.to = u.state;
    step.messages = wildcard_messages();
    step.messages[u.counter] = CounterMessage::Less;
    step.instructions = keep_all();
    step.instructions[u.counter] = CounterInstruction::Increment;
    if (match) {
      step.left = SymbolGuard::letters();
      step.right = SymbolGuard::letters();
      step.same_letter = true;
      step.move_left = 1;
      step.move_right = 1;
    } else {
      const SymbolGuard moving = is_forward(u.tag.role) ? SymbolGuard::letters() : SymbolGuard::not_left_end();
      const std::int8_t delta = is_forward(u.tag.role) ? 1 : -1;
      if (moves_left_head(u.tag.role)) {
        step.left = moving;
        step.move_left = delta;
      } else {
        step.right = moving;
        step.move_right = delta;
      }
    }
    a.add_transition(std::move(step));

    Transition exit;
    exit.from = u.state;
    exit.to = next;
    exit.messages = wildcard_messages();
    exit.messages[u.counter] = CounterMessage::Equal;
    exit.instructions = keep_all();
    exit.instructions[u.counter] = reset_on_exit[i] ? CounterInstruction::Reset : CounterInstruction::Increment;
    if (i == end_check) {
      if (match || !moves_left_head(u.tag.role))
        exit.right = SymbolGuard::right_end();
      else
        exit.left = SymbolGuard::right_end();
    }
    a.add_transition(std::move(exit));
  }
  return out;
}

CompiledPattern compile(const Pattern& p) {
  if (is_trivially_universal(p))
    throw PatternError("pattern " + p.to_string() + " has a variable occurring once; it matches every word");
  return compile_with_mode(p, canonical_operating_mode(p, canonical_matching_order(p)));
}

std::optional<Factorization> factorization_from_run(const CompiledPattern& compiled,
                                                    const std::vector<Configuration>& run) {
  const std::size_t n = compiled.pattern.size();
  std::vector<std::optional<std::size_t>> lengths(n);
  for (const Configuration& c : run) {
    const StateTag& tag = compiled.roles.at(c.state);
    if (tag.counter == 0) continue;
    const std::size_t bound = c.counters.at(tag.counter - 1).bound;
    lengths.at(tag.position - 1) = bound;
    if (tag.role == StateRole::Match) lengths.at(tag.partner - 1) = bound;
  }
  Factorization f;
  for (const auto& l : lengths) {
    if (!l) return std::nullopt;
    f.lengths.push_back(*l);
  }
  return f;
}

}  // namespace janus
