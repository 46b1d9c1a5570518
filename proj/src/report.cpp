#include "janus/report.hpp"

#include <stdexcept>

namespace janus {

using nlohmann::json;

AnalysisReport analyze(const Pattern& p) {
  AnalysisReport r;
  r.pattern = p.to_string();
  r.n = p.size();
  r.m = p.var_count();
  r.vd = variable_distance(p);
  r.trivially_universal = is_trivially_universal(p);
  if (r.trivially_universal) return r;

  r.matching_order = canonical_matching_order(p);
  r.mode = canonical_operating_mode(p, *r.matching_order);
  r.cn = counter_number(p, *r.mode);
  r.pi = *r.cn + 1;
  r.assignment = counter_assignment(p, *r.mode);
  if (*r.cn != r.vd)
    throw std::logic_error("canonical counter number " + std::to_string(*r.cn) + " differs from variable distance " +
                           std::to_string(r.vd) + " for " + r.pattern);
  return r;
}

json to_json(const CompleteMatchingOrder& order) {
  json out = json::array();
  for (const MatchingPosition m : order) out.push_back({m.left, m.right});
  return out;
}

json to_json(const JanusOperatingMode& mode) {
  json out = json::array();
  for (const MovementBlock& block : mode.blocks) {
    json b = json::array();
    for (const HeadMovementStep s : block) b.push_back({s.position, s.head == Head::Left ? "L" : "R"});
    out.push_back(std::move(b));
  }
  return out;
}

json to_json(const CounterAssignment& assignment) {
  json out = json::object();
  for (const auto& [v, c] : assignment.counter_of) out[v.name()] = c;
  return out;
}

json to_json(const AnalysisReport& r) {
  json out;
  out["pattern"] = r.pattern;
  out["n"] = r.n;
  out["m"] = r.m;
  out["vd"] = r.vd;
  out["trivially_universal"] = r.trivially_universal;
  out["cn"] = r.cn ? json(*r.cn) : json(nullptr);
  out["pi"] = r.pi ? json(*r.pi) : json(nullptr);
  out["counter_assignment"] = r.assignment ? to_json(*r.assignment) : json(nullptr);
  out["matching_order"] = r.matching_order ? to_json(*r.matching_order) : json(nullptr);
  out["operating_mode"] = r.mode ? to_json(*r.mode) : json(nullptr);
  return out;
}

namespace {

const char* message_text(CounterMessage m) {
  switch (m) {
    case CounterMessage::Equal: return "=";
    case CounterMessage::Less: return "<";
    case CounterMessage::Any: return "*";
  }
  return "?";
}

const char* instruction_text(CounterInstruction i) {
  switch (i) {
    case CounterInstruction::Keep: return "0";
    case CounterInstruction::Increment: return "1";
    case CounterInstruction::Reset: return "r";
  }
  return "?";
}

}  // namespace

json dump_automaton(const CompiledPattern& compiled) {
  const JanusAutomaton& a = compiled.automaton;
  json states = json::array();
  for (StateId q = 0; q < a.state_count(); ++q) {
    const StateTag& tag = compiled.roles.at(q);
    json s;
    s["id"] = q;
    s["name"] = a.state_name(q);
    s["role"] = to_string(tag.role);
    if (tag.block != 0) s["block"] = tag.block;
    if (tag.position != 0) s["position"] = tag.position;
    if (tag.partner != 0) s["partner"] = tag.partner;
    if (tag.counter != 0) s["counter"] = tag.counter;
    states.push_back(std::move(s));
  }

  json rows = json::array();
  for (StateId q = 0; q < a.state_count(); ++q) {
    for (const Transition& t : a.rows(q)) {
      json row;
      row["state"] = t.from;
      // Rows comparing both heads carry "=" on each side.
      row["left"] = t.same_letter ? std::string("=") : t.left.to_string();
      row["right"] = t.same_letter ? std::string("=") : t.right.to_string();
      json messages = json::array();
      for (const CounterMessage m : t.messages) messages.push_back(message_text(m));
      row["messages"] = std::move(messages);
      row["next"] = t.to;
      row["moves"] = {t.move_left, t.move_right};
      json instructions = json::array();
      for (const CounterInstruction i : t.instructions) instructions.push_back(instruction_text(i));
      row["instructions"] = std::move(instructions);
      rows.push_back(std::move(row));
    }
  }

  json out;
  out["pattern"] = compiled.pattern.to_string();
  out["k"] = a.counters();
  out["state_count"] = a.state_count();
  out["initial"] = a.initial();
  out["accepting"] = a.accepting_states();
  out["counter_assignment"] = to_json(compiled.assignment);
  out["states"] = std::move(states);
  out["transitions"] = std::move(rows);
  return out;
}

std::string format_mode(const JanusOperatingMode& mode) {
  std::string out = "(";
  for (std::size_t b = 0; b < mode.blocks.size(); ++b) {
    if (b) out += ", ";
    out += "(";
    for (std::size_t s = 0; s < mode.blocks[b].size(); ++s) {
      if (s) out += ",";
      const HeadMovementStep step = mode.blocks[b][s];
      out += "(" + std::to_string(step.position) + (step.head == Head::Left ? ",L)" : ",R)");
    }
    out += ")";
  }
  return out + ")";
}

}  // namespace janus
