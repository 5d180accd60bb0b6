#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pomkit/automaton.hpp"
#include "pomkit/errors.hpp"

namespace pomkit {

namespace {

using nlohmann::json;

std::string fresh_name(const std::vector<std::string>& names, std::string base) {
  while (std::find(names.begin(), names.end(), base) != names.end()) base += "_";
  return base;
}

const json& field(const json& j, const char* key) {
  static const json empty = json::array();
  auto it = j.find(key);
  if (it == j.end()) return empty;
  if (!it->is_array()) throw InvalidAutomaton(std::string("'") + key + "' must be an array");
  return *it;
}

std::string as_name(const json& j, const char* what) {
  if (!j.is_string()) throw InvalidAutomaton(std::string(what) + " must be a string");
  return j.get<std::string>();
}

State lookup(const PomsetAutomaton& a, const json& j) {
  return a.state(as_name(j, "state name"));
}

}  // namespace

PomsetAutomaton parse_automaton_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidAutomaton(std::string("malformed automaton JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidAutomaton("automaton JSON must be an object");

  std::vector<std::string> names;
  for (const auto& s : field(j, "states")) {
    auto name = as_name(s, "state name");
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw InvalidAutomaton("duplicate state '" + name + "'");
    }
    names.push_back(std::move(name));
  }
  auto locate = [&](const char* key, const char* fallback) {
    std::string name = j.contains(key) ? as_name(j[key], key) : fresh_name(names, fallback);
    auto it = std::find(names.begin(), names.end(), name);
    if (it != names.end()) return static_cast<std::size_t>(it - names.begin());
    names.push_back(name);
    return names.size() - 1;
  };
  std::size_t bottom = locate("bottom", "_bot");
  std::size_t top = locate("top", "_top");
  PomsetAutomaton a(std::move(names), bottom, top);

  for (const auto& s : field(j, "accepting")) {
    State q = lookup(a, s);
    if (q != a.top()) a.set_accepting(q);
  }
  auto internal = [&](State q) { return q != a.bottom() && q != a.top(); };
  for (const auto& e : field(j, "delta")) {
    if (!e.is_array() || e.size() != 3) throw InvalidAutomaton("delta entries are [q, a, q']");
    State q = lookup(a, e[0]);
    Letter letter(as_name(e[1], "letter"));
    State t = lookup(a, e[2]);
    if (!internal(q)) continue;
    State prior = a.delta(q, letter);
    if (prior != a.bottom() && prior != t) {
      throw InvalidAutomaton("conflicting transitions for (" + a.name(q) + ", " + letter.name() +
                             ")");
    }
    a.set_delta(q, letter, t);
  }
  for (const auto& e : field(j, "gamma")) {
    if (!e.is_array() || e.size() != 4) throw InvalidAutomaton("gamma entries are [q, r, s, q']");
    State q = lookup(a, e[0]);
    State r = lookup(a, e[1]);
    State s = lookup(a, e[2]);
    State t = lookup(a, e[3]);
    if (!internal(q)) continue;
    State prior = a.gamma(q, r, s);
    if (prior != a.bottom() && prior != t) {
      throw InvalidAutomaton("conflicting forks for (" + a.name(q) + ", " + a.name(r) + ", " +
                             a.name(s) + ")");
    }
    a.set_gamma(q, r, s, t);
  }
  return a;
}

PomsetAutomaton load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidAutomaton("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_automaton_json(buf.str());
}

std::string to_json(const PomsetAutomaton& a, std::optional<State> start) {
  json j = json::object();
  json states = json::array();
  json accepting = json::array();
  json delta = json::array();
  json gamma = json::array();
  for (State q : a.states()) {
    states.push_back(a.name(q));
    if (a.accepting(q)) accepting.push_back(a.name(q));
    for (const auto& [letter, t] : a.delta_row(q)) {
      delta.push_back({a.name(q), letter.name(), a.name(t)});
    }
    for (const auto& [rs, t] : a.gamma_row(q)) {
      gamma.push_back({a.name(q), a.name(rs.first), a.name(rs.second), a.name(t)});
    }
  }
  j["states"] = std::move(states);
  j["accepting"] = std::move(accepting);
  j["bottom"] = a.name(a.bottom());
  j["top"] = a.name(a.top());
  j["delta"] = std::move(delta);
  j["gamma"] = std::move(gamma);
  if (start) j["start"] = a.name(*start);
  return j.dump(2);
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const PomsetAutomaton& a, std::optional<State> start) {
  // Bottom is drawn only when some transition mentions it.
  bool bottom_used = start && *start == a.bottom();
  for (State q : a.states()) {
    for (const auto& [rs, t] : a.gamma_row(q)) {
      bottom_used |= rs.first == a.bottom() || rs.second == a.bottom();
    }
  }
  std::ostringstream out;
  out << "digraph pomset_automaton {\n  rankdir=LR;\n";
  for (State q : a.states()) {
    if (q == a.bottom() && !bottom_used) continue;
    out << "  s" << q.index() << " [label=" << quoted(a.name(q))
        << ", shape=" << (a.accepting(q) ? "doublecircle" : "circle") << "];\n";
  }
  if (start) {
    out << "  start [shape=point];\n  start -> s" << start->index() << ";\n";
  }
  std::size_t fork = 0;
  for (State q : a.states()) {
    for (const auto& [letter, t] : a.delta_row(q)) {
      out << "  s" << q.index() << " -> s" << t.index() << " [label=" << quoted(letter.name())
          << "];\n";
    }
    for (const auto& [rs, t] : a.gamma_row(q)) {
      const std::string f = "f" + std::to_string(fork++);
      out << "  " << f << " [shape=point];\n";
      out << "  s" << q.index() << " -> " << f << " [arrowhead=none];\n";
      out << "  " << f << " -> s" << rs.first.index() << " [label=\"l\"];\n";
      out << "  " << f << " -> s" << rs.second.index() << " [label=\"r\"];\n";
      out << "  " << f << " -> s" << t.index() << " [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pomkit
