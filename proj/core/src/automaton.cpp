#include "pomkit/automaton.hpp"

#include <algorithm>

#include "pomkit/errors.hpp"

namespace pomkit {

PomsetAutomaton::PomsetAutomaton(std::vector<std::string> names, std::size_t bottom,
                                 std::size_t top)
    : bottom_(bottom), top_(top) {
  if (bottom >= names.size() || top >= names.size() || bottom == top) {
    throw InvalidAutomaton("bottom and top must be two distinct listed states");
  }
  for (auto& n : names) add_state(std::move(n));
  accepting_[top] = true;
}

State PomsetAutomaton::add_state(std::string name, bool accepting) {
  State q(names_.size());
  if (!index_.emplace(name, q).second) throw InvalidAutomaton("duplicate state '" + name + "'");
  names_.push_back(std::move(name));
  accepting_.push_back(false);
  delta_.emplace_back();
  gamma_.emplace_back();
  if (accepting) set_accepting(q);
  return q;
}

void PomsetAutomaton::check(State q) const {
  if (q.index() >= names_.size()) {
    throw InvalidAutomaton("state index " + std::to_string(q.index()) + " out of range");
  }
}

void PomsetAutomaton::set_accepting(State q, bool accepting) {
  check(q);
  if (q == bottom_ && accepting) throw InvalidAutomaton("bottom cannot be accepting");
  if (q == top_ && !accepting) throw InvalidAutomaton("top must be accepting");
  accepting_[q.index()] = accepting;
}

void PomsetAutomaton::set_delta(State q, const Letter& a, State target) {
  check(q);
  check(target);
  if (q == bottom_ || q == top_) {
    if (target == bottom_) return;
    throw InvalidAutomaton("transition out of '" + names_[q.index()] + "'");
  }
  if (target == bottom_) {
    delta_[q.index()].erase(a);
  } else {
    delta_[q.index()][a] = target;
  }
}

void PomsetAutomaton::set_gamma(State q, State r, State s, State target) {
  check(q);
  check(r);
  check(s);
  check(target);
  if (q == bottom_ || q == top_) {
    if (target == bottom_) return;
    throw InvalidAutomaton("fork out of '" + names_[q.index()] + "'");
  }
  if (target == bottom_) {
    gamma_[q.index()].erase({r, s});
  } else {
    gamma_[q.index()][{r, s}] = target;
  }
}

std::vector<State> PomsetAutomaton::states() const {
  std::vector<State> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(i);
  return out;
}

const std::string& PomsetAutomaton::name(State q) const {
  check(q);
  return names_[q.index()];
}

std::optional<State> PomsetAutomaton::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

State PomsetAutomaton::state(std::string_view name) const {
  if (auto q = find(name)) return *q;
  throw InvalidAutomaton("unknown state '" + std::string(name) + "'");
}

bool PomsetAutomaton::accepting(State q) const {
  check(q);
  return accepting_[q.index()];
}

State PomsetAutomaton::delta(State q, const Letter& a) const {
  const auto& row = delta_row(q);
  auto it = row.find(a);
  return it == row.end() ? bottom_ : it->second;
}

State PomsetAutomaton::gamma(State q, State r, State s) const {
  const auto& row = gamma_row(q);
  auto it = row.find({r, s});
  return it == row.end() ? bottom_ : it->second;
}

const PomsetAutomaton::DeltaRow& PomsetAutomaton::delta_row(State q) const {
  check(q);
  return delta_[q.index()];
}

const PomsetAutomaton::GammaRow& PomsetAutomaton::gamma_row(State q) const {
  check(q);
  return gamma_[q.index()];
}

Alphabet PomsetAutomaton::alphabet() const {
  Alphabet out;
  for (const auto& row : delta_) {
    for (const auto& [a, t] : row) out.insert(a);
  }
  return out;
}

std::size_t PomsetAutomaton::delta_count() const noexcept {
  std::size_t c = 0;
  for (const auto& row : delta_) c += row.size();
  return c;
}

std::size_t PomsetAutomaton::gamma_count() const noexcept {
  std::size_t c = 0;
  for (const auto& row : gamma_) c += row.size();
  return c;
}

std::vector<std::pair<State, State>> dependency_edges(const PomsetAutomaton& a) {
  std::vector<std::pair<State, State>> out;
  const std::size_t sigma = a.alphabet().size();
  const std::size_t pairs = a.size() * a.size();
  for (State q : a.states()) {
    const auto& d = a.delta_row(q);
    const auto& g = a.gamma_row(q);
    // Some letter or argument pair is unmapped, so bottom is a target.
    if (d.size() < sigma || g.size() < pairs) out.emplace_back(a.bottom(), q);
    for (const auto& [letter, t] : d) out.emplace_back(t, q);
    for (const auto& [rs, t] : g) {
      out.emplace_back(t, q);
      out.emplace_back(rs.first, q);
      out.emplace_back(rs.second, q);
    }
  }
  return out;
}

Relation trace_preorder(const PomsetAutomaton& a) {
  Relation le(a.size());
  for (auto [x, y] : dependency_edges(a)) le.set(x.index(), y.index());
  le.close_reflexive_transitive();
  return le;
}

Relation strict_part(const Relation& preorder) {
  Relation lt(preorder.size());
  for (std::size_t x = 0; x < preorder.size(); ++x) {
    preorder.for_each_in_row(x, [&](std::size_t y) {
      if (!preorder.test(y, x)) lt.set(x, y);
    });
  }
  return lt;
}

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::Sequential: return "sequential";
    case StateKind::Recursive: return "recursive";
    case StateKind::Neither: return "neither";
  }
  return "neither";
}

bool StateClassification::well_nested() const {
  return std::none_of(kinds.begin(), kinds.end(),
                      [](StateKind k) { return k == StateKind::Neither; });
}

std::vector<State> StateClassification::neither() const {
  std::vector<State> out;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == StateKind::Neither) out.emplace_back(i);
  }
  return out;
}

StateClassification classify_states(const PomsetAutomaton& a) {
  StateClassification c;
  c.preceq = trace_preorder(a);
  c.prec = strict_part(c.preceq);
  c.kinds.assign(a.size(), StateKind::Sequential);
  c.reasons.assign(a.size(), {});
  for (State q : a.states()) {
    const auto& g = a.gamma_row(q);
    std::vector<std::string> not_seq;
    for (const auto& [rs, t] : g) {
      if (!c.strictly_below(rs.first, q) || !c.strictly_below(rs.second, q)) {
        not_seq.push_back("not sequential: fork (" + a.name(rs.first) + ", " + a.name(rs.second) +
                          ") -> " + a.name(t) + " has an argument not strictly below it");
      }
    }
    if (not_seq.empty()) continue;
    std::vector<std::string> not_rec;
    if (!a.accepting(q)) not_rec.push_back("not recursive: not accepting");
    for (const auto& [letter, t] : a.delta_row(q)) {
      not_rec.push_back("not recursive: sequential transition on " + letter.name() + " to " +
                        a.name(t));
    }
    for (const auto& [rs, t] : g) {
      if (rs.second != q || !c.strictly_below(rs.first, q) || t != a.top()) {
        not_rec.push_back("not recursive: fork (" + a.name(rs.first) + ", " + a.name(rs.second) +
                          ") -> " + a.name(t) +
                          " is not a self-fork to top with a strictly lower left argument");
      }
    }
    if (not_rec.empty()) {
      c.kinds[q.index()] = StateKind::Recursive;
    } else {
      c.kinds[q.index()] = StateKind::Neither;
      not_seq.insert(not_seq.end(), not_rec.begin(), not_rec.end());
      c.reasons[q.index()] = std::move(not_seq);
    }
  }
  return c;
}

std::vector<State> support(const Relation& preorder, State q) {
  std::vector<State> out;
  for (std::size_t x = 0; x < preorder.size(); ++x) {
    if (preorder.test(x, q.index())) out.emplace_back(x);
  }
  return out;
}

std::vector<State> support(const PomsetAutomaton& a, State q) {
  return support(trace_preorder(a), q);
}

PomsetAutomaton restrict_to(const PomsetAutomaton& a, std::span<const State> keep) {
  std::vector<bool> kept(a.size(), false);
  for (State q : keep) kept.at(q.index()) = true;
  kept[a.bottom().index()] = kept[a.top().index()] = true;
  std::vector<std::string> names;
  std::vector<std::size_t> remap(a.size(), 0);
  std::size_t bottom = 0, top = 0;
  for (State q : a.states()) {
    if (!kept[q.index()]) continue;
    remap[q.index()] = names.size();
    if (q == a.bottom()) bottom = names.size();
    if (q == a.top()) top = names.size();
    names.push_back(a.name(q));
  }
  PomsetAutomaton out(std::move(names), bottom, top);
  auto to = [&](State q) { return State(remap[q.index()]); };
  for (State q : a.states()) {
    if (!kept[q.index()]) continue;
    if (a.accepting(q) && q != a.top()) out.set_accepting(to(q));
    for (const auto& [letter, t] : a.delta_row(q)) {
      if (kept[t.index()]) out.set_delta(to(q), letter, to(t));
    }
    for (const auto& [rs, t] : a.gamma_row(q)) {
      if (kept[rs.first.index()] && kept[rs.second.index()] && kept[t.index()]) {
        out.set_gamma(to(q), to(rs.first), to(rs.second), to(t));
      }
    }
  }
  return out;
}

}  // namespace pomkit
