#include "pomkit/grammar.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pomkit/errors.hpp"

namespace pomkit {

struct RhsTerm::Node {
  Kind kind;
  std::string name;
  RhsTerm l;
  RhsTerm r;
};

RhsTerm RhsTerm::letter(Letter a) {
  return RhsTerm(std::make_shared<const Node>(Node{Kind::Letter, a.name(), {}, {}}));
}

RhsTerm RhsTerm::nonterminal(std::string name) {
  if (name.empty()) throw Error("nonterminal names must be non-empty");
  return RhsTerm(std::make_shared<const Node>(Node{Kind::NonTerminal, std::move(name), {}, {}}));
}

RhsTerm RhsTerm::seq(RhsTerm l, RhsTerm r) {
  return RhsTerm(std::make_shared<const Node>(Node{Kind::Seq, {}, std::move(l), std::move(r)}));
}

RhsTerm RhsTerm::par(RhsTerm l, RhsTerm r) {
  return RhsTerm(std::make_shared<const Node>(Node{Kind::Par, {}, std::move(l), std::move(r)}));
}

RhsTerm::Kind RhsTerm::kind() const noexcept { return node_ ? node_->kind : Kind::Eps; }

const std::string& RhsTerm::name() const {
  if (kind() != Kind::Letter && kind() != Kind::NonTerminal) {
    throw PreconditionViolation("name() on a composite or empty term");
  }
  return node_->name;
}

const RhsTerm& RhsTerm::left() const {
  if (kind() != Kind::Seq && kind() != Kind::Par) throw PreconditionViolation("left() on a leaf");
  return node_->l;
}

const RhsTerm& RhsTerm::right() const {
  if (kind() != Kind::Seq && kind() != Kind::Par) throw PreconditionViolation("right() on a leaf");
  return node_->r;
}

bool operator==(const RhsTerm& a, const RhsTerm& b) noexcept { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const RhsTerm& a, const RhsTerm& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case RhsTerm::Kind::Eps:
      return std::strong_ordering::equal;
    case RhsTerm::Kind::Letter:
    case RhsTerm::Kind::NonTerminal:
      return a.node_->name.compare(b.node_->name) <=> 0;
    default:
      if (auto c = a.node_->l <=> b.node_->l; c != 0) return c;
      return a.node_->r <=> b.node_->r;
  }
}

namespace {

void check_term(const RhsTerm& t, const std::set<std::string>& declared) {
  switch (t.kind()) {
    case RhsTerm::Kind::NonTerminal:
      if (!declared.contains(t.name())) throw UndeclaredNonterminal(t.name());
      return;
    case RhsTerm::Kind::Seq:
    case RhsTerm::Kind::Par:
      check_term(t.left(), declared);
      check_term(t.right(), declared);
      return;
    default:
      return;
  }
}

}  // namespace

PomsetCFG::PomsetCFG(std::vector<std::string> nonterminals, std::string start,
                     std::vector<Rule> rules)
    : nonterminals_(std::move(nonterminals)), start_(std::move(start)) {
  std::set<std::string> declared;
  for (const auto& x : nonterminals_) {
    if (x.empty()) throw Error("nonterminal names must be non-empty");
    if (!declared.insert(x).second) throw Error("nonterminal '" + x + "' declared twice");
  }
  if (!declared.contains(start_)) throw UndeclaredNonterminal(start_);
  std::set<Rule> seen;
  for (auto& r : rules) {
    if (!declared.contains(r.lhs)) throw UndeclaredNonterminal(r.lhs);
    check_term(r.rhs, declared);
    if (seen.insert(r).second) rules_.push_back(std::move(r));
  }
}

Pomset evaluate_closed(const RhsTerm& t) {
  switch (t.kind()) {
    case RhsTerm::Kind::Eps:
      return Pomset::empty();
    case RhsTerm::Kind::Letter:
      return Pomset::prim(Letter(t.name()));
    case RhsTerm::Kind::NonTerminal:
      throw PreconditionViolation("term mentions nonterminal '" + t.name() + "'");
    case RhsTerm::Kind::Seq:
      return seq_compose(evaluate_closed(t.left()), evaluate_closed(t.right()));
    case RhsTerm::Kind::Par:
      return par_compose(evaluate_closed(t.left()), evaluate_closed(t.right()));
  }
  return Pomset::empty();
}

namespace {

class Generator {
 public:
  Generator(const PomsetCFG& g, std::size_t n, const Limits& limits)
      : g_(g), n_(n), limits_(limits) {}

  PomsetSet run() {
    for (bool changed = true; changed;) {
      changed = false;
      std::map<std::string, PomsetSet> next = lang_;
      for (const auto& rule : g_.rules()) {
        PomsetSet add = eval(rule.rhs);
        auto& target = next[rule.lhs];
        const std::size_t before = target.size();
        target.insert(add.begin(), add.end());
        if (target.size() > limits_.max_pomsets) {
          throw ResourceLimit("grammar generation exceeded budget of " +
                              std::to_string(limits_.max_pomsets));
        }
        changed |= target.size() != before;
      }
      lang_ = std::move(next);
    }
    return lang_[g_.start()];
  }

 private:
  PomsetSet eval(const RhsTerm& t) {
    switch (t.kind()) {
      case RhsTerm::Kind::Eps:
        return {Pomset::empty()};
      case RhsTerm::Kind::Letter:
        if (n_ == 0) return {};
        return {Pomset::prim(Letter(t.name()))};
      case RhsTerm::Kind::NonTerminal: {
        auto it = lang_.find(t.name());
        return it == lang_.end() ? PomsetSet{} : it->second;
      }
      case RhsTerm::Kind::Seq:
        return compose(eval(t.left()), eval(t.right()), seq_compose);
      case RhsTerm::Kind::Par:
        return compose(eval(t.left()), eval(t.right()), par_compose);
    }
    return {};
  }

  PomsetSet compose(const PomsetSet& l, const PomsetSet& r,
                    Pomset (*op)(const Pomset&, const Pomset&)) const {
    PomsetSet out;
    for (const auto& u : l) {
      for (const auto& v : r) {
        if (u.size() + v.size() <= n_) out.insert(op(u, v));
      }
    }
    if (out.size() > limits_.max_pomsets) {
      throw ResourceLimit("grammar generation exceeded budget of " +
                          std::to_string(limits_.max_pomsets));
    }
    return out;
  }

  const PomsetCFG& g_;
  std::size_t n_;
  const Limits& limits_;
  std::map<std::string, PomsetSet> lang_;
};

}  // namespace

PomsetSet generate_bounded(const PomsetCFG& g, std::size_t n, const Limits& limits) {
  return Generator(g, n, limits).run();
}

PomsetCFG pa_to_cfg(const PomsetAutomaton& a, State start) {
  std::vector<std::string> names;
  for (State q : a.states()) names.push_back(a.name(q));
  auto nt = [&](State q) { return RhsTerm::nonterminal(a.name(q)); };
  std::vector<Rule> rules;
  for (State q : a.states()) {
    for (const auto& [letter, t] : a.delta_row(q)) {
      rules.push_back({a.name(q), RhsTerm::seq(RhsTerm::letter(letter), nt(t))});
    }
    for (const auto& [rs, t] : a.gamma_row(q)) {
      rules.push_back({a.name(q), RhsTerm::seq(RhsTerm::par(nt(rs.first), nt(rs.second)), nt(t))});
    }
    if (a.accepting(q)) rules.push_back({a.name(q), RhsTerm::eps()});
  }
  PomsetCFG g(std::move(names), a.name(start), std::move(rules));
  std::size_t accepting = 0;
  for (State q : a.states()) accepting += a.accepting(q) ? 1 : 0;
  if (g.rules().size() != a.delta_count() + a.gamma_count() + accepting) {
    throw PreconditionViolation("rule count does not match the transitions of the automaton");
  }
  return g;
}

GrammarAutomaton cfg_to_pa(const PomsetCFG& g) {
  PomsetAutomaton a({"_bot", "_top"}, 0, 1);
  std::map<RhsTerm, State> of;
  const State eps = a.add_state(to_string(RhsTerm::eps()), true);
  of.emplace(RhsTerm::eps(), eps);
  for (const auto& x : g.nonterminals()) {
    RhsTerm t = RhsTerm::nonterminal(x);
    of.emplace(t, a.add_state(to_string(t)));
  }
  // Subterm states, children before parents.
  auto intern = [&](auto& self, const RhsTerm& t) -> State {
    if (auto it = of.find(t); it != of.end()) return it->second;
    if (t.kind() == RhsTerm::Kind::Seq || t.kind() == RhsTerm::Kind::Par) {
      self(self, t.left());
      self(self, t.right());
    }
    State q = a.add_state(to_string(t));
    of.emplace(t, q);
    return q;
  };
  for (const auto& rule : g.rules()) intern(intern, rule.rhs);

  for (const auto& [t, q] : of) {
    switch (t.kind()) {
      case RhsTerm::Kind::Letter:
        a.set_delta(q, Letter(t.name()), a.top());
        break;
      case RhsTerm::Kind::Par:
        a.set_gamma(q, of.at(t.left()), of.at(t.right()), a.top());
        break;
      case RhsTerm::Kind::Seq:
        a.set_gamma(q, of.at(t.left()), a.top(), of.at(t.right()));
        break;
      default:
        break;
    }
  }
  for (const auto& rule : g.rules()) {
    a.set_gamma(of.at(RhsTerm::nonterminal(rule.lhs)), of.at(rule.rhs), a.top(), a.top());
  }
  return {std::move(a), of.at(RhsTerm::nonterminal(g.start()))};
}

}  // namespace pomkit
