#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pomkit/limits.hpp"
#include "pomkit/pomset.hpp"
#include "pomkit/relation.hpp"

namespace pomkit {

/// Dense index of a state within one automaton.
class State {
 public:
  constexpr State() = default;
  constexpr explicit State(std::size_t index) : index_(static_cast<std::uint32_t>(index)) {}

  constexpr std::size_t index() const noexcept { return index_; }

  friend constexpr bool operator==(State, State) = default;
  friend constexpr auto operator<=>(State, State) = default;

 private:
  std::uint32_t index_ = 0;
};

/// Finite pomset automaton with distinguished states bottom and top.
///
/// Both transition functions are total; entries that are not stored map to
/// bottom.  Bottom is never accepting, top always is, and neither has
/// outgoing transitions.
class PomsetAutomaton {
 public:
  using DeltaRow = std::map<Letter, State>;
  using GammaRow = std::map<std::pair<State, State>, State>;

  /// An automaton holding only bottom and top.
  PomsetAutomaton() : PomsetAutomaton({"_bot", "_top"}, 0, 1) {}
  /// States named `names` in that order; `bottom` and `top` index into it.
  PomsetAutomaton(std::vector<std::string> names, std::size_t bottom, std::size_t top);

  State add_state(std::string name, bool accepting = false);
  void set_accepting(State q, bool accepting = true);
  /// Setting a bottom target removes the entry.  Throws InvalidAutomaton for
  /// unknown states or a source that is bottom or top.
  void set_delta(State q, const Letter& a, State target);
  void set_gamma(State q, State r, State s, State target);

  std::size_t size() const noexcept { return names_.size(); }
  std::vector<State> states() const;
  State bottom() const noexcept { return bottom_; }
  State top() const noexcept { return top_; }

  const std::string& name(State q) const;
  std::optional<State> find(std::string_view name) const;
  /// Throws InvalidAutomaton if no state has this name.
  State state(std::string_view name) const;

  bool accepting(State q) const;
  State delta(State q, const Letter& a) const;
  State gamma(State q, State r, State s) const;
  const DeltaRow& delta_row(State q) const;
  const GammaRow& gamma_row(State q) const;

  /// Letters occurring in stored sequential transitions.
  Alphabet alphabet() const;
  std::size_t delta_count() const noexcept;
  std::size_t gamma_count() const noexcept;

 private:
  void check(State q) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, State> index_;
  std::vector<bool> accepting_;
  std::vector<DeltaRow> delta_;
  std::vector<GammaRow> gamma_;
  State bottom_;
  State top_;
};

/// Endpoint relations of the trace relation, one per pomset, with a shared memo.
///
/// relation(u) holds (q, q') exactly when q --u--> q' is a trace and q' is
/// not bottom.  Results are cached for the lifetime of the engine, which must
/// not outlive the automaton.
class TraceEngine {
 public:
  explicit TraceEngine(const PomsetAutomaton& automaton);

  const Relation& relation(const Pomset& u);
  bool accepts(State q, const Pomset& u);
  /// Pomsets of size at most `n` accepted from `q`.  Only pomsets that label
  /// some trace avoiding bottom are used as parts of larger candidates.
  PomsetSet language_bounded(State q, std::size_t n, const Limits& limits = {});

 private:
  Relation fork(const Relation& left, const Relation& right) const;
  std::vector<std::uint64_t> accepting_sources(const Relation& r) const;
  void close(Relation& r) const;
  Relation compute(const Pomset& u);

  struct Fork {
    std::size_t q, r, s, t;
  };

  const PomsetAutomaton& automaton_;
  std::vector<std::uint64_t> final_;
  std::vector<Fork> forks_;
  Relation unit_;
  std::unordered_map<Pomset, Relation> memo_;
};

bool accepts(const PomsetAutomaton& a, State q, const Pomset& u);
PomsetSet language_bounded(const PomsetAutomaton& a, State q, std::size_t n,
                           const Limits& limits = {});

/// Generating pairs (lower, upper) of the trace dependency preorder.
std::vector<std::pair<State, State>> dependency_edges(const PomsetAutomaton& a);

/// The trace dependency preorder; test(x, y) means x is below y.
Relation trace_preorder(const PomsetAutomaton& a);
/// x strictly below y iff x below y and not y below x.
Relation strict_part(const Relation& preorder);

enum class StateKind : std::uint8_t { Sequential, Recursive, Neither };

std::string_view to_string(StateKind kind);

struct StateClassification {
  Relation preceq;
  Relation prec;
  std::vector<StateKind> kinds;
  /// For each Neither state, the clauses it violates; empty otherwise.
  std::vector<std::vector<std::string>> reasons;

  bool strictly_below(State x, State y) const { return prec.test(x.index(), y.index()); }
  bool below(State x, State y) const { return preceq.test(x.index(), y.index()); }
  bool well_nested() const;
  std::vector<State> neither() const;
};

StateClassification classify_states(const PomsetAutomaton& a);

/// Smallest downward-closed set containing q, in ascending index order.
std::vector<State> support(const PomsetAutomaton& a, State q);
std::vector<State> support(const Relation& preorder, State q);

/// Sub-automaton on `keep` (bottom and top are always kept).  States keep
/// their names; transitions touching a dropped state are removed.
PomsetAutomaton restrict_to(const PomsetAutomaton& a, std::span<const State> keep);

/// Automaton text format:
/// {"states": [...], "accepting": [...], "bottom": q, "top": q,
///  "delta": [[q, a, q']], "gamma": [[q, r, s, q']]}.
/// Missing entries mean bottom; bottom and top are synthesized when absent,
/// and transitions out of them are ignored.  Throws InvalidAutomaton.
PomsetAutomaton parse_automaton_json(std::string_view text);
PomsetAutomaton load_automaton(const std::string& path);
/// Deterministic rendering; `start`, when given, is emitted as "start".
std::string to_json(const PomsetAutomaton& a, std::optional<State> start = std::nullopt);
std::string to_dot(const PomsetAutomaton& a, std::optional<State> start = std::nullopt);

}  // namespace pomkit

template <>
struct std::hash<pomkit::State> {
  std::size_t operator()(pomkit::State q) const noexcept { return q.index(); }
};
