#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pomkit/automaton.hpp"
#include "pomkit/expr.hpp"

namespace pomkit {

/// State of an extraction over one automaton: the classification and the
/// expressions found so far, indexed by state.
struct ExtractionContext {
  explicit ExtractionContext(const PomsetAutomaton& a)
      : automaton(a), classification(classify_states(a)), memo(a.size()) {}

  const PomsetAutomaton& automaton;
  StateClassification classification;
  std::vector<std::optional<Expr>> memo;
  /// Classes of mutually dependent states, in the order they were solved.
  std::vector<std::vector<State>> solved;

  /// Throws PreconditionViolation when no expression is recorded for q.
  const Expr& expr_for(State q) const;
};

/// Expression for the paths from q to q2 made of unit traces whose
/// intermediate states lie in S.  Members of S are eliminated in ascending
/// index order.  Fork arguments leaving any row state must be memoized.
Expr expr_between(const ExtractionContext& ctx, std::span<const State> S, State q, State q2);
/// As expr_between, eliminating `order[0]` first, then `order[1]`, and so on.
Expr expr_between_in_order(const ExtractionContext& ctx, std::span<const State> order, State q,
                           State q2);

/// (sum of e_r over forks gamma(q, r, q) = top)^; q must be recursive.
Expr recursive_state_expr(const ExtractionContext& ctx, State q);

/// Solves every state in the support of q, in increasing order of the
/// trace dependency preorder.  Throws NotWellNested listing each state of
/// that support that is neither sequential nor recursive.
void solve_support(ExtractionContext& ctx, State q);

/// An expression whose language is the language of q.
Expr pa_to_expr(const PomsetAutomaton& a, State q);

}  // namespace pomkit
