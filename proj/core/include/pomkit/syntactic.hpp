#pragma once

#include <set>
#include <utility>
#include <vector>

#include "pomkit/automaton.hpp"
#include "pomkit/expr.hpp"
#include "pomkit/limits.hpp"

namespace pomkit {

/// 0 when e is the class of 0, e.f otherwise.
ExprClass seq_guard(const ExprClass& e, const ExprClass& f);
/// f when e is nullable, 0 otherwise.
ExprClass null_guard(const ExprClass& e, const ExprClass& f);

/// Sequential derivative of a class by a letter.
ExprClass delta_sigma(const ExprClass& e, const Letter& a);
/// Parallel derivative: the class reached from e after branches g and h both accept.
ExprClass gamma_sigma(const ExprClass& e, const ExprClass& g, const ExprClass& h);

/// Every pair (g, h) for which gamma_sigma(e, g, h) can be nonzero, read off
/// the parallel and parallel-star nodes reachable along the summands of e.
std::set<std::pair<ExprClass, ExprClass>> fork_candidates(const ExprClass& e);

struct Exploration {
  PomsetAutomaton automaton;
  State start;
  /// The class each state stands for, by state index.
  std::vector<ExprClass> classes;
};

/// Materializes the states reachable from the class of `e` under both
/// derivatives and fork arguments.  State 0 is the class of 0 (bottom),
/// state 1 the class of 1 (top); states are named by their canonical
/// rendering.  Throws ResourceLimit beyond `limits.max_states` states.
Exploration explore(const Expr& e, const Limits& limits = {});

}  // namespace pomkit
