#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "pomkit/automaton.hpp"
#include "pomkit/expr.hpp"

namespace pomkit {

/// Expression with exactly `size` nodes over `letters`, drawn from `rng`.
Expr random_expr(std::mt19937_64& rng, std::size_t size, const std::vector<Letter>& letters);

/// Automaton with bottom, top and up to `max_states - 2` further states
/// named q0, q1, ...; transitions and forks are drawn from `rng`.
PomsetAutomaton random_automaton(std::mt19937_64& rng, std::size_t max_states,
                                 const std::vector<Letter>& letters);

}  // namespace pomkit
