#pragma once

#include <cstddef>

namespace pomkit {

/// Budgets shared by every bounded computation.
///
/// `max_pomsets` caps the cardinality of any intermediate pomset set
/// (enumeration, bounded semantics, bounded languages, grammar generation).
/// `max_states` caps the number of states discovered by derivative exploration.
struct Limits {
  std::size_t max_pomsets = 2'000'000;
  std::size_t max_states = 10'000;
};

}  // namespace pomkit
