#pragma once

#include "pomkit/expr.hpp"

namespace pomkit {

// Library-internal access to node flags used by the canonicalizer.
struct ExprAccess {
  static bool is_canonical(const Expr& e) noexcept;
  static Expr make_canonical(Expr::Kind kind, Letter letter, Expr l, Expr r);
};

}  // namespace pomkit
