#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pomkit/limits.hpp"
#include "pomkit/pomset.hpp"

namespace pomkit {

struct DepthMeasures {
  std::size_t d_par = 0;     // nesting of ||
  std::size_t d_dagger = 0;  // nesting of ^
  friend bool operator==(const DepthMeasures&, const DepthMeasures&) = default;
};

/// Series-parallel rational expression: 0, 1, a, e+f, e.f, e||f, e*, e^ (parallel star).
///
/// Immutable binary tree kept exactly as built; no operator is normalized on
/// construction.  Nullability and the two nesting measures are computed once
/// per node, so they cost O(1) on arbitrarily shared (DAG-shaped) terms.
class Expr {
 public:
  enum class Kind : std::uint8_t { Zero, One, Lit, Plus, Dot, Par, Star, Dagger };

  Expr() = default;  // Zero

  static Expr zero() { return {}; }
  static Expr one();
  static Expr lit(Letter letter);
  static Expr plus(Expr l, Expr r);
  static Expr dot(Expr l, Expr r);
  static Expr par(Expr l, Expr r);
  static Expr star(Expr body);
  static Expr dagger(Expr body);

  Kind kind() const noexcept;
  bool is_zero() const noexcept { return node_ == nullptr; }

  const Letter& letter() const;
  /// Left operand of a binary node, or the body of a star/dagger.
  const Expr& left() const;
  const Expr& right() const;
  const Expr& body() const { return left(); }

  std::size_t hash() const noexcept;
  /// Node count of the expression viewed as a tree (saturates at SIZE_MAX).
  std::size_t tree_size() const noexcept;
  /// Identity of the underlying node, usable as a memo key for the lifetime of the value.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Expr& a, const Expr& b) noexcept;
  friend std::strong_ordering operator<=>(const Expr& a, const Expr& b) noexcept;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(Kind kind, Letter letter, Expr l, Expr r, bool canonical);

  friend struct ExprAccess;
  friend bool nullable(const Expr& e);
  friend DepthMeasures depth_measures(const Expr& e);

  std::shared_ptr<const Node> node_;
};

/// Expression text: `0`, `1`, identifiers, postfix `*` and `^`, infix `.`,
/// `||`, `+`, parentheses.  Precedence postfix > `.` > `||` > `+`; binary
/// operators associate to the right.  Throws SyntaxError.
Expr parse_expr(std::string_view text);

/// Minimal-parenthesis rendering; parse_expr(to_string(e)) == e.
std::string to_string(const Expr& e);

/// True iff the empty pomset belongs to the language of `e`.
bool nullable(const Expr& e);

DepthMeasures depth_measures(const Expr& e);

Alphabet letters(const Expr& e);

/// Every pomset of the language of `e` with at most `n` letter occurrences.
/// Throws ResourceLimit when an intermediate set exceeds `limits.max_pomsets`.
PomsetSet semantics_bounded(const Expr& e, std::size_t n, const Limits& limits = {});

/// Representative of an expression modulo the congruence generated by
/// associativity, commutativity, and idempotence of +, unit 0 for +, and
/// left distributivity (e+f).g = e.g + f.g.
///
/// The representative is a sum of normal terms, sorted and duplicate free,
/// nested to the right; an empty sum is 0.  A normal term is 1, a letter,
/// a parallel composition, star, or dagger of representatives, or t.g where
/// t is a normal term or 0 and g a representative.  A term 0.g is dropped
/// when another summand ends in the same chain of right factors, since
/// 0.g + t.g is congruent to (0 + t).g and hence to t.g.
class ExprClass {
 public:
  ExprClass() = default;  // class of 0

  const Expr& representative() const noexcept { return repr_; }
  std::span<const Expr> summands() const noexcept { return summands_; }
  bool is_zero() const noexcept { return summands_.empty(); }
  std::size_t hash() const noexcept { return repr_.hash(); }

  friend bool operator==(const ExprClass& a, const ExprClass& b) noexcept {
    return a.repr_ == b.repr_;
  }
  friend std::strong_ordering operator<=>(const ExprClass& a, const ExprClass& b) noexcept {
    return a.repr_ <=> b.repr_;
  }

 private:
  friend ExprClass canonical_class(const Expr& e);
  ExprClass(Expr repr, std::vector<Expr> summands)
      : repr_(std::move(repr)), summands_(std::move(summands)) {}

  Expr repr_;
  std::vector<Expr> summands_;
};

ExprClass canonical_class(const Expr& e);
bool congruent(const Expr& e, const Expr& f);
std::string to_string(const ExprClass& c);

}  // namespace pomkit

template <>
struct std::hash<pomkit::Expr> {
  std::size_t operator()(const pomkit::Expr& e) const noexcept { return e.hash(); }
};

template <>
struct std::hash<pomkit::ExprClass> {
  std::size_t operator()(const pomkit::ExprClass& c) const noexcept { return c.hash(); }
};
