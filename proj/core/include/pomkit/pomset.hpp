#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pomkit/limits.hpp"

namespace pomkit {

/// An action label drawn from a finite alphabet.
class Letter {
 public:
  Letter() = default;
  explicit Letter(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  std::string name_;
};

using Alphabet = std::set<Letter>;

/// A series-parallel pomset in canonical form.
///
/// Values are immutable trees: Empty, Prim(letter), Seq(parts) with at least
/// two non-Empty, non-Seq parts, and Par(parts) with at least two non-Empty,
/// non-Par parts stored in ascending canonical order.  Two values compare
/// equal exactly when the pomsets they denote are isomorphic.
class Pomset {
 public:
  enum class Kind : std::uint8_t { Empty, Prim, Seq, Par };

  Pomset() = default;  // Empty

  static Pomset empty() { return {}; }
  static Pomset prim(Letter letter);

  Kind kind() const noexcept;
  bool is_empty() const noexcept { return node_ == nullptr; }

  /// Letter of a Prim node; precondition kind() == Prim.
  const Letter& letter() const;
  /// Children of a Seq or Par node; empty span otherwise.
  std::span<const Pomset> parts() const noexcept;

  /// Number of letter occurrences (carrier size).
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Pomset& a, const Pomset& b) noexcept;
  friend std::strong_ordering operator<=>(const Pomset& a, const Pomset& b) noexcept;

 private:
  struct Node;
  explicit Pomset(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  friend Pomset make_seq_node(std::vector<Pomset> parts);
  friend Pomset make_par_node(std::vector<Pomset> parts);

  std::shared_ptr<const Node> node_;
};

using PomsetSet = std::set<Pomset>;

Pomset seq_compose(const Pomset& u, const Pomset& v);
Pomset par_compose(const Pomset& u, const Pomset& v);

/// Sequential composition of a list, left to right.
Pomset seq_of(std::span<const Pomset> parts);
/// Parallel composition of a list, in any order.
Pomset par_of(std::span<const Pomset> parts);

/// Nesting depth: 0 for Empty, 1 for a letter, 1 + max over parts otherwise.
std::size_t depth(const Pomset& u);

/// Result of the unique factorization of a non-empty pomset.
struct Factorization {
  enum class Kind : std::uint8_t { Primitive, Sequential, Parallel };
  Kind kind;
  Letter letter;               // Primitive only
  std::vector<Pomset> parts;   // Sequential (ordered) or Parallel (multiset)
};

/// Throws EmptyPomset on Empty.
Factorization factorize(const Pomset& u);

/// Letters occurring in `u`.
Alphabet letters(const Pomset& u);

/// All canonical series-parallel pomsets over `alphabet` with at most `n`
/// letter occurrences, Empty included.  Throws ResourceLimit once more than
/// `limits.max_pomsets` pomsets have been produced.
PomsetSet enumerate_pomsets(const Alphabet& alphabet, std::size_t n,
                            const Limits& limits = {});

/// Enumeration with pruning: a generated pomset is kept, and used as a part
/// of larger pomsets, only if `admit` returns true for it.  Empty is always
/// reported and never passed to `admit`.  Results are grouped by size.
std::vector<std::vector<Pomset>> enumerate_pomsets_pruned(
    const Alphabet& alphabet, std::size_t n,
    const std::function<bool(const Pomset&)>& admit, const Limits& limits = {});

/// Parses `1`, identifiers, `.`, `||` and parentheses; `.` binds tighter than `||`.
Pomset parse_pomset(std::string_view text);

/// Renders in the syntax accepted by parse_pomset.
std::string to_string(const Pomset& u);

}  // namespace pomkit

template <>
struct std::hash<pomkit::Pomset> {
  std::size_t operator()(const pomkit::Pomset& u) const noexcept { return u.hash(); }
};

template <>
struct std::hash<pomkit::Letter> {
  std::size_t operator()(const pomkit::Letter& l) const noexcept {
    return std::hash<std::string>{}(l.name());
  }
};
