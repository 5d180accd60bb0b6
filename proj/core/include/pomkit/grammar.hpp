#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pomkit/automaton.hpp"
#include "pomkit/limits.hpp"
#include "pomkit/pomset.hpp"

namespace pomkit {

/// Right-hand side of a grammar rule: a binary tree of sequential and
/// parallel products over letters, nonterminals, and the empty term.
/// Letters and nonterminals are separate name spaces.
class RhsTerm {
 public:
  enum class Kind : std::uint8_t { Eps, Letter, NonTerminal, Seq, Par };

  RhsTerm() = default;  // Eps

  static RhsTerm eps() { return {}; }
  static RhsTerm letter(Letter a);
  static RhsTerm nonterminal(std::string name);
  static RhsTerm seq(RhsTerm l, RhsTerm r);
  static RhsTerm par(RhsTerm l, RhsTerm r);

  Kind kind() const noexcept;
  /// Letter name or nonterminal name of a leaf.
  const std::string& name() const;
  const RhsTerm& left() const;
  const RhsTerm& right() const;

  friend bool operator==(const RhsTerm& a, const RhsTerm& b) noexcept;
  friend std::strong_ordering operator<=>(const RhsTerm& a, const RhsTerm& b) noexcept;

 private:
  struct Node;
  explicit RhsTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Rule {
  std::string lhs;
  RhsTerm rhs;
  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// Context-free pomset grammar.  Nonterminals keep their declaration order.
class PomsetCFG {
 public:
  /// Throws UndeclaredNonterminal if the start symbol, a left-hand side, or a
  /// nonterminal inside a right-hand side is not in `nonterminals`.
  PomsetCFG(std::vector<std::string> nonterminals, std::string start, std::vector<Rule> rules);

  const std::vector<std::string>& nonterminals() const noexcept { return nonterminals_; }
  const std::string& start() const noexcept { return start_; }
  /// Duplicate-free, in insertion order.
  const std::vector<Rule>& rules() const noexcept { return rules_; }

 private:
  std::vector<std::string> nonterminals_;
  std::string start_;
  std::vector<Rule> rules_;
};

/// Rendering used by the text format: `eps`, letters, nonterminals, `.` and
/// `||` with minimal parentheses.  Letters that are not lowercase
/// identifiers are written 'quoted'; nonterminals that are not capitalized
/// identifiers are written <bracketed>.
std::string to_string(const RhsTerm& t);

/// One rule per line, `X -> t | t`; a line `X ->` only declares X.  Terms
/// combine with `.` (or juxtaposition) and `||`, `.` binding tighter; both
/// associate to the right.  `#` starts a comment.  The first left-hand side
/// is the start symbol.  Throws SyntaxError or UndeclaredNonterminal.
PomsetCFG parse_cfg(std::string_view text);
std::string to_text(const PomsetCFG& g);

/// {"nonterminals": [...], "start": X, "rules": [{"lhs": X, "rhs": term}]}
/// with terms {"kind": "eps"}, {"kind": "letter" | "nonterminal", "name": n},
/// {"kind": "seq" | "par", "left": term, "right": term}.
std::string to_json(const PomsetCFG& g);
PomsetCFG parse_cfg_json(std::string_view text);
/// Reads either format; JSON is recognized by a leading '{'.
PomsetCFG load_cfg(const std::string& path);

/// Pomset denoted by a right-hand side without nonterminals.  Throws
/// PreconditionViolation if `t` mentions a nonterminal.
Pomset evaluate_closed(const RhsTerm& t);

/// Every pomset of size at most n derivable from the start symbol.
PomsetSet generate_bounded(const PomsetCFG& g, std::size_t n, const Limits& limits = {});

/// Nonterminals are the states (by name); rules q -> a.delta(q,a) and
/// q -> (r||s).gamma(q,r,s) for targets other than bottom, and q -> eps for
/// accepting q.
PomsetCFG pa_to_cfg(const PomsetAutomaton& a, State start);

struct GrammarAutomaton {
  PomsetAutomaton automaton;
  State start;
};

/// States are the nonterminals, the subterms of right-hand sides, eps, top,
/// and bottom, each named by its rendering (bottom "_bot", top "_top").
GrammarAutomaton cfg_to_pa(const PomsetCFG& g);

}  // namespace pomkit
