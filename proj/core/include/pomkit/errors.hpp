#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pomkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression, pomset, or grammar text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class EmptyPomset : public Error {
 public:
  EmptyPomset() : Error("the empty pomset has no factorization") {}
};

/// A configured cardinality or state budget was exhausted.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented precondition.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// Structurally invalid automaton (unknown state, transition out of bottom/top, ...).
class InvalidAutomaton : public Error {
 public:
  using Error::Error;
};

class UndeclaredNonterminal : public Error {
 public:
  explicit UndeclaredNonterminal(std::string name)
      : Error("undeclared nonterminal '" + name + "'"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Raised by expression extraction when some state is neither sequential nor recursive.
class NotWellNested : public Error {
 public:
  struct Violation {
    std::string state;
    std::vector<std::string> reasons;
  };

  explicit NotWellNested(std::vector<Violation> violations)
      : Error(describe(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string describe(const std::vector<Violation>& violations) {
    std::string out = "automaton is not well-nested:";
    for (const auto& v : violations) {
      out += " " + v.state;
      for (const auto& r : v.reasons) out += " [" + r + "]";
      out += ";";
    }
    return out;
  }

  std::vector<Violation> violations_;
};

}  // namespace pomkit
