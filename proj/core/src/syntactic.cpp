#include "pomkit/syntactic.hpp"

#include <deque>
#include <map>

#include "pomkit/errors.hpp"

namespace pomkit {

namespace {

using Kind = Expr::Kind;

ExprClass zero_class() { return ExprClass(); }
ExprClass one_class() { return canonical_class(Expr::one()); }
ExprClass cls(const Expr& e) { return canonical_class(e); }

ExprClass sum(const ExprClass& a, const ExprClass& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return cls(Expr::plus(a.representative(), b.representative()));
}

// The derivatives recurse on representatives; every subterm of a
// representative is itself canonical, so re-canonicalizing them is cheap.
ExprClass derive(const Expr& e, const Letter& a) {
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One:
    case Kind::Par:
    case Kind::Dagger:
      return zero_class();
    case Kind::Lit:
      return e.letter() == a ? one_class() : zero_class();
    case Kind::Plus:
      return sum(derive(e.left(), a), derive(e.right(), a));
    case Kind::Dot:
      return sum(seq_guard(derive(e.left(), a), cls(e.right())),
                 null_guard(cls(e.left()), derive(e.right(), a)));
    case Kind::Star:
      return seq_guard(derive(e.body(), a), cls(e));
  }
  return zero_class();
}

ExprClass derive_fork(const Expr& e, const ExprClass& g, const ExprClass& h) {
  switch (e.kind()) {
    case Kind::Zero:
    case Kind::One:
    case Kind::Lit:
      return zero_class();
    case Kind::Plus:
      return sum(derive_fork(e.left(), g, h), derive_fork(e.right(), g, h));
    case Kind::Dot:
      return sum(seq_guard(derive_fork(e.left(), g, h), cls(e.right())),
                 null_guard(cls(e.left()), derive_fork(e.right(), g, h)));
    case Kind::Star:
      return seq_guard(derive_fork(e.body(), g, h), cls(e));
    case Kind::Par:
      return g == cls(e.left()) && h == cls(e.right()) ? one_class() : zero_class();
    case Kind::Dagger:
      return g == cls(e.body()) && h == cls(e) ? one_class() : zero_class();
  }
  return zero_class();
}

void collect_candidates(const Expr& e, std::set<std::pair<ExprClass, ExprClass>>& out) {
  switch (e.kind()) {
    case Kind::Plus:
      collect_candidates(e.left(), out);
      collect_candidates(e.right(), out);
      return;
    case Kind::Dot:
      collect_candidates(e.left(), out);
      if (nullable(e.left())) collect_candidates(e.right(), out);
      return;
    case Kind::Star:
      collect_candidates(e.body(), out);
      return;
    case Kind::Par:
      out.emplace(cls(e.left()), cls(e.right()));
      return;
    case Kind::Dagger:
      out.emplace(cls(e.body()), cls(e));
      return;
    default:
      return;
  }
}

}  // namespace

ExprClass seq_guard(const ExprClass& e, const ExprClass& f) {
  if (e.is_zero()) return zero_class();
  return cls(Expr::dot(e.representative(), f.representative()));
}

ExprClass null_guard(const ExprClass& e, const ExprClass& f) {
  return nullable(e.representative()) ? f : zero_class();
}

ExprClass delta_sigma(const ExprClass& e, const Letter& a) { return derive(e.representative(), a); }

ExprClass gamma_sigma(const ExprClass& e, const ExprClass& g, const ExprClass& h) {
  return derive_fork(e.representative(), g, h);
}

std::set<std::pair<ExprClass, ExprClass>> fork_candidates(const ExprClass& e) {
  std::set<std::pair<ExprClass, ExprClass>> out;
  collect_candidates(e.representative(), out);
  return out;
}

Exploration explore(const Expr& e, const Limits& limits) {
  Exploration x{PomsetAutomaton({"0", "1"}, 0, 1), State(0), {zero_class(), one_class()}};
  std::map<ExprClass, State> index{{x.classes[0], State(0)}, {x.classes[1], State(1)}};
  std::deque<State> work;
  auto intern = [&](const ExprClass& c) {
    if (auto it = index.find(c); it != index.end()) return it->second;
    if (x.classes.size() >= limits.max_states) {
      throw ResourceLimit("derivative exploration exceeded " +
                          std::to_string(limits.max_states) + " states");
    }
    State q = x.automaton.add_state(to_string(c), nullable(c.representative()));
    x.classes.push_back(c);
    index.emplace(c, q);
    work.push_back(q);
    return q;
  };
  x.start = intern(cls(e));
  const Alphabet sigma = letters(e);
  while (!work.empty()) {
    State q = work.front();
    work.pop_front();
    const ExprClass c = x.classes[q.index()];
    for (const auto& a : sigma) {
      ExprClass d = delta_sigma(c, a);
      if (!d.is_zero()) x.automaton.set_delta(q, a, intern(d));
    }
    for (const auto& [g, h] : fork_candidates(c)) {
      ExprClass t = gamma_sigma(c, g, h);
      if (t.is_zero()) continue;
      State sg = intern(g);
      State sh = intern(h);
      x.automaton.set_gamma(q, sg, sh, intern(t));
    }
  }
  return x;
}

}  // namespace pomkit
