#include "doctest.h"
#include "oracles.hpp"

using namespace pomkit;

namespace {

ExprClass C(const char* text) { return canonical_class(parse_expr(text)); }
Pomset P(const char* text) { return parse_pomset(text); }

std::vector<Expr> corpus() {
  std::vector<Expr> out;
  for (const auto& line : oracle::read_lines("corpus.txt")) out.push_back(parse_expr(line));
  return out;
}

bool is_dagger_class(const ExprClass& c) {
  return c.representative().kind() == Expr::Kind::Dagger;
}

}  // namespace

TEST_CASE("guards") {
  CHECK(seq_guard(C("0"), C("a")) == C("0"));
  CHECK(seq_guard(C("1"), C("a")) == C("1.a"));
  CHECK(seq_guard(C("1"), C("a")) != C("a"));
  CHECK(seq_guard(C("a+b"), C("c")) == C("a.c+b.c"));
  CHECK(null_guard(C("1"), C("b")) == C("b"));
  CHECK(null_guard(C("a"), C("b")) == C("0"));
  CHECK(null_guard(C("a*"), C("b")) == C("b"));
}

TEST_CASE("sequential derivatives") {
  const Letter a("a");
  CHECK(delta_sigma(C("a"), a) == C("1"));
  CHECK(delta_sigma(C("b"), a) == C("0"));
  CHECK(delta_sigma(C("a||b"), a) == C("0"));
  CHECK(delta_sigma(C("a.b"), a) == C("1.b"));
  CHECK(delta_sigma(C("a*"), a) == C("1.a*"));
  CHECK(delta_sigma(C("a^"), a) == C("0"));
  CHECK(delta_sigma(C("b*.a"), a) == C("1"));
  CHECK(delta_sigma(C("a.b+a.c"), a) == C("1.b+1.c"));
}

TEST_CASE("parallel derivatives") {
  CHECK(gamma_sigma(C("a||b"), C("a"), C("b")) == C("1"));
  CHECK(gamma_sigma(C("a||b"), C("b"), C("a")) == C("0"));
  for (const char* g : {"0", "1", "a", "b"}) {
    for (const char* h : {"0", "1", "a", "b"}) CHECK(gamma_sigma(C("b"), C(g), C(h)) == C("0"));
  }
  CHECK(gamma_sigma(C("a^"), C("a"), C("a^")) == C("1"));
  CHECK(gamma_sigma(C("(a||b).c"), C("a"), C("b")) == C("1.c"));
  CHECK(gamma_sigma(C("c*.(a||b)"), C("a"), C("b")) == C("1"));
  CHECK(gamma_sigma(C("c.(a||b)"), C("a"), C("b")) == C("0"));
}

TEST_CASE("fork candidates cover every nonzero parallel derivative") {
  for (const auto& e : corpus()) {
    Exploration x = explore(e);
    if (x.classes.size() > 40) continue;
    for (const auto& c : x.classes) {
      auto cands = fork_candidates(c);
      for (const auto& g : x.classes) {
        for (const auto& h : x.classes) {
          if (!gamma_sigma(c, g, h).is_zero()) CHECK(cands.contains({g, h}));
        }
      }
    }
  }
}

TEST_CASE("explore examples") {
  Exploration star = explore(parse_expr("a*"));
  CHECK(star.automaton.size() == 4);
  State s = star.start;
  CHECK(star.classes[s.index()] == C("a*"));
  State s1 = star.automaton.delta(s, Letter("a"));
  CHECK(star.classes[s1.index()] == C("1.a*"));
  CHECK(star.automaton.delta(s1, Letter("a")) == s1);
  CHECK(star.classes[0] == C("0"));
  CHECK(star.classes[1] == C("1"));
  CHECK(star.automaton.bottom() == State(0));
  CHECK(star.automaton.top() == State(1));

  Exploration par = explore(parse_expr("a||b"));
  auto find = [&](const char* t) {
    for (std::size_t i = 0; i < par.classes.size(); ++i) {
      if (par.classes[i] == C(t)) return State(i);
    }
    FAIL("missing class " << t);
    return State();
  };
  CHECK(par.automaton.gamma(find("a||b"), find("a"), find("b")) == par.automaton.top());

  Exploration zero = explore(parse_expr("0"));
  CHECK(zero.automaton.size() == 2);
  CHECK(language_bounded(zero.automaton, zero.start, 5).empty());
}

TEST_CASE("explored transitions are the derivatives") {
  for (const auto& e : corpus()) {
    Exploration x = explore(e);
    const Alphabet sigma = letters(e);
    for (State q : x.automaton.states()) {
      const ExprClass& c = x.classes[q.index()];
      if (q == x.automaton.bottom() || q == x.automaton.top()) continue;
      CHECK(x.automaton.accepting(q) == nullable(c.representative()));
      for (const auto& l : sigma) {
        CHECK(x.classes[x.automaton.delta(q, l).index()] == delta_sigma(c, l));
      }
      for (const auto& [rs, t] : x.automaton.gamma_row(q)) {
        CHECK(x.classes[t.index()] ==
              gamma_sigma(c, x.classes[rs.first.index()], x.classes[rs.second.index()]));
      }
    }
  }
}

TEST_CASE("explored languages equal the semantics") {
  for (const auto& e : corpus()) {
    Exploration x = explore(e);
    CHECK_MESSAGE(language_bounded(x.automaton, x.start, 5) == semantics_bounded(e, 5),
                  to_string(e));
  }
}

TEST_CASE("explored automata are well-nested") {
  for (const auto& e : corpus()) {
    auto cls = classify_states(explore(e).automaton);
    CHECK_MESSAGE(cls.well_nested(), to_string(e));
  }
}

TEST_CASE("depth measures are monotone along dependency edges") {
  for (const auto& e : corpus()) {
    Exploration x = explore(e);
    for (const auto& [lo, hi] : dependency_edges(x.automaton)) {
      auto dl = depth_measures(x.classes[lo.index()].representative());
      auto dh = depth_measures(x.classes[hi.index()].representative());
      CHECK(dl.d_par <= dh.d_par);
      CHECK(dl.d_dagger <= dh.d_dagger);
    }
  }
}

TEST_CASE("dependency cycles through a dagger state are trivial") {
  for (const auto& e : corpus()) {
    Exploration x = explore(e);
    Relation le = trace_preorder(x.automaton);
    for (State q : x.automaton.states()) {
      if (!is_dagger_class(x.classes[q.index()])) continue;
      for (State r : x.automaton.states()) {
        if (le.test(r.index(), q.index()) && le.test(q.index(), r.index())) CHECK(r == q);
      }
    }
  }
}

TEST_CASE("fork arguments sit below the forking state") {
  for (const auto& e : corpus()) {
    Exploration x = explore(e);
    auto cls = classify_states(x.automaton);
    for (State q : x.automaton.states()) {
      for (const auto& [rs, t] : x.automaton.gamma_row(q)) {
        CHECK(cls.strictly_below(rs.first, q));
        CHECK((cls.strictly_below(rs.second, q) || is_dagger_class(x.classes[q.index()])));
      }
    }
  }
}

TEST_CASE("state budget") {
  Limits tight;
  tight.max_states = 3;
  CHECK_THROWS_AS(explore(parse_expr("(a.b)*.c"), tight), ResourceLimit);
  CHECK_NOTHROW(explore(parse_expr("a"), tight));
}

TEST_CASE("explored names are canonical renderings") {
  Exploration x = explore(parse_expr("(a+b)*"));
  for (State q : x.automaton.states()) {
    CHECK(x.automaton.name(q) == to_string(x.classes[q.index()]));
  }
  CHECK(accepts(x.automaton, x.start, P("a.b.a")));
}
