#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace pomkit;

namespace {

Expr E(const char* text) { return parse_expr(text); }

std::vector<Letter> ab() { return {Letter("a"), Letter("b")}; }

Expr random_small(std::mt19937_64& rng) { return random_expr(rng, 1 + rng() % 4, ab()); }

// One axiom instance, read left to right or right to left.
std::pair<Expr, Expr> axiom(std::mt19937_64& rng, int which) {
  Expr e = random_small(rng), f = random_small(rng), g = random_small(rng);
  switch (which) {
    case 0: return {Expr::plus(e, f), Expr::plus(f, e)};
    case 1: return {Expr::plus(e, Expr::plus(f, g)), Expr::plus(Expr::plus(e, f), g)};
    case 2: return {Expr::plus(e, e), e};
    case 3: return {Expr::plus(e, Expr::zero()), e};
    default: return {Expr::dot(Expr::plus(e, f), g), Expr::plus(Expr::dot(e, g), Expr::dot(f, g))};
  }
}

// Places l and r at the same position of a random context.
std::pair<Expr, Expr> in_context(std::mt19937_64& rng, Expr l, Expr r, int depth) {
  for (int i = 0; i < depth; ++i) {
    Expr other = random_small(rng);
    switch (rng() % 7) {
      case 0: l = Expr::plus(l, other), r = Expr::plus(r, other); break;
      case 1: l = Expr::plus(other, l), r = Expr::plus(other, r); break;
      case 2: l = Expr::dot(l, other), r = Expr::dot(r, other); break;
      case 3: l = Expr::dot(other, l), r = Expr::dot(other, r); break;
      case 4: l = Expr::par(l, other), r = Expr::par(r, other); break;
      case 5: l = Expr::star(l), r = Expr::star(r); break;
      default: l = Expr::dagger(l), r = Expr::dagger(r); break;
    }
  }
  return {l, r};
}

}  // namespace

TEST_CASE("axiom examples") {
  CHECK(canonical_class(E("a.b+0")) == canonical_class(E("a.b")));
  CHECK(canonical_class(E("(a+b).c")) == canonical_class(E("a.c+b.c")));
  CHECK(congruent(E("a+a"), E("a")));
  CHECK(congruent(E("a+b"), E("b+a")));
  CHECK(congruent(E("(a+b)+c"), E("a+(b+c)")));
  CHECK(congruent(E("((a+b).c).d"), E("(a.c).d+(b.c).d")));
  CHECK(congruent(E("(a+0).b"), E("a.b")));
  CHECK(congruent(E("(a+b)*||c"), E("(b+a+b)*||c")));
}

TEST_CASE("documented non-congruences") {
  CHECK(canonical_class(E("a.(b+c)")) != canonical_class(E("a.b+a.c")));
  CHECK_FALSE(congruent(E("(a.b).c"), E("a.(b.c)")));
  CHECK_FALSE(congruent(E("0.a"), E("0")));
  CHECK_FALSE(congruent(E("1.a"), E("a")));
  CHECK_FALSE(congruent(E("a||b"), E("b||a")));
  CHECK_FALSE(congruent(E("a*"), E("1+a.a*")));
}

TEST_CASE("zero factors are absorbed only next to a matching summand") {
  CHECK(congruent(E("0.b+a.b"), E("a.b")));
  CHECK(congruent(E("(0+a).b"), E("a.b")));
  CHECK_FALSE(congruent(E("0.b+a.c"), E("a.c")));
  CHECK(congruent(E("0.c+(a.b).c"), E("(a.b).c")));
  CHECK(congruent(E("(0.b).c+(a.b).c"), E("(a.b).c")));
  CHECK_FALSE(congruent(E("0.(b.c)+(a.b).c"), E("(a.b).c")));
}

TEST_CASE("canonical class of a representative is itself") {
  const auto seed = oracle::seed();
  MESSAGE("seed " << seed);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 400; ++i) {
    Expr e = random_expr(rng, 1 + rng() % 12, ab());
    ExprClass c = canonical_class(e);
    CHECK(canonical_class(c.representative()) == c);
    CHECK(canonical_class(parse_expr(to_string(c))) == c);
    CHECK(congruent(e, c.representative()));
  }
}

TEST_CASE("axiom instances in context are congruent and sound") {
  const auto seed = oracle::seed();
  MESSAGE("seed " << seed);
  std::mt19937_64 rng(seed + 1);
  for (int i = 0; i < 250; ++i) {
    auto [l0, r0] = axiom(rng, i % 5);
    auto [l, r] = in_context(rng, l0, r0, static_cast<int>(rng() % 3));
    if (rng() % 2) std::swap(l, r);
    INFO(to_string(l) << "  vs  " << to_string(r));
    REQUIRE(congruent(l, r));
    CHECK(nullable(l) == nullable(r));
    CHECK(depth_measures(l) == depth_measures(r));
    CHECK(semantics_bounded(l, 4) == semantics_bounded(r, 4));
  }
}

TEST_CASE("congruence implies equal semantics on random pairs") {
  std::mt19937_64 rng(oracle::seed() + 2);
  std::vector<Expr> pool;
  for (int i = 0; i < 600; ++i) pool.push_back(random_expr(rng, 1 + rng() % 6, ab()));
  std::vector<ExprClass> classes;
  for (const auto& e : pool) classes.push_back(canonical_class(e));
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      if (pool[i] == pool[j] || classes[i] != classes[j]) continue;
      ++hits;
      CHECK(nullable(pool[i]) == nullable(pool[j]));
      CHECK(semantics_bounded(pool[i], 6) == semantics_bounded(pool[j], 6));
    }
  }
  MESSAGE(hits << " congruent pairs");
  CHECK(hits > 0);
}

TEST_CASE("class structure") {
  ExprClass zero = canonical_class(E("0+0"));
  CHECK(zero.is_zero());
  CHECK(zero == ExprClass{});
  CHECK(to_string(zero) == "0");
  ExprClass c = canonical_class(E("b+a+b"));
  CHECK(c.summands().size() == 2);
  CHECK(c == canonical_class(E("a+b")));
  CHECK(c.hash() == canonical_class(E("a+b")).hash());
}
