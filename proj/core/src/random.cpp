#include "pomkit/random.hpp"

#include "pomkit/errors.hpp"

namespace pomkit {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

}  // namespace

Expr random_expr(std::mt19937_64& rng, std::size_t size, const std::vector<Letter>& letters) {
  if (size == 0) throw PreconditionViolation("expression size must be positive");
  if (letters.empty()) throw PreconditionViolation("random expressions need at least one letter");
  if (size == 1) {
    // Letters are drawn twice as often as each constant.
    std::size_t k = pick(rng, letters.size() * 2 + 2);
    if (k == 0) return Expr::zero();
    if (k == 1) return Expr::one();
    return Expr::lit(letters[(k - 2) % letters.size()]);
  }
  const bool unary = size == 2 || pick(rng, 4) == 0;
  if (unary) {
    Expr body = random_expr(rng, size - 1, letters);
    return pick(rng, 2) == 0 ? Expr::star(std::move(body)) : Expr::dagger(std::move(body));
  }
  const std::size_t left = 1 + pick(rng, size - 2);
  Expr l = random_expr(rng, left, letters);
  Expr r = random_expr(rng, size - 1 - left, letters);
  switch (pick(rng, 3)) {
    case 0: return Expr::plus(std::move(l), std::move(r));
    case 1: return Expr::dot(std::move(l), std::move(r));
    default: return Expr::par(std::move(l), std::move(r));
  }
}

PomsetAutomaton random_automaton(std::mt19937_64& rng, std::size_t max_states,
                                 const std::vector<Letter>& letters) {
  if (max_states < 3) throw PreconditionViolation("random automata need room for one state");
  PomsetAutomaton a;
  const std::size_t inner = 1 + pick(rng, max_states - 2);
  for (std::size_t i = 0; i < inner; ++i) a.add_state("q" + std::to_string(i), pick(rng, 3) == 0);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < inner; ++i) {
    State q(i + 2);
    for (const auto& letter : letters) {
      if (pick(rng, 2) == 0) a.set_delta(q, letter, State(pick(rng, n)));
    }
    const std::size_t forks = pick(rng, 3);
    for (std::size_t f = 0; f < forks; ++f) {
      State r(pick(rng, n));
      State s(pick(rng, n));
      a.set_gamma(q, r, s, State(pick(rng, n)));
    }
  }
  return a;
}

}  // namespace pomkit
