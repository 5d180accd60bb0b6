#include "pomkit/extraction.hpp"

#include <algorithm>
#include <map>

#include "pomkit/errors.hpp"

namespace pomkit {

namespace {

// Constructors that absorb 0 and 1 where the language is unchanged.
Expr mk_plus(const Expr& a, const Expr& b) {
  if (a.is_zero()) return b;
  if (b.is_zero() || a == b) return a;
  return Expr::plus(a, b);
}

Expr mk_sum(std::vector<Expr> terms) {
  std::vector<Expr> kept;
  for (auto& t : terms) {
    if (t.is_zero() || std::find(kept.begin(), kept.end(), t) != kept.end()) continue;
    kept.push_back(std::move(t));
  }
  if (kept.empty()) return Expr::zero();
  Expr acc = kept.back();
  for (auto it = kept.rbegin() + 1; it != kept.rend(); ++it) acc = Expr::plus(*it, acc);
  return acc;
}

Expr mk_dot(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr::zero();
  if (a.kind() == Expr::Kind::One) return b;
  if (b.kind() == Expr::Kind::One) return a;
  return Expr::dot(a, b);
}

Expr mk_par(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr::zero();
  if (a.kind() == Expr::Kind::One) return b;
  if (b.kind() == Expr::Kind::One) return a;
  return Expr::par(a, b);
}

Expr mk_star(const Expr& a) {
  if (a.is_zero() || a.kind() == Expr::Kind::One) return Expr::one();
  return Expr::star(a);
}

// e^S restricted to rows (source states) and columns (target states), built
// up from the base case by adding one intermediate state at a time.
class PathTable {
 public:
  PathTable(const ExtractionContext& ctx, std::vector<State> rows, std::vector<State> cols)
      : ctx_(ctx), rows_(std::move(rows)), cols_(std::move(cols)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) row_of_[rows_[i]] = i;
    for (std::size_t j = 0; j < cols_.size(); ++j) col_of_[cols_[j]] = j;
    const auto& a = ctx.automaton;
    cells_.assign(rows_.size(), std::vector<Expr>(cols_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const State x = rows_[i];
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        const State y = cols_[j];
        if (y == a.bottom()) continue;
        std::vector<Expr> terms;
        if (x == y) terms.push_back(Expr::one());
        for (const auto& [letter, t] : a.delta_row(x)) {
          if (t == y) terms.push_back(Expr::lit(letter));
        }
        for (const auto& [rs, t] : a.gamma_row(x)) {
          if (t == y) terms.push_back(mk_par(ctx.expr_for(rs.first), ctx.expr_for(rs.second)));
        }
        cells_[i][j] = mk_sum(std::move(terms));
      }
    }
  }

  // Allows m as an intermediate state; m must be both a row and a column.
  void add(State m) {
    const std::size_t mi = row_of_.at(m);
    const std::size_t mj = col_of_.at(m);
    const Expr loop = mk_star(cells_[mi][mj]);
    auto next = cells_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (cells_[i][mj].is_zero()) continue;
      const Expr via = mk_dot(cells_[i][mj], loop);
      for (std::size_t j = 0; j < cols_.size(); ++j) {
        if (cols_[j] == ctx_.automaton.bottom()) continue;
        next[i][j] = mk_plus(cells_[i][j], mk_dot(via, cells_[mi][j]));
      }
    }
    cells_ = std::move(next);
  }

  const Expr& at(State x, State y) const { return cells_[row_of_.at(x)][col_of_.at(y)]; }

 private:
  const ExtractionContext& ctx_;
  std::vector<State> rows_;
  std::vector<State> cols_;
  std::map<State, std::size_t> row_of_;
  std::map<State, std::size_t> col_of_;
  std::vector<std::vector<Expr>> cells_;
};

std::vector<State> with(std::vector<State> v, std::initializer_list<State> extra) {
  v.insert(v.end(), extra.begin(), extra.end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

const Expr& ExtractionContext::expr_for(State q) const {
  if (q.index() >= memo.size() || !memo[q.index()]) {
    throw PreconditionViolation("no expression recorded yet for state '" + automaton.name(q) +
                                "'");
  }
  return *memo[q.index()];
}

Expr expr_between_in_order(const ExtractionContext& ctx, std::span<const State> order, State q,
                           State q2) {
  if (q2 == ctx.automaton.bottom()) return Expr::zero();
  std::vector<State> inner(order.begin(), order.end());
  PathTable table(ctx, with(inner, {q}), with(inner, {q, q2}));
  // The first state removed in the recursive definition is the last one added here.
  for (auto it = order.rbegin(); it != order.rend(); ++it) table.add(*it);
  return table.at(q, q2);
}

Expr expr_between(const ExtractionContext& ctx, std::span<const State> S, State q, State q2) {
  std::vector<State> order(S.begin(), S.end());
  std::sort(order.begin(), order.end());
  return expr_between_in_order(ctx, order, q, q2);
}

Expr recursive_state_expr(const ExtractionContext& ctx, State q) {
  if (ctx.classification.kinds.at(q.index()) != StateKind::Recursive) {
    throw PreconditionViolation("state '" + ctx.automaton.name(q) + "' is not recursive");
  }
  std::vector<Expr> terms;
  for (const auto& [rs, t] : ctx.automaton.gamma_row(q)) {
    if (rs.second == q && t == ctx.automaton.top()) terms.push_back(ctx.expr_for(rs.first));
  }
  return Expr::dagger(mk_sum(std::move(terms)));
}

void solve_support(ExtractionContext& ctx, State q) {
  const auto& a = ctx.automaton;
  const auto& cl = ctx.classification;
  const std::vector<State> sup = support(cl.preceq, q);

  std::vector<NotWellNested::Violation> bad;
  for (State x : sup) {
    if (cl.kinds[x.index()] == StateKind::Neither) bad.push_back({a.name(x), cl.reasons[x.index()]});
  }
  if (!bad.empty()) throw NotWellNested(std::move(bad));

  // Classes of mutually dependent states, ordered by the size of their down-set.
  std::map<std::pair<std::size_t, State>, std::vector<State>> classes;
  std::vector<bool> placed(a.size(), false);
  for (State x : sup) {
    if (placed[x.index()]) continue;
    std::vector<State> members;
    for (State y : sup) {
      if (cl.below(x, y) && cl.below(y, x)) {
        members.push_back(y);
        placed[y.index()] = true;
      }
    }
    classes.emplace(std::make_pair(support(cl.preceq, x).size(), members.front()), members);
  }

  for (const auto& [key, members] : classes) {
    if (std::all_of(members.begin(), members.end(),
                    [&](State x) { return ctx.memo[x.index()].has_value(); })) {
      continue;
    }
    std::vector<State> seq;
    std::vector<State> rec;
    for (State x : members) {
      (cl.kinds[x.index()] == StateKind::Recursive ? rec : seq).push_back(x);
    }
    for (State x : rec) ctx.memo[x.index()] = recursive_state_expr(ctx, x);
    if (!seq.empty()) {
      PathTable table(ctx, seq, sup);
      for (auto it = seq.rbegin(); it != seq.rend(); ++it) table.add(*it);
      for (State x : seq) {
        std::vector<Expr> terms;
        for (State r : seq) {
          if (a.accepting(r)) terms.push_back(table.at(x, r));
        }
        for (State r : rec) terms.push_back(mk_dot(table.at(x, r), ctx.expr_for(r)));
        for (State r : sup) {
          if (cl.strictly_below(r, x)) {
            const Expr& step = table.at(x, r);
            if (!step.is_zero()) terms.push_back(mk_dot(step, ctx.expr_for(r)));
          }
        }
        ctx.memo[x.index()] = mk_sum(std::move(terms));
      }
    }
    ctx.solved.push_back(members);
  }
}

Expr pa_to_expr(const PomsetAutomaton& a, State q) {
  ExtractionContext ctx(a);
  solve_support(ctx, q);
  return ctx.expr_for(q);
}

}  // namespace pomkit
