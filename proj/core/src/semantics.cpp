#include <unordered_map>

#include "pomkit/errors.hpp"
#include "pomkit/expr.hpp"

namespace pomkit {

namespace {

using Kind = Expr::Kind;

class Evaluator {
 public:
  Evaluator(std::size_t n, const Limits& limits) : n_(n), limits_(limits) {}

  const PomsetSet& eval(const Expr& e) {
    if (auto it = memo_.find(e.identity()); it != memo_.end()) return it->second;
    PomsetSet out;
    switch (e.kind()) {
      case Kind::Zero:
        break;
      case Kind::One:
        out.insert(Pomset::empty());
        break;
      case Kind::Lit:
        if (n_ >= 1) out.insert(Pomset::prim(e.letter()));
        break;
      case Kind::Plus: {
        out = eval(e.left());
        const auto& r = eval(e.right());
        out.insert(r.begin(), r.end());
        break;
      }
      case Kind::Dot:
        out = compose(eval(e.left()), eval(e.right()), seq_compose);
        break;
      case Kind::Par:
        out = compose(eval(e.left()), eval(e.right()), par_compose);
        break;
      case Kind::Star:
        out = closure(eval(e.body()), seq_compose);
        break;
      case Kind::Dagger:
        out = closure(eval(e.body()), par_compose);
        break;
    }
    check(out);
    return memo_.emplace(e.identity(), std::move(out)).first->second;
  }

 private:
  using Op = Pomset (*)(const Pomset&, const Pomset&);

  PomsetSet compose(const PomsetSet& l, const PomsetSet& r, Op op) {
    PomsetSet out;
    for (const auto& u : l) {
      for (const auto& v : r) {
        if (u.size() + v.size() <= n_) out.insert(op(u, v));
      }
      check(out);
    }
    return out;
  }

  // Least X with {1} and body-op-X inside X, restricted to size <= n; semi-naive.
  PomsetSet closure(const PomsetSet& body, Op op) {
    PomsetSet all{Pomset::empty()};
    PomsetSet frontier = all;
    while (!frontier.empty()) {
      PomsetSet next;
      for (const auto& u : body) {
        for (const auto& v : frontier) {
          if (u.size() + v.size() > n_) continue;
          Pomset w = op(u, v);
          if (!all.contains(w)) next.insert(std::move(w));
        }
      }
      all.insert(next.begin(), next.end());
      check(all);
      frontier = std::move(next);
    }
    return all;
  }

  void check(const PomsetSet& s) const {
    if (s.size() > limits_.max_pomsets) {
      throw ResourceLimit("pomset language slice exceeded budget of " +
                          std::to_string(limits_.max_pomsets));
    }
  }

  std::size_t n_;
  const Limits& limits_;
  std::unordered_map<const void*, PomsetSet> memo_;
};

}  // namespace

PomsetSet semantics_bounded(const Expr& e, std::size_t n, const Limits& limits) {
  Evaluator ev(n, limits);
  return ev.eval(e);
}

}  // namespace pomkit
