#include <algorithm>
#include <unordered_map>

#include "expr_access.hpp"
#include "pomkit/expr.hpp"

namespace pomkit {

namespace {

using Kind = Expr::Kind;

// Right factors of a normal term, outermost first, and its head.
std::vector<Expr> right_factors(const Expr& t, Expr& head) {
  std::vector<Expr> out;
  const Expr* cur = &t;
  while (cur->kind() == Kind::Dot) {
    out.push_back(cur->right());
    cur = &cur->left();
  }
  head = *cur;
  return out;
}

bool is_prefix(const std::vector<Expr>& p, const std::vector<Expr>& of) {
  return p.size() <= of.size() && std::equal(p.begin(), p.end(), of.begin());
}

class Normalizer {
 public:
  std::vector<Expr> summands(const Expr& e) {
    if (ExprAccess::is_canonical(e)) return unpack(e);
    if (auto it = memo_.find(e.identity()); it != memo_.end()) return it->second;
    std::vector<Expr> terms;
    switch (e.kind()) {
      case Kind::Zero:
        break;
      case Kind::One:
      case Kind::Lit:
        terms.push_back(e);
        break;
      case Kind::Plus: {
        terms = summands(e.left());
        auto more = summands(e.right());
        terms.insert(terms.end(), more.begin(), more.end());
        finish(terms);
        break;
      }
      case Kind::Dot: {
        Expr g = representative(e.right());
        auto lefts = summands(e.left());
        if (lefts.empty()) lefts.push_back(Expr::zero());
        for (auto& t : lefts) terms.push_back(ExprAccess::make_canonical(Kind::Dot, {}, t, g));
        finish(terms);
        break;
      }
      case Kind::Par:
        terms.push_back(ExprAccess::make_canonical(Kind::Par, {}, representative(e.left()),
                                                   representative(e.right())));
        break;
      case Kind::Star:
      case Kind::Dagger:
        terms.push_back(ExprAccess::make_canonical(e.kind(), {}, representative(e.body()), {}));
        break;
    }
    memo_.emplace(e.identity(), terms);
    return terms;
  }

  Expr representative(const Expr& e) {
    if (ExprAccess::is_canonical(e)) return e;
    if (auto it = repr_memo_.find(e.identity()); it != repr_memo_.end()) return it->second;
    Expr r = embed(summands(e));
    repr_memo_.emplace(e.identity(), r);
    return r;
  }

  static Expr embed(const std::vector<Expr>& terms) {
    if (terms.empty()) return Expr::zero();
    Expr acc = terms.back();
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
      acc = ExprAccess::make_canonical(Kind::Plus, {}, *it, acc);
    }
    return acc;
  }

 private:
  static std::vector<Expr> unpack(const Expr& e) {
    std::vector<Expr> out;
    if (e.is_zero()) return out;
    const Expr* cur = &e;
    while (cur->kind() == Kind::Plus) {
      out.push_back(cur->left());
      cur = &cur->right();
    }
    out.push_back(*cur);
    return out;
  }

  // Sort, deduplicate, and drop each 0.g absorbed by a summand sharing its right factors.
  static void finish(std::vector<Expr>& terms) {
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    std::vector<std::vector<Expr>> factors(terms.size());
    std::vector<bool> zero_head(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
      Expr head;
      factors[i] = right_factors(terms[i], head);
      zero_head[i] = head.is_zero() && !factors[i].empty();
    }
    std::vector<Expr> kept;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      bool absorbed = false;
      if (zero_head[i]) {
        for (std::size_t j = 0; j < terms.size() && !absorbed; ++j) {
          absorbed = j != i && is_prefix(factors[i], factors[j]);
        }
      }
      if (!absorbed) kept.push_back(terms[i]);
    }
    terms = std::move(kept);
  }

  std::unordered_map<const void*, std::vector<Expr>> memo_;
  std::unordered_map<const void*, Expr> repr_memo_;
};

}  // namespace

ExprClass canonical_class(const Expr& e) {
  Normalizer n;
  auto terms = n.summands(e);
  Expr repr = Normalizer::embed(terms);
  return ExprClass(std::move(repr), std::move(terms));
}

bool congruent(const Expr& e, const Expr& f) { return canonical_class(e) == canonical_class(f); }

std::string to_string(const ExprClass& c) { return to_string(c.representative()); }

}  // namespace pomkit
