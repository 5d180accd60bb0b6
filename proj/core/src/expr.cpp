#include "pomkit/expr.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "expr_access.hpp"
#include "pomkit/errors.hpp"

namespace pomkit {

struct Expr::Node {
  Kind kind;
  Letter letter;
  Expr l;
  Expr r;
  std::size_t hash = 0;
  std::size_t tree_size = 1;
  std::size_t d_par = 0;
  std::size_t d_dagger = 0;
  bool nullable = false;
  bool canonical = false;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t saturating_add(std::size_t a, std::size_t b) {
  return a > std::numeric_limits<std::size_t>::max() - b ? std::numeric_limits<std::size_t>::max()
                                                          : a + b;
}

}  // namespace

Expr Expr::make(Kind kind, Letter letter, Expr l, Expr r, bool canonical) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->canonical = canonical;
  std::size_t h = mix(0x51ed27, static_cast<std::size_t>(kind));
  switch (kind) {
    case Kind::Zero:
      break;
    case Kind::One:
      node->nullable = true;
      break;
    case Kind::Lit:
      h = mix(h, std::hash<std::string>{}(letter.name()));
      break;
    case Kind::Plus:
      node->nullable = nullable(l) || nullable(r);
      break;
    case Kind::Dot:
    case Kind::Par:
      node->nullable = nullable(l) && nullable(r);
      break;
    case Kind::Star:
    case Kind::Dagger:
      node->nullable = true;
      break;
  }
  const bool binary = kind == Kind::Plus || kind == Kind::Dot || kind == Kind::Par;
  const bool unary = kind == Kind::Star || kind == Kind::Dagger;
  if (binary || unary) {
    auto ml = depth_measures(l);
    auto mr = binary ? depth_measures(r) : DepthMeasures{};
    node->d_par = std::max(ml.d_par, mr.d_par) + (kind == Kind::Par ? 1 : 0);
    node->d_dagger = std::max(ml.d_dagger, mr.d_dagger) + (kind == Kind::Dagger ? 1 : 0);
    node->tree_size = saturating_add(1, l.tree_size());
    h = mix(h, l.hash());
    if (binary) {
      node->tree_size = saturating_add(node->tree_size, r.tree_size());
      h = mix(h, r.hash());
    }
  }
  node->hash = h;
  node->letter = std::move(letter);
  node->l = std::move(l);
  node->r = std::move(r);
  return Expr(std::move(node));
}

Expr Expr::one() {
  static const Expr instance = make(Kind::One, {}, {}, {}, true);
  return instance;
}

Expr Expr::lit(Letter letter) { return make(Kind::Lit, std::move(letter), {}, {}, true); }
Expr Expr::plus(Expr l, Expr r) { return make(Kind::Plus, {}, std::move(l), std::move(r), false); }
Expr Expr::dot(Expr l, Expr r) { return make(Kind::Dot, {}, std::move(l), std::move(r), false); }
Expr Expr::par(Expr l, Expr r) { return make(Kind::Par, {}, std::move(l), std::move(r), false); }
Expr Expr::star(Expr body) { return make(Kind::Star, {}, std::move(body), {}, false); }
Expr Expr::dagger(Expr body) { return make(Kind::Dagger, {}, std::move(body), {}, false); }

Expr::Kind Expr::kind() const noexcept { return node_ ? node_->kind : Kind::Zero; }

const Letter& Expr::letter() const {
  if (kind() != Kind::Lit) throw PreconditionViolation("letter() on a non-literal expression");
  return node_->letter;
}

const Expr& Expr::left() const {
  if (!node_ || kind() == Kind::One || kind() == Kind::Lit) {
    throw PreconditionViolation("left() on a leaf expression");
  }
  return node_->l;
}

const Expr& Expr::right() const {
  auto k = kind();
  if (k != Kind::Plus && k != Kind::Dot && k != Kind::Par) {
    throw PreconditionViolation("right() on a non-binary expression");
  }
  return node_->r;
}

std::size_t Expr::hash() const noexcept { return node_ ? node_->hash : 0x2545f491; }
std::size_t Expr::tree_size() const noexcept { return node_ ? node_->tree_size : 1; }

bool operator==(const Expr& a, const Expr& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Expr::Kind::Zero:
    case Expr::Kind::One:
      return std::strong_ordering::equal;
    case Expr::Kind::Lit:
      return a.node_->letter <=> b.node_->letter;
    case Expr::Kind::Star:
    case Expr::Kind::Dagger:
      return a.node_->l <=> b.node_->l;
    default:
      if (auto c = a.node_->l <=> b.node_->l; c != 0) return c;
      return a.node_->r <=> b.node_->r;
  }
}

bool ExprAccess::is_canonical(const Expr& e) noexcept {
  return e.node_ == nullptr || e.node_->canonical;
}

Expr ExprAccess::make_canonical(Expr::Kind kind, Letter letter, Expr l, Expr r) {
  if (kind == Expr::Kind::Zero) return Expr::zero();
  return Expr::make(kind, std::move(letter), std::move(l), std::move(r), true);
}

bool nullable(const Expr& e) { return e.node_ ? e.node_->nullable : false; }

DepthMeasures depth_measures(const Expr& e) {
  if (!e.node_) return {};
  return {e.node_->d_par, e.node_->d_dagger};
}

namespace {

void collect_letters(const Expr& e, Alphabet& out, std::unordered_set<const void*>& seen) {
  if (!seen.insert(e.identity()).second) return;
  switch (e.kind()) {
    case Expr::Kind::Zero:
    case Expr::Kind::One:
      return;
    case Expr::Kind::Lit:
      out.insert(e.letter());
      return;
    case Expr::Kind::Star:
    case Expr::Kind::Dagger:
      collect_letters(e.body(), out, seen);
      return;
    default:
      collect_letters(e.left(), out, seen);
      collect_letters(e.right(), out, seen);
  }
}

}  // namespace

Alphabet letters(const Expr& e) {
  Alphabet out;
  std::unordered_set<const void*> seen;
  collect_letters(e, out, seen);
  return out;
}

}  // namespace pomkit
