#include "pomkit/pomset.hpp"

#include <algorithm>
#include <cassert>

#include "lexer.hpp"
#include "pomkit/errors.hpp"

namespace pomkit {

Letter::Letter(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw Error("letters must be non-empty identifiers");
}

struct Pomset::Node {
  Kind kind;
  Letter letter;
  std::vector<Pomset> parts;
  std::size_t size = 0;
  std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Pomset Pomset::prim(Letter letter) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Prim;
  node->size = 1;
  node->hash = mix(1, std::hash<std::string>{}(letter.name()));
  node->letter = std::move(letter);
  return Pomset(std::move(node));
}

Pomset::Kind Pomset::kind() const noexcept { return node_ ? node_->kind : Kind::Empty; }

const Letter& Pomset::letter() const {
  if (kind() != Kind::Prim) throw PreconditionViolation("letter() on a non-primitive pomset");
  return node_->letter;
}

std::span<const Pomset> Pomset::parts() const noexcept {
  if (!node_) return {};
  return node_->parts;
}

std::size_t Pomset::size() const noexcept { return node_ ? node_->size : 0; }
std::size_t Pomset::hash() const noexcept { return node_ ? node_->hash : 0; }

bool operator==(const Pomset& a, const Pomset& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Pomset& a, const Pomset& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Pomset::Kind::Empty:
      return std::strong_ordering::equal;
    case Pomset::Kind::Prim:
      return a.node_->letter <=> b.node_->letter;
    default:
      return std::lexicographical_compare_three_way(a.node_->parts.begin(), a.node_->parts.end(),
                                                    b.node_->parts.begin(), b.node_->parts.end());
  }
}

Pomset make_seq_node(std::vector<Pomset> parts) {
  auto node = std::make_shared<Pomset::Node>();
  node->kind = Pomset::Kind::Seq;
  node->hash = 2;
  for (const auto& p : parts) {
    node->size += p.size();
    node->hash = mix(node->hash, p.hash());
  }
  node->parts = std::move(parts);
  return Pomset(std::move(node));
}

Pomset make_par_node(std::vector<Pomset> parts) {
  std::sort(parts.begin(), parts.end());
  auto node = std::make_shared<Pomset::Node>();
  node->kind = Pomset::Kind::Par;
  node->hash = 3;
  for (const auto& p : parts) {
    node->size += p.size();
    node->hash = mix(node->hash, p.hash());
  }
  node->parts = std::move(parts);
  return Pomset(std::move(node));
}

namespace {

void append_flat(std::vector<Pomset>& out, const Pomset& u, Pomset::Kind flatten) {
  if (u.is_empty()) return;
  if (u.kind() == flatten) {
    out.insert(out.end(), u.parts().begin(), u.parts().end());
  } else {
    out.push_back(u);
  }
}

Pomset build(std::vector<Pomset> flat, Pomset::Kind kind) {
  if (flat.empty()) return Pomset::empty();
  if (flat.size() == 1) return flat.front();
  return kind == Pomset::Kind::Seq ? make_seq_node(std::move(flat)) : make_par_node(std::move(flat));
}

}  // namespace

Pomset seq_compose(const Pomset& u, const Pomset& v) {
  std::vector<Pomset> flat;
  append_flat(flat, u, Pomset::Kind::Seq);
  append_flat(flat, v, Pomset::Kind::Seq);
  return build(std::move(flat), Pomset::Kind::Seq);
}

Pomset par_compose(const Pomset& u, const Pomset& v) {
  std::vector<Pomset> flat;
  append_flat(flat, u, Pomset::Kind::Par);
  append_flat(flat, v, Pomset::Kind::Par);
  return build(std::move(flat), Pomset::Kind::Par);
}

Pomset seq_of(std::span<const Pomset> parts) {
  std::vector<Pomset> flat;
  for (const auto& p : parts) append_flat(flat, p, Pomset::Kind::Seq);
  return build(std::move(flat), Pomset::Kind::Seq);
}

Pomset par_of(std::span<const Pomset> parts) {
  std::vector<Pomset> flat;
  for (const auto& p : parts) append_flat(flat, p, Pomset::Kind::Par);
  return build(std::move(flat), Pomset::Kind::Par);
}

std::size_t depth(const Pomset& u) {
  switch (u.kind()) {
    case Pomset::Kind::Empty: return 0;
    case Pomset::Kind::Prim: return 1;
    default: {
      std::size_t best = 0;
      for (const auto& p : u.parts()) best = std::max(best, depth(p));
      return best + 1;
    }
  }
}

Factorization factorize(const Pomset& u) {
  switch (u.kind()) {
    case Pomset::Kind::Empty:
      throw EmptyPomset();
    case Pomset::Kind::Prim:
      return {Factorization::Kind::Primitive, u.letter(), {}};
    case Pomset::Kind::Seq:
      return {Factorization::Kind::Sequential, {}, {u.parts().begin(), u.parts().end()}};
    case Pomset::Kind::Par:
      return {Factorization::Kind::Parallel, {}, {u.parts().begin(), u.parts().end()}};
  }
  assert(false);
  return {};
}

namespace {

void collect_letters(const Pomset& u, Alphabet& out) {
  if (u.kind() == Pomset::Kind::Prim) out.insert(u.letter());
  for (const auto& p : u.parts()) collect_letters(p, out);
}

// par := seq ('||' seq)* ; seq := atom ('.' atom)* ; atom := '1' | ident | '(' par ')'
class PomsetParser {
 public:
  explicit PomsetParser(std::string_view text) : lex_(text) {}

  Pomset parse() {
    Pomset u = parallel();
    if (lex_.peek().kind != detail::Tok::End) throw SyntaxError("trailing input", lex_.peek().pos);
    return u;
  }

 private:
  Pomset parallel() {
    Pomset u = sequential();
    while (lex_.peek().kind == detail::Tok::Par) {
      lex_.take();
      u = par_compose(u, sequential());
    }
    return u;
  }

  Pomset sequential() {
    Pomset u = atom();
    while (lex_.peek().kind == detail::Tok::Dot) {
      lex_.take();
      u = seq_compose(u, atom());
    }
    return u;
  }

  Pomset atom() {
    const auto& t = lex_.peek();
    switch (t.kind) {
      case detail::Tok::One:
        lex_.take();
        return Pomset::empty();
      case detail::Tok::Ident:
        return Pomset::prim(Letter(lex_.take().text));
      case detail::Tok::LParen: {
        lex_.take();
        Pomset u = parallel();
        lex_.expect(detail::Tok::RParen, "')'");
        return u;
      }
      default:
        throw SyntaxError("expected a pomset", t.pos);
    }
  }

  detail::Lexer lex_;
};

void render(const Pomset& u, std::string& out) {
  switch (u.kind()) {
    case Pomset::Kind::Empty:
      out += "1";
      return;
    case Pomset::Kind::Prim:
      out += u.letter().name();
      return;
    case Pomset::Kind::Seq: {
      bool first = true;
      for (const auto& p : u.parts()) {
        if (!first) out += ".";
        first = false;
        if (p.kind() == Pomset::Kind::Par) {
          out += "(";
          render(p, out);
          out += ")";
        } else {
          render(p, out);
        }
      }
      return;
    }
    case Pomset::Kind::Par: {
      bool first = true;
      for (const auto& p : u.parts()) {
        if (!first) out += "||";
        first = false;
        render(p, out);
      }
      return;
    }
  }
}

}  // namespace

Alphabet letters(const Pomset& u) {
  Alphabet out;
  collect_letters(u, out);
  return out;
}

Pomset parse_pomset(std::string_view text) { return PomsetParser(text).parse(); }

std::string to_string(const Pomset& u) {
  std::string out;
  render(u, out);
  return out;
}

}  // namespace pomkit
