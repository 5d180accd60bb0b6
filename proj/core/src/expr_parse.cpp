#include "lexer.hpp"
#include "pomkit/errors.hpp"
#include "pomkit/expr.hpp"

namespace pomkit {

namespace {

using detail::Tok;

// sum := par ('+' sum)? ; par := seq ('||' par)? ; seq := post ('.' seq)? ;
// post := atom ('*' | '^')* ; atom := '0' | '1' | ident | '(' sum ')'
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : lex_(text) {}

  Expr parse() {
    Expr e = sum();
    if (lex_.peek().kind != Tok::End) throw SyntaxError("trailing input", lex_.peek().pos);
    return e;
  }

 private:
  Expr sum() {
    Expr l = parallel();
    if (lex_.peek().kind != Tok::Plus) return l;
    lex_.take();
    return Expr::plus(std::move(l), sum());
  }

  Expr parallel() {
    Expr l = sequential();
    if (lex_.peek().kind != Tok::Par) return l;
    lex_.take();
    return Expr::par(std::move(l), parallel());
  }

  Expr sequential() {
    Expr l = postfix();
    if (lex_.peek().kind != Tok::Dot) return l;
    lex_.take();
    return Expr::dot(std::move(l), sequential());
  }

  Expr postfix() {
    Expr e = atom();
    for (;;) {
      if (lex_.peek().kind == Tok::Star) {
        lex_.take();
        e = Expr::star(std::move(e));
      } else if (lex_.peek().kind == Tok::Caret) {
        lex_.take();
        e = Expr::dagger(std::move(e));
      } else {
        return e;
      }
    }
  }

  Expr atom() {
    const auto& t = lex_.peek();
    switch (t.kind) {
      case Tok::Zero:
        lex_.take();
        return Expr::zero();
      case Tok::One:
        lex_.take();
        return Expr::one();
      case Tok::Ident:
        return Expr::lit(Letter(lex_.take().text));
      case Tok::LParen: {
        lex_.take();
        Expr e = sum();
        lex_.expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw SyntaxError("expected an expression", t.pos);
    }
  }

  detail::Lexer lex_;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Kind::Plus: return 1;
    case Expr::Kind::Par: return 2;
    case Expr::Kind::Dot: return 3;
    case Expr::Kind::Star:
    case Expr::Kind::Dagger: return 4;
    default: return 5;
  }
}

void render(const Expr& e, std::string& out);

void render_wrapped(const Expr& e, bool wrap, std::string& out) {
  if (wrap) out += '(';
  render(e, out);
  if (wrap) out += ')';
}

void render(const Expr& e, std::string& out) {
  const int p = precedence(e.kind());
  switch (e.kind()) {
    case Expr::Kind::Zero: out += '0'; return;
    case Expr::Kind::One: out += '1'; return;
    case Expr::Kind::Lit: out += e.letter().name(); return;
    case Expr::Kind::Star:
    case Expr::Kind::Dagger:
      render_wrapped(e.body(), precedence(e.body().kind()) < p, out);
      out += e.kind() == Expr::Kind::Star ? '*' : '^';
      return;
    default: {
      // Right-associative: an equal-precedence left operand needs parentheses.
      render_wrapped(e.left(), precedence(e.left().kind()) <= p, out);
      out += e.kind() == Expr::Kind::Plus ? "+" : e.kind() == Expr::Kind::Dot ? "." : "||";
      render_wrapped(e.right(), precedence(e.right().kind()) < p, out);
    }
  }
}

}  // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const Expr& e) {
  std::string out;
  render(e, out);
  return out;
}

}  // namespace pomkit
