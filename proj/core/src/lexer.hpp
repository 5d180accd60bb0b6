#pragma once

// Tokenizer shared by the pomset and expression parsers.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "pomkit/errors.hpp"

namespace pomkit::detail {

enum class Tok { Ident, Zero, One, Dot, Par, Plus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

  void expect(Tok kind, const char* what) {
    if (current_.kind != kind) throw SyntaxError(std::string("expected ") + what, current_.pos);
    advance();
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, "", start};
      return;
    }
    char c = text_[pos_];
    if (ident_start(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      current_ = {Tok::Ident, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '0': current_ = {Tok::Zero, "0", start}; return;
      case '1': current_ = {Tok::One, "1", start}; return;
      case '.': current_ = {Tok::Dot, ".", start}; return;
      case '+': current_ = {Tok::Plus, "+", start}; return;
      case '*': current_ = {Tok::Star, "*", start}; return;
      case '^': current_ = {Tok::Caret, "^", start}; return;
      case '(': current_ = {Tok::LParen, "(", start}; return;
      case ')': current_ = {Tok::RParen, ")", start}; return;
      case '|':
        if (pos_ < text_.size() && text_[pos_] == '|') {
          ++pos_;
          current_ = {Tok::Par, "||", start};
          return;
        }
        break;
      default: break;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, "", 0};
};

}  // namespace pomkit::detail
