#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "pomkit/errors.hpp"
#include "pomkit/grammar.hpp"

namespace pomkit {

namespace {

bool is_ident(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

bool bare_letter(const std::string& s) {
  return is_ident(s) && std::islower(static_cast<unsigned char>(s[0])) && s != "eps";
}

bool bare_nonterminal(const std::string& s) {
  return is_ident(s) && std::isupper(static_cast<unsigned char>(s[0]));
}

std::string render_nonterminal(const std::string& x) {
  return bare_nonterminal(x) ? x : "<" + x + ">";
}

int precedence(RhsTerm::Kind k) {
  switch (k) {
    case RhsTerm::Kind::Par: return 1;
    case RhsTerm::Kind::Seq: return 2;
    default: return 3;
  }
}

void render(const RhsTerm& t, std::string& out) {
  switch (t.kind()) {
    case RhsTerm::Kind::Eps:
      out += "eps";
      return;
    case RhsTerm::Kind::Letter:
      out += bare_letter(t.name()) ? t.name() : "'" + t.name() + "'";
      return;
    case RhsTerm::Kind::NonTerminal:
      out += render_nonterminal(t.name());
      return;
    default: {
      const int p = precedence(t.kind());
      const bool wrap_l = precedence(t.left().kind()) <= p;
      const bool wrap_r = precedence(t.right().kind()) < p;
      if (wrap_l) out += '(';
      render(t.left(), out);
      if (wrap_l) out += ')';
      out += t.kind() == RhsTerm::Kind::Seq ? "." : "||";
      if (wrap_r) out += '(';
      render(t.right(), out);
      if (wrap_r) out += ')';
    }
  }
}

enum class Tok { Ident, Letter, NonTerminal, Arrow, Bar, ParBar, Dot, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class LineLexer {
 public:
  LineLexer(std::string_view line, std::size_t offset) : line_(line), offset_(offset) {
    advance();
  }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw SyntaxError(what, offset_ + at);
  }

  void advance() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ >= line_.size() || line_[pos_] == '#') {
      current_ = {Tok::End, "", offset_ + start};
      return;
    }
    const char c = line_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < line_.size() &&
             (std::isalnum(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) {
        ++pos_;
      }
      current_ = {Tok::Ident, std::string(line_.substr(start, pos_ - start)), offset_ + start};
      return;
    }
    if (c == '\'' || c == '<') {
      const char close = c == '\'' ? '\'' : '>';
      const std::size_t end = line_.find(close, start + 1);
      if (end == std::string_view::npos) fail(std::string("unterminated ") + c, start);
      if (end == start + 1) fail("empty name", start);
      pos_ = end + 1;
      current_ = {c == '\'' ? Tok::Letter : Tok::NonTerminal,
                  std::string(line_.substr(start + 1, end - start - 1)), offset_ + start};
      return;
    }
    auto two = [&](char next) { return pos_ + 1 < line_.size() && line_[pos_ + 1] == next; };
    if (c == '-' && two('>')) {
      pos_ += 2;
      current_ = {Tok::Arrow, "->", offset_ + start};
      return;
    }
    if (c == '|') {
      const bool par = two('|');
      pos_ += par ? 2 : 1;
      current_ = {par ? Tok::ParBar : Tok::Bar, par ? "||" : "|", offset_ + start};
      return;
    }
    ++pos_;
    switch (c) {
      case '.': current_ = {Tok::Dot, ".", offset_ + start}; return;
      case '(': current_ = {Tok::LParen, "(", offset_ + start}; return;
      case ')': current_ = {Tok::RParen, ")", offset_ + start}; return;
      default: fail(std::string("unexpected character '") + c + "'", start);
    }
  }

  std::string_view line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
  Token current_{Tok::End, "", 0};
};

// alts := par ('|' par)* ; par := seq ('||' par)? ; seq := atom ('.'? seq)? ;
// atom := 'eps' | letter | nonterminal | '(' par ')'
class RuleParser {
 public:
  explicit RuleParser(LineLexer& lex) : lex_(lex) {}

  std::vector<RhsTerm> alternatives() {
    std::vector<RhsTerm> out;
    if (lex_.peek().kind == Tok::End) return out;
    out.push_back(parallel());
    while (lex_.peek().kind == Tok::Bar) {
      lex_.take();
      out.push_back(parallel());
    }
    if (lex_.peek().kind != Tok::End) throw SyntaxError("unexpected token", lex_.peek().pos);
    return out;
  }

 private:
  RhsTerm parallel() {
    RhsTerm l = sequential();
    if (lex_.peek().kind != Tok::ParBar) return l;
    lex_.take();
    return RhsTerm::par(std::move(l), parallel());
  }

  static bool starts_atom(Tok k) {
    return k == Tok::Ident || k == Tok::Letter || k == Tok::NonTerminal || k == Tok::LParen;
  }

  RhsTerm sequential() {
    RhsTerm l = atom();
    if (lex_.peek().kind == Tok::Dot) {
      lex_.take();
      return RhsTerm::seq(std::move(l), sequential());
    }
    if (starts_atom(lex_.peek().kind)) return RhsTerm::seq(std::move(l), sequential());
    return l;
  }

  RhsTerm atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::Ident:
        if (t.text == "eps") return RhsTerm::eps();
        if (std::isupper(static_cast<unsigned char>(t.text[0]))) return RhsTerm::nonterminal(t.text);
        return RhsTerm::letter(Letter(t.text));
      case Tok::Letter:
        return RhsTerm::letter(Letter(t.text));
      case Tok::NonTerminal:
        return RhsTerm::nonterminal(t.text);
      case Tok::LParen: {
        RhsTerm inner = parallel();
        if (lex_.peek().kind != Tok::RParen) throw SyntaxError("expected ')'", lex_.peek().pos);
        lex_.take();
        return inner;
      }
      default:
        throw SyntaxError("expected a term", t.pos);
    }
  }

  LineLexer& lex_;
};

using nlohmann::json;

json term_to_json(const RhsTerm& t) {
  switch (t.kind()) {
    case RhsTerm::Kind::Eps:
      return {{"kind", "eps"}};
    case RhsTerm::Kind::Letter:
      return {{"kind", "letter"}, {"name", t.name()}};
    case RhsTerm::Kind::NonTerminal:
      return {{"kind", "nonterminal"}, {"name", t.name()}};
    case RhsTerm::Kind::Seq:
    case RhsTerm::Kind::Par:
      return {{"kind", t.kind() == RhsTerm::Kind::Seq ? "seq" : "par"},
              {"left", term_to_json(t.left())},
              {"right", term_to_json(t.right())}};
  }
  return {};
}

RhsTerm term_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw SyntaxError("grammar term must be an object", 0);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "eps") return RhsTerm::eps();
  if (kind == "letter") return RhsTerm::letter(Letter(j.at("name").get<std::string>()));
  if (kind == "nonterminal") return RhsTerm::nonterminal(j.at("name").get<std::string>());
  if (kind == "seq" || kind == "par") {
    RhsTerm l = term_from_json(j.at("left"));
    RhsTerm r = term_from_json(j.at("right"));
    return kind == "seq" ? RhsTerm::seq(std::move(l), std::move(r))
                         : RhsTerm::par(std::move(l), std::move(r));
  }
  throw SyntaxError("unknown grammar term kind '" + kind + "'", 0);
}

}  // namespace

std::string to_string(const RhsTerm& t) {
  std::string out;
  render(t, out);
  return out;
}

PomsetCFG parse_cfg(std::string_view text) {
  std::vector<std::string> declared;
  std::vector<std::pair<std::string, std::vector<RhsTerm>>> lines;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    LineLexer lex(text.substr(offset, end - offset), offset);
    if (lex.peek().kind != Tok::End) {
      Token lhs = lex.take();
      std::string name;
      if (lhs.kind == Tok::NonTerminal) {
        name = lhs.text;
      } else if (lhs.kind == Tok::Ident && bare_nonterminal(lhs.text)) {
        name = lhs.text;
      } else {
        throw SyntaxError("expected a nonterminal", lhs.pos);
      }
      if (lex.peek().kind != Tok::Arrow) throw SyntaxError("expected '->'", lex.peek().pos);
      lex.take();
      RuleParser parser(lex);
      if (std::find(declared.begin(), declared.end(), name) == declared.end()) {
        declared.push_back(name);
      }
      lines.emplace_back(name, parser.alternatives());
    }
    offset = end + 1;
  }
  if (declared.empty()) throw SyntaxError("grammar has no rules", 0);
  std::vector<Rule> rules;
  for (auto& [lhs, alts] : lines) {
    for (auto& t : alts) rules.push_back({lhs, std::move(t)});
  }
  std::string start = declared.front();
  return PomsetCFG(std::move(declared), std::move(start), std::move(rules));
}

std::string to_text(const PomsetCFG& g) {
  std::map<std::string, std::vector<const RhsTerm*>> by_lhs;
  for (const auto& r : g.rules()) by_lhs[r.lhs].push_back(&r.rhs);
  std::vector<std::string> order{g.start()};
  for (const auto& x : g.nonterminals()) {
    if (x != g.start()) order.push_back(x);
  }
  std::string out;
  for (const auto& x : order) {
    out += render_nonterminal(x) + " ->";
    bool first = true;
    for (const RhsTerm* t : by_lhs[x]) {
      out += first ? " " : " | ";
      first = false;
      out += to_string(*t);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const PomsetCFG& g) {
  json rules = json::array();
  for (const auto& r : g.rules()) rules.push_back({{"lhs", r.lhs}, {"rhs", term_to_json(r.rhs)}});
  json j = {{"nonterminals", g.nonterminals()}, {"start", g.start()}, {"rules", rules}};
  return j.dump(2);
}

PomsetCFG parse_cfg_json(std::string_view text) {
  try {
    json j = json::parse(text);
    std::vector<Rule> rules;
    for (const auto& r : j.at("rules")) {
      rules.push_back({r.at("lhs").get<std::string>(), term_from_json(r.at("rhs"))});
    }
    return PomsetCFG(j.at("nonterminals").get<std::vector<std::string>>(),
                     j.at("start").get<std::string>(), std::move(rules));
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("malformed grammar JSON: ") + e.what(), 0);
  }
}

PomsetCFG load_cfg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_cfg_json(text);
  return parse_cfg(text);
}

}  // namespace pomkit
