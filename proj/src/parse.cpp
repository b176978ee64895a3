#include "knowwh/parse.hpp"

#include <cctype>
#include <sstream>

namespace knowwh {

namespace {

enum class Tok {
  End,
  Ident,    // atoms, agent and constant names, keywords
  LParen,
  RParen,
  LBrace,
  RBrace,
  LBrack,
  RBrack,
  Less,
  Greater,
  Comma,
  Dollar,
  Question,
  Tilde,
  Amp,
  Pipe,
  Arrow,
  IffArrow,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBrack: return "'['";
    case Tok::RBrack: return "']'";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::Comma: return "','";
    case Tok::Dollar: return "'$'";
    case Tok::Question: return "'?'";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::IffArrow: return "'<->'";
  }
  return "?";
}

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& current() const { return cur_; }
  const std::string& input() const { return text_; }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) pos_++;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      cur_ = Token{Tok::End, "", {start, start}};
      return;
    }
    char c = text_[pos_];
    auto single = [&](Tok k) {
      pos_++;
      cur_ = Token{k, std::string(1, c), {start, pos_}};
    };
    switch (c) {
      case '(': single(Tok::LParen); return;
      case ')': single(Tok::RParen); return;
      case '{': single(Tok::LBrace); return;
      case '}': single(Tok::RBrace); return;
      case '[': single(Tok::LBrack); return;
      case ']': single(Tok::RBrack); return;
      case ',': single(Tok::Comma); return;
      case '$': single(Tok::Dollar); return;
      case '?': single(Tok::Question); return;
      case '~': single(Tok::Tilde); return;
      case '&': single(Tok::Amp); return;
      case '|': single(Tok::Pipe); return;
      case '>': single(Tok::Greater); return;
      case '<':
        if (pos_ + 2 < text_.size() + 1 && text_.compare(pos_, 3, "<->") == 0) {
          pos_ += 3;
          cur_ = Token{Tok::IffArrow, "<->", {start, pos_}};
        } else {
          single(Tok::Less);
        }
        return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          cur_ = Token{Tok::Arrow, "->", {start, pos_}};
          return;
        }
        throw ParseError("stray '-'", {start, start + 1}, {"'->'"}, text_);
      default:
        break;
    }
    if (ident_char(c)) {
      while (pos_ < text_.size() && ident_char(text_[pos_])) pos_++;
      cur_ = Token{Tok::Ident, text_.substr(start, pos_ - start), {start, pos_}};
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", {start, start + 1},
                     {}, text_);
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
  Token cur_;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Formula run() {
    Formula f = formula();
    expect(Tok::End);
    return f;
  }

private:
  Lexer lex_;

  [[noreturn]] void fail(std::vector<std::string> expected) {
    const Token& t = lex_.current();
    std::string what = t.kind == Tok::End ? "unexpected end of input"
                                          : "unexpected " + std::string(tok_name(t.kind)) +
                                                (t.kind == Tok::Ident ? " '" + t.text + "'" : "");
    throw ParseError(what, t.span, std::move(expected), lex_.input());
  }

  bool at(Tok k) const { return lex_.current().kind == k; }

  Token take() {
    Token t = lex_.current();
    lex_.advance();
    return t;
  }

  Token expect(Tok k) {
    if (!at(k)) fail({tok_name(k)});
    return take();
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    take();
    return true;
  }

  // Agent and constant names: any identifier, digits allowed up front.
  std::string ident() {
    if (!at(Tok::Ident)) fail({"identifier"});
    return take().text;
  }

  std::string braced_name() {
    expect(Tok::LBrace);
    std::string id = ident();
    expect(Tok::RBrace);
    return id;
  }

  std::string sigiled_constant() {
    expect(Tok::Dollar);
    return ident();
  }

  Formula formula() { return iff(); }

  Formula iff() {
    Formula l = implication();
    if (accept(Tok::IffArrow)) return Formula::iff(l, iff());
    return l;
  }

  Formula implication() {
    Formula l = disjunction();
    if (accept(Tok::Arrow)) return Formula::impl(l, implication());
    return l;
  }

  Formula disjunction() {
    Formula l = conjunction();
    while (accept(Tok::Pipe)) l = Formula::disj(l, conjunction());
    return l;
  }

  Formula conjunction() {
    Formula l = unary();
    while (accept(Tok::Amp)) l = Formula::conj(l, unary());
    return l;
  }

  Formula unary() {
    if (accept(Tok::Tilde)) return Formula::neg(unary());
    if (at(Tok::LBrack)) return bracket_prefix();
    if (at(Tok::Less)) {
      take();
      Formula a = formula();
      expect(Tok::Greater);
      return Formula::ann_dia(a, unary());
    }
    if (at(Tok::Ident)) {
      const std::string& word = lex_.current().text;
      if (word == "K") {
        take();
        std::string agent = braced_name();
        return Formula::k(agent, unary());
      }
      if (word == "Kw") {
        take();
        std::string agent = braced_name();
        return Formula::kw(agent, unary());
      }
      if (word == "Kv") { take(); return kv_tail(); }
      if (word == "Kd") { take(); return kd_tail(); }
      if (word == "Kh") { take(); return kh_tail(); }
      if (word == "U") { take(); return Formula::uni(unary()); }
      if (word == "box") { take(); return box_dia_tail(true); }
      if (word == "dia") { take(); return box_dia_tail(false); }
    }
    return primary();
  }

  Formula bracket_prefix() {
    take();  // '['
    if (accept(Tok::Question)) {
      Formula a = formula();
      expect(Tok::RBrack);
      return Formula::announce_whether(a, unary());
    }
    if (at(Tok::Dollar)) {
      std::string c = sigiled_constant();
      expect(Tok::RBrack);
      return Formula::inspect(c, unary());
    }
    Formula a = formula();
    expect(Tok::RBrack);
    return Formula::announce(a, unary());
  }

  Formula kv_tail() {
    std::string agent = braced_name();
    expect(Tok::LParen);
    if (at(Tok::Dollar)) {  // Kv{i}($c) == Kv{i}(T, $c)
      std::string c = sigiled_constant();
      expect(Tok::RParen);
      return Formula::kv(agent, Formula::top(), c);
    }
    Formula cond = formula();
    expect(Tok::Comma);
    std::string c = sigiled_constant();
    expect(Tok::RParen);
    return Formula::kv(agent, cond, c);
  }

  Formula kd_tail() {
    std::string agent = braced_name();
    expect(Tok::LParen);
    std::string c = sigiled_constant();
    expect(Tok::Comma);
    std::string d = sigiled_constant();
    expect(Tok::RParen);
    return Formula::kd(agent, c, d);
  }

  Formula kh_tail() {
    expect(Tok::LParen);
    Formula pre = formula();
    expect(Tok::Comma);
    Formula goal = formula();
    expect(Tok::RParen);
    return Formula::kh(pre, goal);
  }

  Formula box_dia_tail(bool is_box) {
    expect(Tok::LBrace);
    std::string agent = ident();
    if (accept(Tok::RBrace)) {
      Formula body = unary();
      return is_box ? Formula::box(agent, body) : Formula::dia(agent, body);
    }
    expect(Tok::Comma);
    std::string c = sigiled_constant();
    expect(Tok::RBrace);
    if (at(Tok::LParen)) {
      // Either the binary form dia{i,$c}(a, b) or the unary operator applied
      // to a parenthesized formula; the comma decides.
      take();
      Formula a = formula();
      if (accept(Tok::Comma)) {
        Formula b = formula();
        expect(Tok::RParen);
        return is_box ? Formula::box_c2(agent, c, a, b) : Formula::dia_c2(agent, c, a, b);
      }
      expect(Tok::RParen);
      return is_box ? Formula::box_c2(agent, c, a, a) : Formula::dia_c(agent, c, a);
    }
    Formula body = unary();
    if (is_box) return Formula::box_c2(agent, c, body, body);
    return Formula::dia_c(agent, c, body);
  }

  Formula primary() {
    if (accept(Tok::LParen)) {
      Formula f = formula();
      expect(Tok::RParen);
      return f;
    }
    if (at(Tok::Ident)) {
      const Token& t = lex_.current();
      if (t.text == "T") { take(); return Formula::top(); }
      if (t.text == "F") { take(); return Formula::bottom(); }
      char c0 = t.text[0];
      if (!std::isalpha(static_cast<unsigned char>(c0)) && c0 != '_')
        fail({"atom (must start with a letter)"});
      return Formula::atom(take().text);
    }
    fail({"atom", "'T'", "'F'", "'('", "'~'", "modal operator"});
  }
};

}  // namespace

ParseError::ParseError(std::string message, SourceSpan span, std::vector<std::string> expected,
                       const std::string& input)
    : std::runtime_error([&] {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < span.begin && i < input.size(); i++) {
          if (input[i] == '\n') { line++; col = 1; } else { col++; }
        }
        std::ostringstream os;
        os << line << ":" << col << ": " << message;
        if (!expected.empty()) {
          os << "; expected ";
          for (std::size_t i = 0; i < expected.size(); i++) {
            if (i) os << (i + 1 == expected.size() ? " or " : ", ");
            os << expected[i];
          }
        }
        return os.str();
      }()),
      span_(span),
      expected_(std::move(expected)) {
  line_ = 1;
  column_ = 1;
  for (std::size_t i = 0; i < span.begin && i < input.size(); i++) {
    if (input[i] == '\n') { line_++; column_ = 1; } else { column_++; }
  }
}

Formula parse(const std::string& text) { return Parser(text).run(); }

}  // namespace knowwh
