#include "vsc/parser.hpp"

#include <cctype>

namespace vsc {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  TermPtr run() {
    TermPtr t = parse_term();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line_, col_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() { return pos_ >= text_.size(); }
  char peek() { return text_[pos_]; }

  bool eat(char c) {
    if (!at_end() && peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!eat(c)) fail(std::string("expected '") + what + "'");
  }

  // 'λ' is U+03BB = 0xCE 0xBB in UTF-8.
  bool eat_lambda() {
    if (eat('\\')) return true;
    if (pos_ + 1 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xCE &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0xBB) {
      advance();
      advance();
      return true;
    }
    return false;
  }

  bool ident_start(char c) { return c >= 'a' && c <= 'z'; }
  bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string parse_ident() {
    skip_ws();
    if (at_end() || !ident_start(peek())) fail("expected identifier");
    std::string s;
    while (!at_end() && ident_char(peek())) {
      s += peek();
      advance();
    }
    return s;
  }

  TermPtr parse_term() {
    skip_ws();
    if (at_end()) fail("expected term");
    if (peek() == '\\' || static_cast<unsigned char>(peek()) == 0xCE) {
      if (!eat_lambda()) fail("expected term");
      std::string binder = parse_ident();
      skip_ws();
      expect('.', ".");
      return lam(binder, parse_term());
    }
    return parse_app();
  }

  TermPtr parse_app() {
    TermPtr t = parse_suffixed();
    for (;;) {
      skip_ws();
      if (at_end() || !(peek() == '(' || ident_start(peek()))) return t;
      t = app(t, parse_suffixed());
    }
  }

  TermPtr parse_suffixed() {
    TermPtr t = parse_atom();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '[') return t;
      advance();
      std::string binder = parse_ident();
      skip_ws();
      if (!(eat('<') && eat('-'))) fail("expected '<-'");
      TermPtr subject = parse_term();
      skip_ws();
      expect(']', "]");
      t = es(t, binder, subject);
    }
  }

  TermPtr parse_atom() {
    skip_ws();
    if (at_end()) fail("expected term");
    if (eat('(')) {
      TermPtr t = parse_term();
      skip_ws();
      expect(')', ")");
      return t;
    }
    if (ident_start(peek())) return var(parse_ident());
    fail("expected term");
  }
};

// Precedence levels, loosest to tightest. A node prints bare when its own
// level is >= the level its position requires.
enum Level : int { kTerm = 0, kApp = 1, kSuffixed = 2, kAtom = 3 };

void print_rec(const TermPtr& t, int need, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += t->name;
      return;
    case TermKind::Lam: {
      bool paren = need > kTerm;
      if (paren) out += '(';
      out += '\\';
      out += t->name;
      out += '.';
      print_rec(t->a, kTerm, out);
      if (paren) out += ')';
      return;
    }
    case TermKind::App: {
      bool paren = need > kApp;
      if (paren) out += '(';
      print_rec(t->a, kApp, out);
      out += ' ';
      print_rec(t->b, kSuffixed, out);
      if (paren) out += ')';
      return;
    }
    case TermKind::Es: {
      bool paren = need > kSuffixed;
      if (paren) out += '(';
      print_rec(t->a, kSuffixed, out);
      out += '[';
      out += t->name;
      out += " <- ";
      print_rec(t->b, kTerm, out);
      out += ']';
      if (paren) out += ')';
      return;
    }
  }
}

void print_full_rec(const TermPtr& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += t->name;
      return;
    case TermKind::Lam:
      out += "(\\";
      out += t->name;
      out += '.';
      print_full_rec(t->a, out);
      out += ')';
      return;
    case TermKind::App:
      out += '(';
      print_full_rec(t->a, out);
      out += ' ';
      print_full_rec(t->b, out);
      out += ')';
      return;
    case TermKind::Es:
      out += '(';
      print_full_rec(t->a, out);
      out += '[';
      out += t->name;
      out += " <- ";
      print_full_rec(t->b, out);
      out += "])";
      return;
  }
}

}  // namespace

TermPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const TermPtr& t) {
  std::string out;
  print_rec(t, kTerm, out);
  return out;
}

std::string print_full(const TermPtr& t) {
  std::string out;
  print_full_rec(t, out);
  return out;
}

}  // namespace vsc
