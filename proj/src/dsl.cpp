#include "skein/dsl.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace skein {

namespace {

struct Token {
  enum class Kind { Ident, Int, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  char sym = 0;
  int line = 1;
  int column = 1;
  size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  // Raw text from the current token up to (not including) the ')' that
  // closes the enclosing call; the lexer resumes at that ')'.
  std::string raw_until_close(int& line, int& column) {
    line = tok_.line;
    column = tok_.column;
    size_t start = tok_.offset;
    pos_ = start;
    line_ = tok_.line;
    col_ = tok_.column;
    int depth = 0;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) break;
        --depth;
      }
      bump();
    }
    std::string out(src_.substr(start, pos_ - start));
    advance_from_here();
    return out;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw SyntaxError(at.line, at.column, msg);
  }

 private:
  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void advance() { advance_from_here(); }

  void advance_from_here() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else {
        break;
      }
    }
    tok_ = Token{};
    tok_.line = line_;
    tok_.column = col_;
    tok_.offset = pos_;
    if (pos_ >= src_.size()) return;
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok_.kind = Token::Kind::Ident;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        tok_.text += src_[pos_];
        bump();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Kind::Int;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        tok_.text += src_[pos_];
        bump();
      }
    } else {
      tok_.kind = Token::Kind::Sym;
      tok_.sym = c;
      tok_.text = std::string(1, c);
      bump();
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

const std::map<std::string, int>& atom_arity() {
  static const std::map<std::string, int> table = {
      {"id", 1}, {"cup", 2}, {"cap", 2}, {"over", 2}, {"under", 2}, {"e", 2},
      {"jw", 1}, {"jw2n1", 0}, {"jwhat", 1}, {"tjw", 1},
  };
  return table;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (lex_.peek().kind != Token::Kind::End) lex_.fail(lex_.peek(), "unexpected '" + lex_.peek().text + "'");
    return e;
  }

 private:
  bool is_sym(char c) const {
    return lex_.peek().kind == Token::Kind::Sym && lex_.peek().sym == c;
  }

  Token expect_sym(char c) {
    if (!is_sym(c)) lex_.fail(lex_.peek(), std::string("expected '") + c + "'" + found());
    return lex_.take();
  }

  std::string found() const {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::End) return " but reached end of input";
    return " but found '" + t.text + "'";
  }

  long integer(bool allow_sign = false) {
    bool neg = false;
    if (allow_sign && (is_sym('-') || is_sym('+'))) neg = lex_.take().sym == '-';
    if (lex_.peek().kind != Token::Kind::Int) lex_.fail(lex_.peek(), "expected an integer" + found());
    Token t = lex_.take();
    if (t.text.size() > 9) lex_.fail(t, "integer too large");
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  std::shared_ptr<Expr> node(Expr::Kind k, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr sum() {
    Token start = lex_.peek();
    std::vector<ExprPtr> terms;
    std::vector<int> signs;
    int sign = 1;
    if (is_sym('+') || is_sym('-')) sign = lex_.take().sym == '-' ? -1 : 1;
    terms.push_back(prod());
    signs.push_back(sign);
    while (is_sym('+') || is_sym('-')) {
      signs.push_back(lex_.take().sym == '-' ? -1 : 1);
      terms.push_back(prod());
    }
    if (terms.size() == 1 && signs[0] == 1) return terms[0];
    auto e = node(Expr::Kind::Sum, start);
    e->children = std::move(terms);
    e->signs = std::move(signs);
    return e;
  }

  bool at_scalar() const {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Int) return true;
    if (t.kind == Token::Kind::Sym && t.sym == '[') return true;
    return t.kind == Token::Kind::Ident && t.text == "q";
  }

  ScalarLiteral scalar() {
    ScalarLiteral s;
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Int) {
      long num = integer();
      long den = 1;
      if (is_sym('/')) {
        lex_.take();
        Token at = lex_.peek();
        den = integer();
        if (den == 0) lex_.fail(at, "zero denominator");
      }
      s.kind = ScalarLiteral::Kind::Rational;
      s.rational = mpq_class(num, den);
      s.rational.canonicalize();
      return s;
    }
    if (is_sym('[')) {
      lex_.take();
      s.index = integer();
      expect_sym(']');
      s.kind = ScalarLiteral::Kind::QuantumInteger;
      if (is_sym('!')) {
        lex_.take();
        s.kind = ScalarLiteral::Kind::QuantumFactorial;
      }
      return s;
    }
    lex_.take();  // q
    expect_sym('^');
    expect_sym('(');
    s.index = integer(true);
    expect_sym('/');
    Token two = lex_.peek();
    if (integer() != 2) lex_.fail(two, "powers of q are written q^(k/2)");
    expect_sym(')');
    s.kind = ScalarLiteral::Kind::HalfPowerOfQ;
    return s;
  }

  ExprPtr prod() {
    Token start = lex_.peek();
    std::vector<ScalarLiteral> scalars;
    while (at_scalar()) {
      scalars.push_back(scalar());
      if (is_sym('*')) lex_.take();
    }
    ExprPtr body = seq();
    if (scalars.empty()) return body;
    auto e = node(Expr::Kind::Scaled, start);
    e->scalars = std::move(scalars);
    e->children = {body};
    return e;
  }

  ExprPtr seq() {
    Token start = lex_.peek();
    std::vector<ExprPtr> parts{tens()};
    while (is_sym(';')) {
      lex_.take();
      parts.push_back(tens());
    }
    if (parts.size() == 1) return parts[0];
    auto e = node(Expr::Kind::Compose, start);
    e->children = std::move(parts);
    return e;
  }

  ExprPtr tens() {
    Token start = lex_.peek();
    std::vector<ExprPtr> parts{factor()};
    while (is_sym('@')) {
      lex_.take();
      parts.push_back(factor());
    }
    if (parts.size() == 1) return parts[0];
    auto e = node(Expr::Kind::Tensor, start);
    e->children = std::move(parts);
    return e;
  }

  ExprPtr factor() {
    if (is_sym('(')) {
      lex_.take();
      ExprPtr e = sum();
      expect_sym(')');
      return e;
    }
    return atom();
  }

  ExprPtr atom() {
    const Token& t = lex_.peek();
    if (t.kind != Token::Kind::Ident) lex_.fail(t, "expected a diagram" + found());
    Token name = lex_.take();
    auto e = node(Expr::Kind::Atom, name);
    e->name = name.text;
    if (name.text == "cable") {
      expect_sym('(');
      e->children = {sum()};
      expect_sym(',');
      e->args = {integer()};
      expect_sym(')');
      return e;
    }
    if (name.text == "encircle") {
      expect_sym('(');
      e->args = {integer()};
      expect_sym(',');
      int line = 0, column = 0;
      std::string raw = lex_.raw_until_close(line, column);
      try {
        e->poly = parse_int_poly(raw);
      } catch (const SyntaxError& err) {
        throw SyntaxError(line, column + err.column() - 1, "bad polynomial '" + raw + "'");
      }
      expect_sym(')');
      return e;
    }
    auto it = atom_arity().find(name.text);
    if (it == atom_arity().end()) lex_.fail(name, "unknown diagram '" + name.text + "'");
    const int arity = it->second;
    if (arity == 0) {
      if (is_sym('(')) {
        lex_.take();
        expect_sym(')');
      }
      return e;
    }
    expect_sym('(');
    for (int a = 0; a < arity; ++a) {
      if (a) expect_sym(',');
      e->args.push_back(integer());
    }
    expect_sym(')');
    return e;
  }

  Lexer lex_;
};

std::string scalar_text(const ScalarLiteral& s) {
  switch (s.kind) {
    case ScalarLiteral::Kind::Rational: return s.rational.get_str();
    case ScalarLiteral::Kind::HalfPowerOfQ: return "q^(" + std::to_string(s.index) + "/2)";
    case ScalarLiteral::Kind::QuantumInteger: return "[" + std::to_string(s.index) + "]";
    case ScalarLiteral::Kind::QuantumFactorial: return "[" + std::to_string(s.index) + "]!";
  }
  return "";
}

}  // namespace

std::string Expr::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Sum:
      os << "(";
      for (size_t i = 0; i < children.size(); ++i) {
        if (i || signs[i] < 0) os << (signs[i] < 0 ? " - " : " + ");
        os << children[i]->to_string();
      }
      os << ")";
      break;
    case Kind::Compose:
    case Kind::Tensor:
      os << "(";
      for (size_t i = 0; i < children.size(); ++i) {
        if (i) os << (kind == Kind::Compose ? " ; " : " @ ");
        os << children[i]->to_string();
      }
      os << ")";
      break;
    case Kind::Scaled:
      for (const auto& s : scalars) os << scalar_text(s) << "*";
      os << children[0]->to_string();
      break;
    case Kind::Atom:
      os << name;
      if (name == "cable") {
        os << "(" << children[0]->to_string() << ", " << args[0] << ")";
      } else if (name == "encircle") {
        os << "(" << args[0] << ", " << poly.to_string() << ")";
      } else if (!args.empty()) {
        os << "(";
        for (size_t i = 0; i < args.size(); ++i) os << (i ? "," : "") << args[i];
        os << ")";
      }
      break;
  }
  return os.str();
}

ExprPtr parse_expression(std::string_view source) { return Parser(source).parse(); }

}  // namespace skein
