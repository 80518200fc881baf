#include "tropval/parser.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "tropval/error.hpp"

namespace tropval {
namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

  bool at_symbol(char c) const {
    return current_.kind == Tok::Symbol && current_.text.size() == 1 && current_.text[0] == c;
  }

  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::Syntax) const {
    throw ParseError(kind, msg, current_.line, current_.column);
  }

  void expect_symbol(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "' but found " + describe(current_));
    advance();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

 private:
  void advance() {
    skip_space();
    current_ = Token{};
    current_.line = line_;
    current_.column = col_;
    if (pos_ >= src_.size()) {
      current_.kind = Tok::End;
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        bump();
      current_.kind = Tok::Ident;
      current_.text = std::string(src_.substr(start, pos_ - start));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
      current_.kind = Tok::Number;
      current_.text = std::string(src_.substr(start, pos_ - start));
    } else if (std::string_view("+-*/^(),;").find(c) != std::string_view::npos) {
      bump();
      current_.kind = Tok::Symbol;
      current_.text = std::string(1, c);
    } else {
      throw ParseError(ErrorKind::Syntax, std::string("unexpected character '") + c + "'", line_,
                       col_);
    }
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token current_;
};

class PolyParser {
 public:
  PolyParser(Lexer& lex, const Ring& ring) : lex_(lex), ring_(ring) {}

  Polynomial expression() {
    Polynomial acc(ring_);
    bool negate = false;
    if (lex_.at_symbol('-') || lex_.at_symbol('+')) negate = lex_.next().text == "-";
    Polynomial t = term();
    acc = negate ? -t : t;
    while (lex_.at_symbol('+') || lex_.at_symbol('-')) {
      bool minus = lex_.next().text == "-";
      Polynomial rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.at_symbol('*') || lex_.at_symbol('/')) {
      Token op = lex_.next();
      Polynomial rhs = factor();
      if (op.text == "*") {
        acc = acc * rhs;
      } else {
        if (!rhs.is_constant() || rhs.is_zero())
          throw ParseError(ErrorKind::Syntax, "division only by nonzero constants", op.line,
                           op.column);
        acc = acc * Rational(1 / rhs.coefficient(ExponentVector(ring_->size())));
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (lex_.at_symbol('^')) {
      lex_.next();
      const Token& t = lex_.peek();
      if (t.kind != Tok::Number) lex_.fail("exponent must be a non-negative integer");
      if (t.text.size() > 4) lex_.fail("exponent too large");
      unsigned k = static_cast<unsigned>(std::stoul(t.text));
      lex_.next();
      base = base.pow(k);
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Number) {
      Rational c(mpz_class(t.text, 10));
      lex_.next();
      return Polynomial::constant(ring_, c);
    }
    if (t.kind == Tok::Ident) {
      auto idx = ring_->index_of(t.text);
      if (!idx) lex_.fail("unknown variable '" + t.text + "'", ErrorKind::UnknownVariable);
      lex_.next();
      return Polynomial::variable(ring_, *idx);
    }
    if (lex_.at_symbol('(')) {
      lex_.next();
      Polynomial inner = expression();
      lex_.expect_symbol(')');
      return inner;
    }
    if (lex_.at_symbol('-')) {
      lex_.next();
      return -factor();
    }
    lex_.fail("expected a number, variable or '(' but found " + Lexer::describe(t));
  }

  Lexer& lex_;
  const Ring& ring_;
};

Ring ring_statement(Lexer& lex) {
  const Token kw = lex.peek();
  if (kw.kind != Tok::Ident || kw.text != "ring") lex.fail("expected 'ring'");
  lex.next();
  std::vector<std::string> names;
  std::vector<Token> where;
  while (lex.peek().kind == Tok::Ident) {
    const std::string& t = lex.peek().text;
    if (t == "ring" || t == "ideal" || t == "weight" || t == "coeffval")
      lex.fail("expected ';' before '" + t + "'");
    where.push_back(lex.peek());
    names.push_back(lex.next().text);
  }
  if (names.empty()) lex.fail("ring needs at least one variable");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j])
        throw ParseError(ErrorKind::DuplicateVariable, "duplicate variable '" + names[i] + "'",
                         where[i].line, where[i].column);
  lex.expect_symbol(';');
  return make_ring(std::move(names));
}

Rational signed_rational(Lexer& lex) {
  bool negative = false;
  if (lex.at_symbol('-') || lex.at_symbol('+')) negative = lex.next().text == "-";
  if (lex.peek().kind != Tok::Number) lex.fail("expected a rational number");
  mpz_class num(lex.next().text, 10);
  mpz_class den(1);
  if (lex.at_symbol('/')) {
    lex.next();
    if (lex.peek().kind != Tok::Number) lex.fail("expected a denominator");
    den = mpz_class(lex.peek().text, 10);
    if (den == 0) lex.fail("zero denominator");
    lex.next();
  }
  Rational r(num, den);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

CoeffValuation coeffval_body(Lexer& lex, const RingContext& ring) {
  const Token kind = lex.peek();
  if (kind.kind != Tok::Ident) lex.fail("expected 'trivial' or 'tadic'");
  if (kind.text == "trivial") {
    lex.next();
    return CoeffValuation::trivial();
  }
  if (kind.text != "tadic") lex.fail("expected 'trivial' or 'tadic'");
  lex.next();
  if (lex.peek().kind != Tok::Ident) lex.fail("expected uniformizer variable");
  auto idx = ring.index_of(lex.peek().text);
  if (!idx) lex.fail("unknown variable '" + lex.peek().text + "'", ErrorKind::UnknownVariable);
  lex.next();
  Rational w = signed_rational(lex);
  return CoeffValuation::t_adic(*idx, w);
}

}  // namespace

Ring parse_ring(std::string_view text) {
  Lexer lex(text);
  Ring r = ring_statement(lex);
  if (lex.peek().kind != Tok::End) lex.fail("trailing input after ring declaration");
  return r;
}

Polynomial parse_poly(const Ring& ring, std::string_view text) {
  Lexer lex(text);
  PolyParser p(lex, ring);
  Polynomial f = p.expression();
  if (lex.peek().kind != Tok::End)
    lex.fail("unexpected " + Lexer::describe(lex.peek()) + " after polynomial");
  return f;
}

CoeffValuation parse_coeffval(const RingContext& ring, std::string_view text) {
  Lexer lex(text);
  CoeffValuation cv = coeffval_body(lex, ring);
  if (lex.peek().kind != Tok::End) lex.fail("trailing input after coefficient valuation");
  return cv;
}

PresentationFile parse_presentation(std::string_view text) {
  Lexer lex(text);
  Ring ring = ring_statement(lex);
  std::vector<Polynomial> gens;
  std::optional<WeightVector> weight;
  CoeffValuation cv = CoeffValuation::trivial();
  while (lex.peek().kind != Tok::End) {
    const Token kw = lex.peek();
    if (kw.kind != Tok::Ident) lex.fail("expected a statement keyword");
    lex.next();
    if (kw.text == "ideal") {
      PolyParser pp(lex, ring);
      while (true) {
        Token at = lex.peek();
        Polynomial g = pp.expression();
        if (g.is_zero())
          throw ParseError(ErrorKind::Syntax, "ideal generator is zero", at.line, at.column);
        gens.push_back(std::move(g));
        if (lex.at_symbol(',')) {
          lex.next();
          continue;
        }
        break;
      }
      lex.expect_symbol(';');
    } else if (kw.text == "weight") {
      std::vector<Rational> w;
      while (!lex.at_symbol(';')) {
        if (lex.peek().kind == Tok::End) lex.fail("unterminated weight statement");
        w.push_back(signed_rational(lex));
      }
      lex.expect_symbol(';');
      if (w.size() != ring->size())
        throw ParseError(ErrorKind::Syntax,
                         "weight has " + std::to_string(w.size()) + " entries, ring has " +
                             std::to_string(ring->size()),
                         kw.line, kw.column);
      weight = WeightVector(std::move(w));
    } else if (kw.text == "coeffval") {
      cv = coeffval_body(lex, *ring);
      lex.expect_symbol(';');
    } else {
      throw ParseError(ErrorKind::Syntax, "unknown statement '" + kw.text + "'", kw.line,
                       kw.column);
    }
  }
  return PresentationFile{Presentation(ring, std::move(gens), cv), std::move(weight)};
}

}  // namespace tropval
