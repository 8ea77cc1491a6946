#include "binomdec/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "binomdec/errors.hpp"

namespace binomdec {

namespace {

struct Token {
  enum class Kind { Ident, Int, Punct, End };
  Kind kind;
  std::string text;
  long value = 0;  // for Int
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(tok_.line, tok_.col, msg);
  }

  Token expect_punct(const std::string& p) {
    if (tok_.kind != Token::Kind::Punct || tok_.text != p)
      fail("expected '" + p + "', found '" + describe() + "'");
    return next();
  }

  bool accept_punct(const std::string& p) {
    if (tok_.kind == Token::Kind::Punct && tok_.text == p) {
      advance();
      return true;
    }
    return false;
  }

  Token expect_ident() {
    if (tok_.kind != Token::Kind::Ident) fail("expected a name, found '" + describe() + "'");
    return next();
  }

  long expect_int() {
    if (tok_.kind != Token::Kind::Int) fail("expected an integer, found '" + describe() + "'");
    return next().value;
  }

  bool at_ident(const std::string& w) const {
    return tok_.kind == Token::Kind::Ident && tok_.text == w;
  }

  std::string describe() const {
    if (tok_.kind == Token::Kind::End) return "end of input";
    return tok_.text;
  }

 private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else {
        break;
      }
    }
    if (pos_ >= src_.size()) {
      tok_ = Token{Token::Kind::End, "", 0, line_, col_};
      return;
    }
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      long v = 0;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        v = v * 10 + (src_[pos_] - '0');
        if (v > 1000000000L) throw SyntaxError(line_, col_, "integer literal too large");
        ++pos_;
      }
      tok_ = Token{Token::Kind::Int, src_.substr(start, pos_ - start), v, line_, col_};
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_'))
        ++pos_;
      tok_ = Token{Token::Kind::Ident, src_.substr(start, pos_ - start), 0, line_, col_};
    } else {
      tok_ = Token{Token::Kind::Punct, std::string(1, c), 0, line_, col_};
      ++pos_;
    }
    col_ += static_cast<int>(tok_.text.size());
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_;
};

FieldCtx parse_field_at(Lexer& lex) {
  Token name = lex.expect_ident();
  if (name.text != "GF") throw SyntaxError(name.line, name.col, "expected GF(...)");
  lex.expect_punct("(");
  long p = lex.expect_int();
  long k = 1;
  if (lex.accept_punct("^")) k = lex.expect_int();
  std::vector<long> modulus;
  bool have_modulus = false;
  if (lex.accept_punct(";")) {
    Token kw = lex.expect_ident();
    if (kw.text != "modulus") throw SyntaxError(kw.line, kw.col, "expected 'modulus'");
    lex.expect_punct("=");
    have_modulus = true;
    modulus.push_back(lex.expect_int());
    while (lex.accept_punct(",")) modulus.push_back(lex.expect_int());
  }
  lex.expect_punct(")");
  if (k < 1 || k > 64) lex.fail("extension degree out of range");
  if (have_modulus) return FieldCtx(p, static_cast<int>(k), modulus);
  if (k == 1) return FieldCtx(p);
  return FieldCtx(p, static_cast<int>(k));
}

class PolyParser {
 public:
  PolyParser(const Ring& R, Lexer& lex) : R_(R), lex_(lex) {}

  // expression := ['-'] term (('+'|'-') term)*
  Poly expression() {
    bool neg = lex_.accept_punct("-");
    Poly acc = term();
    if (neg) acc = poly_neg(acc);
    for (;;) {
      if (lex_.accept_punct("+")) {
        acc = poly_add(acc, term(), ord_);
      } else if (lex_.accept_punct("-")) {
        acc = poly_sub(acc, term(), ord_);
      } else {
        return acc;
      }
    }
  }

 private:
  // term := factor ('*' factor)*
  Poly term() {
    Poly acc = factor();
    while (lex_.accept_punct("*")) acc = poly_mul(acc, factor(), ord_);
    return acc;
  }

  // factor := (int | var | '(' expression ')') ['^' int]
  Poly factor() {
    Poly base;
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::Int) {
      base = poly_const(R_, R_.field().from_int(lex_.next().value));
    } else if (t.kind == Token::Kind::Ident) {
      Token name = lex_.next();
      int idx = R_.var_index(name.text);
      if (idx == 0)
        throw SyntaxError(name.line, name.col, "unknown variable '" + name.text + "'");
      base = poly_var(R_, idx);
    } else if (lex_.accept_punct("(")) {
      base = expression();
      lex_.expect_punct(")");
    } else {
      lex_.fail("expected a coefficient, variable or parenthesis, found '" + lex_.describe() + "'");
    }
    if (lex_.accept_punct("^")) {
      long e = lex_.expect_int();
      if (e < 0 || e > 10000) lex_.fail("exponent out of range");
      Poly acc = poly_const(R_, R_.field().one());
      for (long i = 0; i < e; ++i) acc = poly_mul(acc, base, ord_);
      base = acc;
    }
    return base;
  }

  const Ring& R_;
  Lexer& lex_;
  TermOrder ord_ = TermOrder::degrevlex();
};

std::vector<Poly> poly_list(const Ring& R, Lexer& lex) {
  std::vector<Poly> out;
  out.push_back(PolyParser(R, lex).expression());
  while (lex.accept_punct(",")) out.push_back(PolyParser(R, lex).expression());
  return out;
}

Expectation expect_value(const std::string& key, const Ring& R, Lexer& lex) {
  Expectation e;
  if (key == "isprimary" || key == "iscellular") {
    e.kind = Expectation::Kind::Flag;
    Token word = lex.expect_ident();
    if (word.text == "true") {
      e.flag = true;
    } else if (word.text == "false") {
      e.flag = false;
    } else {
      throw SyntaxError(word.line, word.col, "expected true or false");
    }
  } else if (key == "delta") {
    e.kind = Expectation::Kind::Indices;
    while (lex.peek().kind == Token::Kind::Int) {
      long v = lex.expect_int();
      if (v < 1 || v > R.nvars()) lex.fail("variable index out of range");
      e.indices.push_back(static_cast<int>(v));
    }
    if (e.indices.empty()) lex.fail("expected variable indices");
  } else if (key == "memb" || key == "hull") {
    e.kind = Expectation::Kind::Ideals;
    if (lex.at_ident("none")) {
      lex.next();  // the zero ideal
      e.ideals.push_back({});
    } else {
      e.ideals.push_back(poly_list(R, lex));
    }
  } else if (key == "cellular" || key == "unmixed" || key == "primary" || key == "assoc" ||
             key == "stepwise") {
    e.kind = Expectation::Kind::Ideals;
    lex.expect_punct("{");
    e.ideals.push_back(poly_list(R, lex));
    while (lex.accept_punct("|")) e.ideals.push_back(poly_list(R, lex));
    lex.expect_punct("}");
  } else {
    lex.fail("unknown expectation '" + key + "'");
  }
  return e;
}

ProblemFile parse_problem_text(const std::string& text) {
  Lexer lex(text);
  Token kw = lex.expect_ident();
  if (kw.text != "field") throw SyntaxError(kw.line, kw.col, "problem files start with 'field'");
  FieldCtx field = parse_field_at(lex);
  lex.expect_punct(";");

  kw = lex.expect_ident();
  if (kw.text != "vars") throw SyntaxError(kw.line, kw.col, "expected 'vars'");
  std::vector<std::string> names;
  while (lex.peek().kind == Token::Kind::Ident) names.push_back(lex.next().text);
  if (names.empty()) lex.fail("expected at least one variable name");
  lex.expect_punct(";");
  Ring ring(field, names);

  kw = lex.expect_ident();
  if (kw.text != "ideal") throw SyntaxError(kw.line, kw.col, "expected 'ideal'");
  std::vector<Poly> gens;
  if (!lex.accept_punct(";")) {
    gens = poly_list(ring, lex);
    lex.expect_punct(";");
  }
  for (const Poly& g : gens) {
    if (g.size() > 2)
      throw NonBinomialGenerator("generator " + poly_str(ring, g) + " has more than two terms");
  }
  BinomialIdeal ideal(ring, gens);

  ProblemFile pf{field, ring, ideal, {}};
  while (lex.at_ident("expect")) {
    lex.next();
    Token key = lex.expect_ident();
    if (pf.expect.count(key.text))
      throw SyntaxError(key.line, key.col, "duplicate expectation '" + key.text + "'");
    lex.expect_punct("=");
    pf.expect.emplace(key.text, expect_value(key.text, ring, lex));
    lex.expect_punct(";");
  }
  if (lex.peek().kind != Token::Kind::End) lex.fail("unexpected trailing input");
  return pf;
}

}  // namespace

FieldCtx parse_field(const std::string& text) {
  Lexer lex(text);
  FieldCtx f = parse_field_at(lex);
  if (lex.peek().kind != Token::Kind::End) lex.fail("unexpected trailing input");
  return f;
}

Poly parse_poly(const Ring& R, const std::string& text) {
  Lexer lex(text);
  Poly f = PolyParser(R, lex).expression();
  if (lex.peek().kind != Token::Kind::End) lex.fail("unexpected trailing input");
  return f;
}

ProblemFile parse_problem(const std::string& text) { return parse_problem_text(text); }

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem_text(buf.str());
}

}  // namespace binomdec
