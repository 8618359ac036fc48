#include "nlnf_cli/expression.hpp"

#include <cctype>
#include <variant>

#include "nlnf/errors.hpp"

namespace nlnf::cli {

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.exponent != b.exponent) return false;
  auto same = [](const ExprPtr& x, const ExprPtr& y) { return (!x && !y) || (x && y && *x == *y); };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

namespace {

using Kind = Expr::Kind;

ExprPtr node(Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
 public:
  Parser(std::string_view text, char symbol) : text_(text), symbol_(symbol) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", "operator or end of input");
    return e;
  }

 private:
  ExprPtr make(Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) const {
    auto e = std::const_pointer_cast<Expr>(node(kind, std::move(lhs), std::move(rhs)));
    e->position = pos_;
    return e;
  }

  [[noreturn]] void fail(const std::string& what, const std::string& expected) const {
    throw parse_error(what, pos_, expected);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end of input",
                         "'" + std::string(1, c) + "'");
  }

  bool at_digit() {
    skip();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept('+')) {
        e = make(Kind::add, e, term());
      } else if (accept('-')) {
        e = make(Kind::sub, e, term());
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = unary();
    for (;;) {
      if (accept('*')) {
        e = make(Kind::mul, e, unary());
      } else if (accept('/')) {
        e = make(Kind::div, e, unary());
      } else {
        return e;
      }
    }
  }

  ExprPtr unary() {
    if (accept('-')) return make(Kind::negate, unary());
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    if (!at_digit()) fail("missing exponent", "integer exponent");
    std::string d = digits();
    if (d.size() > 9) fail("exponent too large", "integer below 10^9");
    auto e = std::const_pointer_cast<Expr>(make(Kind::pow, base));
    e->exponent = std::stol(d) * (negative ? -1 : 1);
    return e;
  }

  ExprPtr atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input", "number, '" + std::string(1, symbol_) + "', z^{...} or '('");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (c == symbol_) {
      ++pos_;
      return make(Kind::symbol);
    }
    if (c == 'z' && symbol_ != 'z') {
      ++pos_;
      expect('^');
      expect('{');
      ExprPtr index = expr();
      expect('}');
      return make(Kind::monomial, index);
    }
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'", "number, '" + std::string(1, symbol_) + "', z^{...} or '('");
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    std::string text = digits();
    // "p/q" is one literal only when a digit follows the slash directly
    if (pos_ + 1 < text_.size() && text_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator", "nonzero denominator");
      text += "/" + den;
    }
    auto e = std::make_shared<Expr>();
    e->position = start;
    e->value = parse_rational(text);
    e->kind = Kind::number;
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      e->kind = Kind::imaginary;
    }
    return e;
  }

  std::string_view text_;
  char symbol_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Kind::add:
    case Kind::sub: return 1;
    case Kind::mul:
    case Kind::div: return 2;
    case Kind::negate: return 3;
    case Kind::pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, char symbol, bool parens) {
  std::string s = print(e, symbol);
  return parens ? "(" + s + ")" : s;
}

// ---------------------------------------------------------------- evaluation

[[noreturn]] void reject(const Expr& at, const std::string& what) { throw parse_error(what, at.position, ""); }

Polynomial eval_poly(const Expr& e) {
  switch (e.kind) {
    case Kind::number: return Polynomial(e.value);
    case Kind::symbol: return Polynomial::x();
    case Kind::imaginary: reject(e, "imaginary literal in a rational polynomial");
    case Kind::monomial: reject(e, "monomial z^{...} in a polynomial");
    case Kind::negate: return -eval_poly(*e.lhs);
    case Kind::add: return eval_poly(*e.lhs) + eval_poly(*e.rhs);
    case Kind::sub: return eval_poly(*e.lhs) - eval_poly(*e.rhs);
    case Kind::mul: return eval_poly(*e.lhs) * eval_poly(*e.rhs);
    case Kind::div: {
      Polynomial d = eval_poly(*e.rhs);
      if (d.degree() != 0) reject(e, "division by a non-constant polynomial");
      return eval_poly(*e.lhs) * (Rational(1) / d.coeff(0));
    }
    case Kind::pow: {
      if (e.exponent < 0) reject(e, "negative power of a polynomial");
      Polynomial base = eval_poly(*e.lhs), out(Rational(1));
      for (long i = 0; i < e.exponent; ++i) out *= base;
      return out;
    }
  }
  reject(e, "bad expression");
}

FieldElement eval_elem(const Expr& e, const FieldPtr& k) {
  switch (e.kind) {
    case Kind::number: return k->from_rational(e.value);
    case Kind::symbol: return k->generator();
    case Kind::imaginary: reject(e, "imaginary literal inside a field element (write the generator instead)");
    case Kind::monomial: reject(e, "monomial z^{...} inside a field element");
    case Kind::negate: return -eval_elem(*e.lhs, k);
    case Kind::add: return eval_elem(*e.lhs, k) + eval_elem(*e.rhs, k);
    case Kind::sub: return eval_elem(*e.lhs, k) - eval_elem(*e.rhs, k);
    case Kind::mul: return eval_elem(*e.lhs, k) * eval_elem(*e.rhs, k);
    case Kind::div: return eval_elem(*e.lhs, k) / eval_elem(*e.rhs, k);
    case Kind::pow: return eval_elem(*e.lhs, k).pow(e.exponent);
  }
  reject(e, "bad expression");
}

using AlgValue = std::variant<GaussianRational, AlgebraElement>;

AlgebraElement cauchy_power(const AlgebraElement& f, long n) {
  AlgebraElement out = cauchy_identity(f.field(), f.mode());
  for (long i = 0; i < n; ++i) out = cauchy_product(out, f);
  return out;
}

AlgValue eval_alg(const Expr& e, const FieldPtr& k) {
  auto is_scalar = [](const AlgValue& v) { return std::holds_alternative<GaussianRational>(v); };
  auto scalar = [](const AlgValue& v) { return std::get<GaussianRational>(v); };
  auto element = [](const AlgValue& v) { return std::get<AlgebraElement>(v); };
  switch (e.kind) {
    case Kind::number: return GaussianRational(e.value);
    case Kind::imaginary: return GaussianRational(Rational(0), e.value);
    case Kind::symbol: reject(e, "the generator may only appear inside z^{...}");
    case Kind::monomial: return monomial(eval_elem(*e.lhs, k), Coefficient(1));
    case Kind::negate: {
      AlgValue v = eval_alg(*e.lhs, k);
      if (is_scalar(v)) return -scalar(v);
      return element(v) * Coefficient(-1);
    }
    case Kind::add:
    case Kind::sub: {
      AlgValue a = eval_alg(*e.lhs, k), b = eval_alg(*e.rhs, k);
      const bool sub = e.kind == Kind::sub;
      if (is_scalar(a) && is_scalar(b)) return sub ? scalar(a) - scalar(b) : scalar(a) + scalar(b);
      if (is_scalar(a) || is_scalar(b)) reject(e, "a scalar term needs a monomial, e.g. c*z^{0}");
      return sub ? element(a) - element(b) : element(a) + element(b);
    }
    case Kind::mul: {
      AlgValue a = eval_alg(*e.lhs, k), b = eval_alg(*e.rhs, k);
      if (is_scalar(a) && is_scalar(b)) return scalar(a) * scalar(b);
      if (is_scalar(a)) return element(b) * Coefficient(scalar(a));
      if (is_scalar(b)) return element(a) * Coefficient(scalar(b));
      return cauchy_product(element(a), element(b));
    }
    case Kind::div: {
      AlgValue a = eval_alg(*e.lhs, k), b = eval_alg(*e.rhs, k);
      if (!is_scalar(b)) reject(e, "division by a series");
      if (scalar(b).is_zero()) throw division_by_zero("division by zero in a coefficient");
      if (is_scalar(a)) return scalar(a) / scalar(b);
      return element(a) * Coefficient(scalar(b).inverse());
    }
    case Kind::pow: {
      AlgValue a = eval_alg(*e.lhs, k);
      if (is_scalar(a)) {
        GaussianRational base = e.exponent < 0 ? scalar(a).inverse() : scalar(a);
        GaussianRational out(1);
        for (long i = 0; i < std::abs(e.exponent); ++i) out *= base;
        return out;
      }
      if (e.exponent < 0) reject(e, "negative power of a series");
      return cauchy_power(element(a), e.exponent);
    }
  }
  reject(e, "bad expression");
}

}  // namespace

ExprPtr parse_expression(std::string_view text, char symbol) { return Parser(text, symbol).run(); }

std::string print(const Expr& e, char symbol) {
  switch (e.kind) {
    case Kind::number: return to_string(e.value);
    case Kind::imaginary: return to_string(e.value) + "i";
    case Kind::symbol: return std::string(1, symbol);
    case Kind::monomial: return "z^{" + print(*e.lhs, symbol) + "}";
    case Kind::negate: return "-" + wrap(*e.lhs, symbol, precedence(*e.lhs) < 3);
    case Kind::pow: {
      // a rational literal or a negation as base needs parentheses
      const bool literal = (e.lhs->kind == Kind::number || e.lhs->kind == Kind::imaginary) &&
                           e.lhs->value.get_den() != 1;
      return wrap(*e.lhs, symbol, precedence(*e.lhs) <= 4 || literal) + "^" + std::to_string(e.exponent);
    }
    default: {
      const int p = precedence(e);
      const char* op = e.kind == Kind::add ? " + " : e.kind == Kind::sub ? " - " : e.kind == Kind::mul ? "*" : "/";
      // a right operand of '/' that starts with digits would lex as part of a p/q literal
      const bool merge = e.kind == Kind::div && (e.rhs->kind == Kind::number || e.rhs->kind == Kind::imaginary ||
                                                 e.rhs->kind == Kind::pow);
      return wrap(*e.lhs, symbol, precedence(*e.lhs) < p) + op +
             wrap(*e.rhs, symbol, precedence(*e.rhs) <= p || merge);
    }
  }
}

FieldElement parse_element(std::string_view text, const FieldPtr& field) {
  return eval_elem(*parse_expression(text), field);
}

AlgebraElement parse_algebra(std::string_view text, const FieldPtr& field, Mode mode) {
  ExprPtr tree = parse_expression(text);
  AlgValue v = eval_alg(*tree, field);
  if (std::holds_alternative<GaussianRational>(v)) {
    if (!std::get<GaussianRational>(v).is_zero()) reject(*tree, "a scalar term needs a monomial, e.g. c*z^{0}");
    return zero_element(field, mode);
  }
  return std::get<AlgebraElement>(v).in_mode(mode);
}

Polynomial parse_polynomial(std::string_view text) { return eval_poly(*parse_expression(text, 'x')); }

}  // namespace nlnf::cli
