#include "tjurina/expr.hpp"

#include <algorithm>
#include <cctype>

namespace tjurina {

ExprSyntaxError::ExprSyntaxError(std::size_t offset, std::string message, std::string expected)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message +
                         (expected.empty() ? std::string() : " (expected " + expected + ")")),
      offset_(offset),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

namespace {

constexpr int kMaxNesting = 256;

class Parser {
 public:
  Parser(std::string_view text, Ambient ambient) : text_(text), nvars_(ambient_nvars(ambient)) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'", "operator or end of input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message, const std::string& expected) const {
    throw ExprSyntaxError(pos_, message, expected);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[nodiscard]] char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[nodiscard]] bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (peek() == '*') {
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  Polynomial unary() {
    const char c = peek();
    if (c == '-' || c == '+') {
      ++pos_;
      Nesting guard(*this);
      Polynomial p = unary();
      return c == '-' ? -p : p;
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("exponent must be a non-negative integer literal", "digit");
    }
    const std::size_t start = pos_;
    const mpz_class e = integer_literal();
    if (e > kMaxExponent) {
      pos_ = start;
      fail("exponent too large (limit " + std::to_string(kMaxExponent) + ")", "smaller exponent");
    }
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Polynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Nesting guard(*this);
      Polynomial inner = expr();
      if (peek() != ')') fail(at_end() ? "unbalanced parentheses" : "unexpected character", "')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(nvars_, rational_literal());
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    if (c == '\0') fail("unexpected end of input", "number, variable or '('");
    if (c == ')') fail("unbalanced parentheses", "number, variable or '('");
    fail("unexpected '" + std::string(1, c) + "'", "number, variable or '('");
  }

  mpz_class integer_literal() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Scalar rational_literal() {
    const mpz_class num = integer_literal();
    if (peek() != '/') return Scalar(num);
    ++pos_;
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("malformed fraction", "integer denominator");
    }
    const std::size_t den_start = pos_;
    const mpz_class den = integer_literal();
    if (den == 0) {
      pos_ = den_start;
      fail("malformed fraction: zero denominator", "nonzero denominator");
    }
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }

  Polynomial variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    for (int i = 0; i < nvars_; ++i) {
      if (name == variable_name(nvars_, i)) return Polynomial::variable(nvars_, i);
    }
    pos_ = start;
    fail("unknown variable '" + std::string(name) + "'", nvars_ == 2 ? "x or y" : "x0, x1 or x2");
  }

  struct Nesting {
    explicit Nesting(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxNesting) parser.fail("expression nested too deeply", "shallower expression");
    }
    ~Nesting() { --parser.depth_; }
    Nesting(const Nesting&) = delete;
    Nesting& operator=(const Nesting&) = delete;
    Parser& parser;
  };

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, Ambient ambient) { return Parser(text, ambient).parse(); }

std::string render_poly(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.greater(a.monomial, b.monomial); });
  std::string out;
  for (const Term& t : terms) {
    const bool negative = sgn(t.coeff) < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Scalar magnitude = abs(t.coeff);
    if (t.monomial.is_one()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += to_string(t.monomial);
    } else {
      out += magnitude.get_str() + "*" + to_string(t.monomial);
    }
  }
  return out;
}

std::string render_poly(const Polynomial& f) { return render_poly(f, MonomialOrder::grlex(f.nvars())); }

Scalar parse_scalar(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const Polynomial p = parse_poly(text.substr(pos), Ambient::Affine2);
  if (!p.is_constant()) throw ExprSyntaxError(pos, "rational number expected", "p or p/q");
  for (char c : text.substr(pos)) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || std::isspace(static_cast<unsigned char>(c)))) {
      throw ExprSyntaxError(pos, "rational number expected", "p or p/q");
    }
  }
  Scalar v = p.is_zero() ? Scalar(0) : p.terms().front().coeff;
  return negative ? Scalar(-v) : v;
}

}  // namespace tjurina
