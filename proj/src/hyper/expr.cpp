#include "ulab/hyper/expr.hpp"

#include "ulab/error.hpp"

#include <cctype>
#include <string>

namespace ulab::hyper {
namespace {

class Parser {
 public:
  Parser(std::string_view text, int order) : text_(text), order_(order) {}

  HyperReal parse() {
    HyperReal value = expr();
    skip_space();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_primary() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'e' || c == 'W' || c == '(' ||
           text_.substr(pos_, 2) == "pi";
  }

  HyperReal expr() {
    HyperReal value = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        value = value + term();
      } else if (c == '-') {
        ++pos_;
        value = value - term();
      } else {
        return value;
      }
    }
  }

  HyperReal term() {
    HyperReal value = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * unary();
      } else if (c == '/') {
        ++pos_;
        value = value / unary();
      } else if (starts_primary()) {
        value = value * unary();
      } else {
        return value;
      }
    }
  }

  HyperReal unary() {
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  HyperReal power() {
    HyperReal base = primary();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer exponent");
    const int exponent = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return hyper::pow(base, negative ? -exponent : exponent);
  }

  HyperReal primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      HyperReal inner = expr();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'e') {
      ++pos_;
      return HyperReal::epsilon(order_);
    }
    if (c == 'W') {
      ++pos_;
      return HyperReal::omega(order_);
    }
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return HyperReal(Scalar(pi()), order_);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    error(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  // Digits with optional fraction and an uppercase-E exponent; lowercase e is the series symbol.
  HyperReal number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == 'E') {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    return HyperReal(Scalar(parse_rational(text_.substr(start, pos_ - start))), order_);
  }

  std::string_view text_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

HyperReal parse_hyperreal(std::string_view text, int order) { return Parser(text, order).parse(); }

}  // namespace ulab::hyper
