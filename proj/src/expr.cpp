#include "dq/expr.hpp"

#include <cctype>
#include <string>

#include "dq/errors.hpp"

namespace dq {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Interval parse() {
    Interval v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  Interval expr() {
    Interval v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Interval term() {
    Interval v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        v /= unary();
      } else {
        return v;
      }
    }
  }

  Interval unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Interval power() {
    Interval base = primary();
    if (accept('^')) return pow(base, unary());
    return base;
  }

  Interval primary() {
    skip_space();
    if (accept('(')) {
      Interval v = expr();
      expect(')');
      return v;
    }
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '.'))
      return number();
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])) != 0) {
      const std::string name = identifier();
      if (name == "pi") return Interval::pi();
      expect('(');
      Interval arg = expr();
      expect(')');
      if (name == "sqrt") return sqrt(arg);
      if (name == "log") return log(arg);
      if (name == "exp") return exp(arg);
      fail("unknown function '" + name + "'");
    }
    fail("expected a number, function or '('");
  }

  Interval number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }
    return Interval::from_decimal(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Interval evaluate_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace dq
