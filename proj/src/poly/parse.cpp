#include <algorithm>
#include <cctype>

#include "polarlib/error.hpp"
#include "polarlib/poly.hpp"

namespace polar {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::optional<std::vector<std::string>>& vars)
      : text_(text), fixed_(vars.has_value()) {
    if (vars) vars_ = *vars;
  }

  Poly run() {
    skipSpace();
    if (pos_ >= text_.size()) throw ParseError(pos_, "empty polynomial");
    Poly p = expr();
    skipSpace();
    if (pos_ < text_.size()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p.alignedTo(vars_);
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Poly d = factor();
        if (!d.isConstant() || d.isZero()) throw ParseError(at, "division only by a nonzero constant");
        acc *= Rational(1) / d.constantTerm();
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    skipSpace();
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    Poly base = atom();
    if (accept('^')) {
      skipSpace();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(pos_, "expected a non-negative integer exponent");
      const std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) throw ParseError(start, "exponent too large");
      return pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Poly atom() {
    skipSpace();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Poly::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))), vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        if (fixed_) {
          throw PolarError(ErrorKind::Input, "unknown_variable",
                           "unknown variable '" + name + "' at position " + std::to_string(start));
        }
        vars_.push_back(name);
      }
      return Poly::variable(name, vars_);
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  bool fixed_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parsePolynomial(std::string_view text, const std::optional<std::vector<std::string>>& variables) {
  return Parser(text, variables).run();
}

}  // namespace polar
