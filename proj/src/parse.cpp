#include <cctype>

#include "chowmod/error.hpp"
#include "chowmod/multipoly.hpp"

namespace chowmod {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const FieldPtr& field, const VarSet& vars)
      : text_(text), field_(field), vars_(vars) {}

  MultiPoly run() {
    MultiPoly p = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  std::string_view text_;
  const FieldPtr& field_;
  const VarSet& vars_;
  std::size_t pos_ = 0;

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MultiPoly expr() {
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    MultiPoly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
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

  MultiPoly term() {
    MultiPoly acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      mpz_class e = digits();
      if (e > 10000) throw SyntaxError(start, "exponent too large");
      return b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(start, "expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(digits());
      if (peek() == '/') {
        ++pos_;
        skip();
        std::size_t at = pos_;
        mpz_class den = digits();
        if (den == 0) throw SyntaxError(at, "zero denominator");
        value = mpq_class(value.get_num(), den);
        value.canonicalize();
      }
      return MultiPoly::constant(field_, vars_, field_->from_rational(value));
    }
    if (c == 't' || c == 'y' || c == 'u') {
      std::size_t start = pos_;
      ++pos_;
      if (c != 'u') {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw SyntaxError(pos_, "expected a variable index");
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      std::size_t idx = vars_.index_of(name);
      if (idx < vars_.size()) return MultiPoly::variable(field_, vars_, idx);
      if (c == 'u' && field_->is_extension())
        return MultiPoly::constant(field_, vars_, field_->generator());
      fail(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
    }
    if (c == '\0') throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const FieldPtr& field, const VarSet& vars) {
  return Parser(text, field, vars).run();
}

Element parse_element(std::string_view text, const FieldPtr& field) {
  MultiPoly p = parse_poly(text, field, VarSet{});
  return p.constant_term();
}

}  // namespace chowmod
