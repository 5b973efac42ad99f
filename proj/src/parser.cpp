#include "unbendable/parser.hpp"

#include <cctype>
#include <optional>
#include <string>

namespace unbendable {

namespace {

struct Value {
  RationalFunction scalar;
  std::optional<std::vector<RationalFunction>> field;
};

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, bool allow_fields)
      : text_(text), ring_(ring), allow_fields_(allow_fields) {}

  Value parse_all() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty expression", pos_);
    Value v = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return v;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Value add(Value a, const Value& b, bool subtract, std::size_t at) {
    if (a.field.has_value() != b.field.has_value()) throw ParseError("cannot add a scalar and a vector field", at);
    if (!a.field) {
      a.scalar = subtract ? a.scalar - b.scalar : a.scalar + b.scalar;
      return a;
    }
    for (std::size_t i = 0; i < a.field->size(); ++i)
      (*a.field)[i] = subtract ? (*a.field)[i] - (*b.field)[i] : (*a.field)[i] + (*b.field)[i];
    return a;
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (peek('+') || peek('-')) {
        bool sub = text_[pos_] == '-';
        std::size_t at = pos_++;
        v = add(std::move(v), term(), sub, at);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (peek('*')) {
        std::size_t at = pos_++;
        Value w = unary();
        if (v.field && w.field) throw ParseError("product of two vector fields", at);
        if (w.field) std::swap(v, w);
        if (v.field) {
          for (auto& c : *v.field) c *= w.scalar;
        } else {
          v.scalar *= w.scalar;
        }
      } else if (peek('/')) {
        std::size_t at = pos_++;
        Value w = unary();
        if (w.field) throw ParseError("division by a vector field", at);
        if (w.scalar.is_zero()) throw ParseError("division by zero", at);
        if (v.field) {
          for (auto& c : *v.field) c /= w.scalar;
        } else {
          v.scalar /= w.scalar;
        }
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (peek('-')) {
      ++pos_;
      Value v = unary();
      if (v.field)
        for (auto& c : *v.field) c = -c;
      else
        v.scalar = -v.scalar;
      return v;
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (peek('^')) {
      std::size_t at = pos_++;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected nonnegative integer exponent", pos_);
      if (base.field) throw ParseError("power of a vector field", at);
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      base.scalar = base.scalar.pow(unsigned(e));
    }
    return base;
  }

  std::string read_ident_at(std::size_t p) const {
    std::size_t q = p;
    while (q < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[q])) || text_[q] == '_')) ++q;
    return std::string(text_.substr(p, q - p));
  }

  Value atom() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Value v;
      v.scalar = RationalFunction(Rational(mpz_class(std::string(text_.substr(start, pos_ - start)))));
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // A preceding '/' is consumed by term(), so d/dx only starts here.
      if (allow_fields_ && text_.substr(pos_, 3) == "d/d" && pos_ + 3 < text_.size()) {
        std::string name = read_ident_at(pos_ + 3);
        auto idx = ring_.index_of(name);
        if (idx) {
          Value v;
          v.field = std::vector<RationalFunction>(ring_.size(), RationalFunction(Poly(ring_)));
          (*v.field)[*idx] = RationalFunction(Poly::constant(Rational(1), ring_));
          pos_ += 3 + name.size();
          return v;
        }
        if (!name.empty()) throw ParseError("undeclared chart variable '" + name + "'", pos_ + 3);
      }
      std::size_t start = pos_;
      std::string name = read_ident_at(pos_);
      auto idx = ring_.index_of(name);
      if (!idx) throw ParseError("undeclared identifier '" + name + "'", start);
      pos_ += name.size();
      Value v;
      v.scalar = RationalFunction::variable(ring_, *idx);
      return v;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const Ring& ring_;
  bool allow_fields_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const Ring& ring) {
  Value v = Parser(text, ring, false).parse_all();
  return v.scalar.with_ring(ring);
}

Poly parse_polynomial(std::string_view text, const Ring& ring) {
  RationalFunction r = parse_rational_function(text, ring);
  if (!r.is_polynomial()) throw ParseError("expression is not a polynomial", 0);
  return r.numerator().scaled(r.denominator().constant_term().inverse()).with_ring(ring);
}

std::vector<RationalFunction> parse_vector_field(std::string_view text, const Ring& ring) {
  Value v = Parser(text, ring, true).parse_all();
  if (!v.field) throw ParseError("expression is a scalar, expected a vector field", 0);
  for (auto& c : *v.field) c = c.with_ring(ring);
  return *v.field;
}

}  // namespace unbendable
