#include "gaussgrass/parser.hpp"

#include <cctype>

namespace gaussgrass {

namespace {

// Recursive-descent parser producing RatFunc values.
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*        '/' only when allowed
//   unary  := '-' unary | factor
//   factor := primary ('^' integer)?
//   primary:= integer | identifier | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, RingPtr ring, bool allow_division)
      : text_(text), ring_(std::move(ring)), allow_division_(allow_division) {}

  RatFunc parse() {
    RatFunc v = expr_();
    skip_ws_();
    if (pos_ != text_.size()) fail_("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail_(const std::string& what) const {
    throw InputError("syntax error at position " + std::to_string(pos_ + 1) +
                     ": " + what);
  }

  void skip_ws_() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek_is_(char c) {
    skip_ws_();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept_(char c) {
    if (peek_is_(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr_() {
    RatFunc acc = term_();
    while (true) {
      if (accept_('+')) {
        acc = acc + term_();
      } else if (accept_('-')) {
        acc = acc - term_();
      } else {
        return acc;
      }
    }
  }

  RatFunc term_() {
    RatFunc acc = unary_();
    while (true) {
      if (accept_('*')) {
        acc = acc * unary_();
      } else if (peek_is_('/')) {
        if (!allow_division_) fail_("division is not allowed here");
        ++pos_;
        RatFunc rhs = unary_();
        if (rhs.is_zero()) fail_("division by zero");
        acc = acc / rhs;
      } else {
        return acc;
      }
    }
  }

  RatFunc unary_() {
    if (accept_('-')) return unary_().neg();
    return factor_();
  }

  RatFunc factor_() {
    RatFunc base = primary_();
    if (accept_('^')) {
      skip_ws_();
      unsigned long e = exponent_();
      MultiPoly n = base.num().pow(static_cast<std::uint32_t>(e));
      MultiPoly d = base.den().pow(static_cast<std::uint32_t>(e));
      return RatFunc(std::move(n), std::move(d));
    }
    return base;
  }

  unsigned long exponent_() {
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail_("exponent must be a non-negative integer literal");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    check_not_decimal_();
    std::string digits(text_.substr(start, pos_ - start));
    errno = 0;
    unsigned long e = std::strtoul(digits.c_str(), nullptr, 10);
    if (errno != 0 || e > 1u << 24) fail_("exponent too large");
    return e;
  }

  void check_not_decimal_() {
    if (pos_ < text_.size() && text_[pos_] == '.') {
      fail_("non-integer literal");
    }
  }

  RatFunc primary_() {
    skip_ws_();
    if (pos_ >= text_.size()) fail_("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc v = expr_();
      if (!accept_(')')) fail_("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      check_not_decimal_();
      mpz_class v(std::string(text_.substr(start, pos_ - start)), 10);
      return RatFunc::constant(ring_, FieldElem::integer(ring_->field, v));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      int idx = ring_->param_index(name);
      if (idx < 0) {
        pos_ = start;
        fail_("unknown parameter name '" + name + "'");
      }
      return RatFunc::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail_(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  RingPtr ring_;
  bool allow_division_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly poly_parse(std::string_view text, const RingPtr& ring) {
  RatFunc v = Parser(text, ring, /*allow_division=*/false).parse();
  // With '/' rejected the result is always polynomial.
  return v.num();
}

MultiPoly poly_parse(std::string_view text, std::vector<std::string> params,
                     const FieldSpec& field) {
  return poly_parse(text, make_ring(field, std::move(params)));
}

RatFunc ratfunc_parse(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring, /*allow_division=*/true).parse();
}

}  // namespace gaussgrass
