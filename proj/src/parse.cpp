#include "vieta/parse.hpp"

#include <cctype>
#include <string>

#include "vieta/errors.hpp"

namespace vieta {

namespace {

class Parser {
public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  LaurentPolynomial run() {
    if (n_ == 0) throw DimensionError("polynomials need at least one variable");
    LaurentPolynomial out(n_);
    skip_space();
    if (at_end()) throw ParseError("empty expression", pos_);
    int sign = 1;
    if (accept_minus()) {
      sign = -1;
    } else {
      accept('+');
    }
    term(out, sign);
    while (true) {
      skip_space();
      if (at_end()) break;
      if (accept_minus()) {
        sign = -1;
      } else if (accept('+')) {
        sign = 1;
      } else {
        throw ParseError("expected '+' or '-'", pos_);
      }
      term(out, sign);
    }
    return out;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept_minus() {
    skip_space();
    if (accept('-')) return true;
    static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
    if (text_.substr(pos_, kUnicodeMinus.size()) == kUnicodeMinus) {
      pos_ += kUnicodeMinus.size();
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_space();
    return !at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool peek_factor() {
    skip_space();
    return !at_end() && text_[pos_] == 't';
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t small_integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign) {
      if (accept_minus()) {
        negative = true;
      } else {
        accept('+');
      }
    }
    const std::size_t where = pos_;
    std::string d = digits();
    if (d.size() > 18) throw ParseError("integer too large", where);
    std::int64_t v = std::stoll(d);
    return negative ? -v : v;
  }

  void term(LaurentPolynomial& out, int sign) {
    skip_space();
    const std::size_t start = pos_;
    Rational coeff(sign);
    bool has_coeff = false;
    if (peek_digit()) {
      Integer num(digits());
      Integer den(1);
      if (accept('/')) {
        const std::size_t where = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError("zero denominator", where);
      }
      coeff *= Rational(num, den);
      has_coeff = true;
    }
    Exponent e(n_, 0);
    bool has_factor = false;
    if (has_coeff) {
      if (accept('*') && !peek_factor()) throw ParseError("expected a variable after '*'", pos_);
    }
    while (peek_factor()) {
      factor(e);
      has_factor = true;
      if (accept('*') && !peek_factor()) throw ParseError("expected a variable after '*'", pos_);
    }
    if (!has_coeff && !has_factor) throw ParseError("expected a term", start);
    out.add_term(e, coeff);
  }

  void factor(Exponent& e) {
    const std::size_t start = pos_;
    ++pos_; // 't'
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a variable index after 't'", pos_);
    }
    std::int64_t index = small_integer(false);
    if (index < 1 || static_cast<std::size_t>(index) > n_) {
      throw ParseError("variable t" + std::to_string(index) + " out of range 1.." +
                           std::to_string(n_),
                       start);
    }
    std::int64_t power = 1;
    if (accept('^')) power = small_integer(true);
    e[static_cast<std::size_t>(index - 1)] += power;
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

} // namespace

LaurentPolynomial parse_laurent(std::string_view text, std::size_t n) {
  return Parser(text, n).run();
}

} // namespace vieta
