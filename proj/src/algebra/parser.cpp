#include "jaclab/algebra/parser.hpp"

#include "jaclab/errors.hpp"

#include <cctype>

namespace jaclab {

namespace {

constexpr long kMaxExponent = 4096;

class Parser {
public:
  Parser(const std::string& text, const VariableNames& vars) : s_(text), vars_(vars) {}

  BiPoly run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    BiPoly r = expression();
    skip();
    if (pos_ < s_.size()) throw ParseError(std::string("unexpected character '") + s_[pos_] + "'", pos_);
    return r;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  BiPoly expression() {
    bool negate = accept('-');
    if (!negate) accept('+');
    BiPoly r = term();
    if (negate) r = -r;
    for (;;) {
      if (accept('+'))
        r = r + term();
      else if (accept('-'))
        r = r - term();
      else
        return r;
    }
  }

  BiPoly term() {
    BiPoly r = factor();
    while (accept('*')) r = r * factor();
    return r;
  }

  BiPoly factor() {
    BiPoly b = base();
    if (!accept('^')) return b;
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected a non-negative integer exponent", at);
    std::string digits = integer_digits();
    if (digits.size() > 6 || std::stol(digits) > kMaxExponent) throw ParseError("exponent too large", at);
    return pow(b, static_cast<unsigned>(std::stol(digits)));
  }

  std::string integer_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  BiPoly base() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", at);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      BiPoly r = expression();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(at, pos_ - at);
      if (name == vars_.first) return BiPoly::var(0);
      if (name == vars_.second) return BiPoly::var(1);
      throw ParseError("unknown variable '" + name + "'", at);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", at);
  }

  BiPoly literal() {
    std::size_t at = pos_;
    Integer num(integer_digits());
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E'))
      throw ParseError("non-rational literal", at);
    skip();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip();
      std::size_t dat = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected a positive integer denominator", dat);
      Integer den(integer_digits());
      if (den == 0) throw ParseError("zero denominator", dat);
      if (pos_ < s_.size() && s_[pos_] == '.') throw ParseError("non-rational literal", at);
      Rational r(num, den);
      r.canonicalize();
      return BiPoly(Number(r));
    }
    return BiPoly(Number(Rational(num)));
  }

  const std::string& s_;
  VariableNames vars_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_polynomial(const std::string& text, const VariableNames& vars) { return Parser(text, vars).run(); }

UPoly parse_univariate(const std::string& text, const std::string& var) {
  BiPoly p = parse_polynomial(text, {var, std::string()});
  return p.specialize(1, Number(0));
}

}  // namespace jaclab
