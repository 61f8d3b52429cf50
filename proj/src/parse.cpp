#include "jetnash/parse.hpp"

#include <cctype>
#include <string>

#include "jetnash/errors.hpp"

namespace jetnash {

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    skipSpace();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    Polynomial p = expr();
    skipSpace();
    if (pos_ != text_.size()) unexpected();
    return p;
  }

 private:
  void skipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skipSpace();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void unexpected() {
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isalnum(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unexpected '") + c + "' (implicit multiplication is not allowed)",
                       pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc = acc + term();
      } else if (c == '-') {
        ++pos_;
        acc = acc - term();
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
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (peek() == '^') {
      ++pos_;
      skipSpace();
      const std::size_t at = pos_;
      mpz_class e = integer("exponent");
      if (e <= 0) throw ParseError("exponent must be a positive integer", at);
      if (e > 1'000'000) throw ParseError("exponent too large", at);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer(const char* what) {
    skipSpace();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(std::string("expected ") + what, start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') {
        if (pos_ >= text_.size()) throw ParseError("missing ')'", pos_);
        unexpected();
      }
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = integer("integer");
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        skipSpace();
        const std::size_t at = pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          throw ParseError("expected denominator", at);
        den = integer("denominator");
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Coefficient q(num, den);
      q.canonicalize();
      return Polynomial::constant(ring_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    unexpected();
  }

  Polynomial variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string base(text_.substr(start, pos_ - start));
    unsigned jet = 0;
    if (pos_ < text_.size() && text_[pos_] == '_') {
      ++pos_;
      const std::size_t at = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (at == pos_) throw ParseError("expected jet index after '_'", at);
      if (pos_ - at > 6) throw ParseError("jet index too large", at);
      jet = static_cast<unsigned>(std::stoul(std::string(text_.substr(at, pos_ - at))));
    }
    auto idx = ring_->indexOf(base, jet);
    if (!idx) {
      const std::string name = JetVariable{base, jet}.name();
      throw ParseError("unknown variable '" + name + "'", start);
    }
    return Polynomial::variable(ring_, *idx);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view text, const RingPtr& ring) {
  return PolynomialParser(text, ring).parse();
}

}  // namespace jetnash
