#include <cctype>
#include <string>

#include "qons/ncalg.hpp"

namespace qons {

namespace {

class Parser {
 public:
  Parser(std::string_view text, AlphabetPtr alphabet) : s_(text), alphabet_(std::move(alphabet)) {}

  AlgebraElement parse_all() {
    AlgebraElement x = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  AlgebraElement constant(const Scalar& c) const { return AlgebraElement(alphabet_, c); }

  AlgebraElement expr() {
    AlgebraElement acc = term();
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

  AlgebraElement term() {
    AlgebraElement acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        auto d = unary().as_scalar();
        if (!d) {
          pos_ = at;
          fail("division by a non-scalar");
        }
        acc = (Scalar(1) / *d) * acc;
      } else {
        return acc;
      }
    }
  }

  AlgebraElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  int exponent() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    return neg ? -e : e;
  }

  AlgebraElement power() {
    AlgebraElement base = atom();
    if (!accept('^')) return base;
    const int e = exponent();
    if (auto s = base.as_scalar()) {
      Scalar b = *s;
      if (e < 0) {
        auto inv = b.unit_inverse();
        if (!inv) fail("negative power of a non-invertible scalar");
        b = *inv;
      }
      Scalar r(1);
      for (int i = 0; i < std::abs(e); ++i) r *= b;
      return constant(r);
    }
    if (e < 0) fail("negative power of a generator expression");
    AlgebraElement r = constant(Scalar(1));
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  }

  AlgebraElement atom() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      AlgebraElement x = expr();
      expect(')');
      return x;
    }
    if (c == '[') {
      ++pos_;
      AlgebraElement x = expr();
      expect(',');
      AlgebraElement y = expr();
      expect(']');
      if (accept('_')) {
        auto lambda = power().as_scalar();
        if (!lambda) fail("deformation parameter must be a scalar");
        return q_bracket(x, y, *lambda);
      }
      return bracket(x, y);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return constant(Scalar(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      if ((name == "k" || name == "e") && pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        name += s_[pos_++];
      }
      if (auto v = parse_var_name(name)) return constant(Scalar::var(*v));
      if (alphabet_) {
        if (auto l = alphabet_->find(name)) return AlgebraElement::letter(alphabet_, *l);
      }
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  AlphabetPtr alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  AlgebraElement x = Parser(text, nullptr).parse_all();
  auto s = x.as_scalar();
  if (!s) throw ParseError("not a scalar: '" + std::string(text) + "'");
  return *s;
}

AlgebraElement parse_element(std::string_view text, const AlphabetPtr& alphabet) {
  AlgebraElement x = Parser(text, alphabet).parse_all();
  return AlgebraElement(alphabet) + x;
}

}  // namespace qons
