#include "qons/loop.hpp"

#include <sstream>

namespace qons {

LoopElement LoopElement::E(int power, const mpq_class& c) {
  LoopElement x;
  x.add(power, {c, 0, 0});
  return x;
}

LoopElement LoopElement::F(int power, const mpq_class& c) {
  LoopElement x;
  x.add(power, {0, c, 0});
  return x;
}

LoopElement LoopElement::H(int power, const mpq_class& c) {
  LoopElement x;
  x.add(power, {0, 0, c});
  return x;
}

void LoopElement::add(int power, const Sl2Vector& v) {
  auto& slot = terms_[power];
  slot.e += v.e;
  slot.f += v.f;
  slot.h += v.h;
  if (slot.is_zero()) terms_.erase(power);
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  for (const auto& [p, v] : o.terms_) add(p, v);
  return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) { return *this += -o; }

LoopElement LoopElement::operator-() const {
  LoopElement r;
  for (const auto& [p, v] : terms_) r.terms_[p] = {-v.e, -v.f, -v.h};
  return r;
}

LoopElement operator*(const mpq_class& c, const LoopElement& x) {
  LoopElement r;
  if (c == 0) return r;
  for (const auto& [p, v] : x.terms_) r.terms_[p] = {c * v.e, c * v.f, c * v.h};
  return r;
}

std::vector<std::string> LoopElement::entries() const {
  std::vector<std::string> out;
  for (const auto& [p, v] : terms_) {
    std::ostringstream os;
    os << "t^" << p << ": ";
    bool first = true;
    auto put = [&](const mpq_class& c, const char* name) {
      if (c == 0) return;
      if (!first) os << " + ";
      first = false;
      os << "(" << c.get_str() << ")" << name;
    };
    put(v.e, "E");
    put(v.f, "F");
    put(v.h, "H");
    out.push_back(os.str());
  }
  return out;
}

std::string LoopElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& e : entries()) s += (s.empty() ? "" : "; ") + e;
  return s;
}

LoopElement bracket(const LoopElement& x, const LoopElement& y) {
  LoopElement r;
  for (const auto& [a, u] : x.terms()) {
    for (const auto& [b, w] : y.terms()) {
      const mpq_class e = 2 * (u.h * w.e - u.e * w.h);
      const mpq_class f = 2 * (u.f * w.h - u.h * w.f);
      const mpq_class h = u.e * w.f - u.f * w.e;
      if (e != 0) r += LoopElement::E(a + b, e);
      if (f != 0) r += LoopElement::F(a + b, f);
      if (h != 0) r += LoopElement::H(a + b, h);
    }
  }
  return r;
}

LoopElement loop_A(int k) { return LoopElement::E(k, 2) + LoopElement::F(-k, 2); }

LoopElement loop_G(int l) { return LoopElement::H(l, 1) - LoopElement::H(-l, 1); }

ScalarMatrix loop_matrix(const LoopElement& x) {
  ScalarMatrix m(2, 2);
  for (const auto& [p, v] : x.terms()) {
    const Scalar tp = Scalar::var(Var::t, p);
    m(0, 1) += Scalar(v.e) * tp;
    m(1, 0) += Scalar(v.f) * tp;
    m(0, 0) += Scalar(v.h) * tp;
    m(1, 1) -= Scalar(v.h) * tp;
  }
  return m;
}

}  // namespace qons
