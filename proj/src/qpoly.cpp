#include "qons/qpoly.hpp"

#include <algorithm>
#include <sstream>

#include "qons/errors.hpp"

namespace qons {

QPoly::QPoly(long c) : QPoly(mpz_class(c)) {}

QPoly::QPoly(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

QPoly QPoly::monomial(int exponent, const mpz_class& c) {
  QPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

QPoly QPoly::from_coeffs(int low, std::vector<mpz_class> coeffs) {
  QPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void QPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

mpz_class QPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return c_[static_cast<std::size_t>(exponent - low_)];
}

QPoly QPoly::shifted(int by) const {
  QPoly p = *this;
  if (!p.is_zero()) p.low_ += by;
  return p;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[static_cast<std::size_t>(o.low_ - lo) + i] += o.c_[i];
  low_ = lo;
  c_ = std::move(out);
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return QPoly::from_coeffs(a.low_ + b.low_, std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly& QPoly::operator*=(const mpz_class& k) {
  if (k == 0) return *this = QPoly();
  for (auto& x : c_) x *= k;
  return *this;
}

mpz_class QPoly::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly QPoly::divided_by(const mpz_class& k) const {
  QPoly p = *this;
  for (auto& x : p.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
  return p;
}

QPoly QPoly::divexact(const QPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("QPoly::divexact by zero");
  if (is_zero()) return {};
  if (span() < d.span()) throw NotDivisible(to_string() + " by " + d.to_string());
  std::vector<mpz_class> rem = c_;
  const std::size_t n = d.c_.size();
  std::vector<mpz_class> quot(rem.size() - n + 1);
  mpz_class r;
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class& top = rem[k + n - 1];
    if (top == 0) continue;
    mpz_tdiv_qr(quot[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.leading().get_mpz_t());
    if (r != 0) throw NotDivisible(to_string() + " by " + d.to_string());
    for (std::size_t j = 0; j < n; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), d.c_[j].get_mpz_t());
    }
  }
  for (const auto& x : rem) {
    if (x != 0) throw NotDivisible(to_string() + " by " + d.to_string());
  }
  return from_coeffs(low_ - d.low_, std::move(quot));
}

mpq_class QPoly::evaluate(const mpq_class& q) const {
  if (is_zero()) return 0;
  mpq_class acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + mpq_class(c_[i]);
  if (low_ != 0) {
    if (q == 0) throw PoleAtPoint("negative power of q at q=0");
    mpq_class base = low_ > 0 ? q : mpq_class(1) / q;
    for (int i = 0; i < std::abs(low_); ++i) acc *= base;
  }
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const int e = low_ + static_cast<int>(i);
    mpz_class a = abs(c_[i]);
    if (first) {
      if (c_[i] < 0) os << "-";
    } else {
      os << (c_[i] < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

std::vector<mpz_class> primitive(std::vector<mpz_class> v) {
  mpz_class g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  if (!v.empty() && v.back() < 0) {
    for (auto& x : v) x = -x;
  }
  return v;
}

void strip(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Pseudo-remainder of a by b (dense, ascending coefficients).
std::vector<mpz_class> prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const std::size_t n = b.size();
  const mpz_class& lb = b.back();
  while (a.size() >= n) {
    const mpz_class la = a.back();
    const std::size_t shift = a.size() - n;
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < n; ++j) a[shift + j] -= la * b[j];
    strip(a);
  }
  return a;
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  std::vector<mpz_class> x = a.polynomial_part().coeffs();
  std::vector<mpz_class> y = b.polynomial_part().coeffs();
  if (x.empty()) return QPoly::from_coeffs(0, primitive(y));
  if (y.empty()) return QPoly::from_coeffs(0, primitive(x));
  x = primitive(std::move(x));
  y = primitive(std::move(y));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return QPoly(1);
    auto r = prem(x, y);
    x = std::move(y);
    y = primitive(std::move(r));
  }
  return QPoly::from_coeffs(0, primitive(std::move(x)));
}

}  // namespace qons
