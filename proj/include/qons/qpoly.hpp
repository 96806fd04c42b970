#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qons {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored as q^low * (c[0] + c[1] q + ... + c[n] q^n) with c[0] and c[n]
/// nonzero; the zero polynomial has an empty coefficient vector.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  QPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static QPoly monomial(int exponent, const mpz_class& c = 1);
  /// Builds from dense coefficients starting at q^low; trims zeros.
  static QPoly from_coeffs(int low, std::vector<mpz_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() == 1 && low_ == 0; }
  bool is_one() const { return is_constant() && c_[0] == 1; }
  /// True when the polynomial is c*q^k for some k.
  bool is_monomial() const { return c_.size() == 1; }

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  /// high() - low(); the degree of the polynomial part.
  int span() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(int exponent) const;
  const mpz_class& leading() const { return c_.back(); }

  QPoly shifted(int by) const;
  /// Polynomial part with the lowest exponent moved to zero.
  QPoly polynomial_part() const { return shifted(-low_); }

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const mpz_class& k);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// Divides every coefficient by k; k must divide the content.
  QPoly divided_by(const mpz_class& k) const;
  /// Exact quotient a/d in Z[q, 1/q]; throws NotDivisible otherwise.
  QPoly divexact(const QPoly& d) const;

  mpq_class evaluate(const mpq_class& q) const;
  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<mpz_class> c_;
};

/// Greatest common divisor of the polynomial parts of a and b in Z[q]:
/// primitive with positive leading coefficient, never divisible by q.
/// gcd(0, b) is the primitive part of b.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

}  // namespace qons
