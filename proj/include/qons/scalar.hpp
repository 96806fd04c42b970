#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qons/qpoly.hpp"

namespace qons {

/// Variables of the coefficient field. q and the spectral/loop variables are
/// Laurent; k+, k-, e+, e- (the boundary scalars) are ordinary.
enum class Var : std::uint8_t { q, v1, v2, v3, v4, v5, v6, t, kp, km, ep, em };

inline constexpr int kNumVars = 12;
/// Variables other than q; these index the numerator monomials.
inline constexpr int kNumOuterVars = kNumVars - 1;

std::string_view var_name(Var v);
std::optional<Var> parse_var_name(std::string_view name);
bool is_laurent_var(Var v);
/// The i-th spectral variable (1-based): v, v2, ..., v6.
Var spectral_var(int index);

/// Exponents of the non-q variables, indexed by (Var - 1).
using Monomial = std::array<std::int16_t, kNumOuterVars>;

/// Rational values for a subset of the variables.
class EvaluationPoint {
 public:
  EvaluationPoint() = default;
  EvaluationPoint& set(Var v, const mpq_class& value);
  bool has(Var v) const { return values_[index(v)].has_value(); }
  const mpq_class& get(Var v) const;
  bool empty() const;
  std::string to_string() const;
  friend bool operator==(const EvaluationPoint&, const EvaluationPoint&) = default;

 private:
  static std::size_t index(Var v) { return static_cast<std::size_t>(v); }
  std::array<std::optional<mpq_class>, kNumVars> values_;
};

/// Exact element of Q(q, v.., t, k+, k-, e+, e-) whose denominator is a
/// polynomial in q alone.
///
/// Canonical form: numerator and denominator have no common factor in Z[q];
/// the denominator has lowest exponent 0, is free of integer content shared
/// with the numerator, and has a positive leading coefficient. Zero is 0/1.
/// Two Scalars are equal iff their canonical forms coincide.
class Scalar {
 public:
  using Numerator = std::map<Monomial, QPoly>;

  Scalar() = default;
  Scalar(long c);  // NOLINT(google-explicit-constructor)
  Scalar(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& c);
  explicit Scalar(const QPoly& p);
  /// numerator / denominator, normalized. The denominator must be nonzero.
  Scalar(Numerator numerator, QPoly denominator);

  static Scalar q_power(int n);
  static Scalar var(Var v, int exponent = 1);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  /// True when the numerator involves only q.
  bool is_q_only() const;
  /// True when the value is a rational constant.
  bool is_rational() const;
  /// Rational value of a constant Scalar; throws if not constant.
  mpq_class to_rational() const;

  const Numerator& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }
  std::size_t term_count() const;
  /// Largest total degree over all numerator monomials (q included).
  int total_degree() const;
  /// Variables with nonzero exponent somewhere in the numerator (q included
  /// when the numerator or denominator depends on q).
  std::array<bool, kNumVars> support() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Division by a Scalar whose numerator involves only q.
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }

  /// Multiplicative inverse when it exists inside this field shape: q-only
  /// nonzero Scalars and c(q) * (Laurent monomial) units.
  std::optional<Scalar> unit_inverse() const;

  /// Exact value at a point binding every variable that occurs.
  mpq_class evaluate(const EvaluationPoint& p) const;
  /// Substitutes the variables bound in p and keeps the rest symbolic.
  Scalar specialize(const EvaluationPoint& p) const;

  /// Canonical text; `parse_scalar` reads it back.
  std::string to_string() const;

 private:
  void normalize();

  Numerator num_;
  QPoly den_ = QPoly(1);
};

/// Exact quotient a/b in the ring of Scalars. Unlike operator/, b may involve
/// any variable; throws NotDivisible when the quotient is not a Scalar.
Scalar exact_quotient(const Scalar& a, const Scalar& b);

/// The symmetric q-integer [n] = (q^n - q^-n)/(q - q^-1).
Scalar q_integer(int n);

}  // namespace qons
