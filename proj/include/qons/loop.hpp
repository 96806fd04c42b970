#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "qons/matrix.hpp"

namespace qons {

/// Coefficients of E, F, H in sl2.
struct Sl2Vector {
  mpq_class e, f, h;
  bool is_zero() const { return e == 0 && f == 0 && h == 0; }
  friend bool operator==(const Sl2Vector&, const Sl2Vector&) = default;
};

/// Element of the loop algebra sl2 (x) Q[t, t^-1], stored as power -> triple.
class LoopElement {
 public:
  LoopElement() = default;
  static LoopElement E(int power, const mpq_class& c = 1);
  static LoopElement F(int power, const mpq_class& c = 1);
  static LoopElement H(int power, const mpq_class& c = 1);

  const std::map<int, Sl2Vector>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LoopElement& operator+=(const LoopElement& o);
  LoopElement& operator-=(const LoopElement& o);
  friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
  friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
  LoopElement operator-() const;
  friend LoopElement operator*(const mpq_class& c, const LoopElement& x);
  friend bool operator==(const LoopElement&, const LoopElement&) = default;

  /// Nonzero components as "t^k: aE + bF + cH".
  std::vector<std::string> entries() const;
  std::string to_string() const;

 private:
  void add(int power, const Sl2Vector& v);
  std::map<int, Sl2Vector> terms_;
};

/// [x (x) t^a, y (x) t^b] = [x, y] (x) t^{a+b}, with [E,F] = H, [H,E] = 2E,
/// [H,F] = -2F.
LoopElement bracket(const LoopElement& x, const LoopElement& y);

/// A_k = 2 t^k E + 2 t^-k F.
LoopElement loop_A(int k);
/// G_l = (t^l - t^-l) H.
LoopElement loop_G(int l);

/// Faithful image in 2x2 matrices over Q[t, t^-1] (t is the Scalar variable
/// `t`), so loop elements can serve as associative homomorphism targets.
ScalarMatrix loop_matrix(const LoopElement& x);

}  // namespace qons
