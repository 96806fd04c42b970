#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qons/matrix.hpp"

namespace qons {

/// Largest number of terms any intermediate entry may reach before symbolic
/// elimination gives up with ResourceBudgetExceeded.
inline constexpr std::size_t kDefaultTermBudget = 20000;

/// Fraction-free reduced echelon form. Every pivot row carries the same pivot
/// value `pivot` (the determinant of the leading pivot minor) in its pivot
/// column and zeros in the other pivot columns.
struct ScalarEchelon {
  ScalarMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of row i
  Scalar pivot{1};
  std::size_t rank() const { return pivots.size(); }
};

/// Fraction-free Gauss-Jordan. Pivot column: leftmost nonzero; pivot entry:
/// smallest (total degree, term count), then lowest row. Each elimination
/// step divides exactly by the previous pivot.
ScalarEchelon ff_gauss_jordan(ScalarMatrix m, std::size_t term_budget = kDefaultTermBudget);

/// Reduced row echelon form over Q (pivots normalized to 1).
struct RationalEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};
RationalEchelon rref(RationalMatrix m);

std::size_t rank(const ScalarMatrix& m, std::size_t term_budget = kDefaultTermBudget);
std::size_t rank(const RationalMatrix& m);

/// Right kernel, one vector per non-pivot column f, with entry f nonzero and
/// zero at every other non-pivot column. Symbolic vectors are divided through
/// by the pivot when that stays inside the coefficient field.
std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& m, std::size_t term_budget = kDefaultTermBudget);
std::vector<std::vector<mpq_class>> kernel(const RationalMatrix& m);

/// Solution of A x = b with free variables set to zero, written as
/// x = numerators / denominator (the denominator may involve any variable).
struct ScalarSolution {
  bool consistent = false;
  std::vector<Scalar> numerators;
  Scalar denominator{1};
  std::size_t rank_a = 0;
  std::size_t rank_augmented = 0;
  /// numerators[i] / denominator if that lies in the coefficient field.
  std::optional<Scalar> value(std::size_t i) const;
};
ScalarSolution solve(const ScalarMatrix& a, const std::vector<Scalar>& b,
                     std::size_t term_budget = kDefaultTermBudget);

struct RationalSolution {
  bool consistent = false;
  std::vector<mpq_class> x;
  std::size_t rank_a = 0;
  std::size_t rank_augmented = 0;
};
RationalSolution solve(const RationalMatrix& a, const std::vector<mpq_class>& b);

}  // namespace qons
