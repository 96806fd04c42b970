#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qons/coideal.hpp"
#include "qons/linalg.hpp"

namespace qons {

/// The alphabet {W0, W1} of the q-Onsager presentation.
const AlphabetPtr& davies_alphabet();

/// Every word in W0, W1 of length <= degree, graded-lex with W0 < W1:
/// 1, W0, W1, W0W0, W0W1, ... (2^{degree+1} - 1 words).
struct WordBasis {
  int degree = 0;
  std::vector<Word> words;
  static WordBasis up_to(int degree);
};

inline constexpr std::size_t kDefaultWordCap = 4095;

struct KernelOptions {
  std::size_t word_cap = kDefaultWordCap;
  std::size_t term_budget = kDefaultTermBudget;
  /// Rational points tried when symbolic elimination exceeds its budget.
  int fallback_points = 3;
  std::uint64_t seed = 1;
};

/// Kernel of word -> matrix on a module.
struct KernelReport {
  std::string module;
  int degree = 0;
  std::string mode;  // "symbolic", "point" or "fallback"
  std::vector<std::string> points;  // points used (point/fallback modes)
  std::vector<std::size_t> point_dimensions;  // fallback: kernel dimension per point
  std::size_t word_count = 0;
  std::size_t rank = 0;
  std::size_t kernel_dimension = 0;
  /// One element per kernel vector; in fallback mode, at the first point
  /// realizing the consensus (smallest) dimension.
  std::vector<AlgebraElement> basis;
  nlohmann::json to_json() const;
};

/// Images of the basis words, built prefix by prefix.
std::vector<ScalarMatrix> word_images(const ScalarMatrix& w0, const ScalarMatrix& w1, const WordBasis& basis);

/// Symbolic kernel unless `point` is given. Symbolic elimination that runs
/// over budget falls back to `fallback_points` random admissible points.
/// Throws ResourceBudgetExceeded when the word count exceeds the cap.
KernelReport kernel_basis(const ScalarMatrix& w0, const ScalarMatrix& w1, int degree, const std::string& label,
                          const std::optional<EvaluationPoint>& point = std::nullopt, const KernelOptions& opts = {});
KernelReport kernel_basis(const Module& m, const QOnsagerPair& pair, int degree,
                          const std::optional<EvaluationPoint>& point = std::nullopt, const KernelOptions& opts = {});

/// target = sum c_w w with c_w = numerators[w] / denominator.
struct FitResult {
  bool feasible = false;
  std::vector<Word> basis_words;
  std::vector<Scalar> numerators;
  Scalar denominator{1};
  std::size_t rank_basis = 0;
  std::size_t rank_augmented = 0;
  std::size_t solution_space_dimension = 0;
  /// denominator * target - sum numerators[w] * w, exactly.
  ScalarMatrix residual;
  std::string specialization = "symbolic";

  /// Coefficient of basis word i when it lies in the coefficient field.
  std::optional<Scalar> coefficient(std::size_t i) const;
  /// Coefficient of basis word i at a rational point.
  mpq_class coefficient_at(std::size_t i, const EvaluationPoint& p) const;
  nlohmann::json to_json() const;
};

/// Free coefficients are set to zero (reduced echelon particular solution).
/// An inconsistent system yields feasible = false with the residual of the
/// solution of its consistent part.
FitResult fit_relation(const ScalarMatrix& target, const std::vector<ScalarMatrix>& basis_images,
                       std::vector<Word> basis_words, std::size_t term_budget = kDefaultTermBudget);
/// Target and basis words over davies_alphabet(), represented through W0, W1.
FitResult fit_relation(const ScalarMatrix& w0, const ScalarMatrix& w1, const AlgebraElement& target,
                       const std::vector<Word>& basis_words, std::size_t term_budget = kDefaultTermBudget);
/// Same, evaluated at a rational point first.
FitResult fit_relation_at(const ScalarMatrix& w0, const ScalarMatrix& w1, const AlgebraElement& target,
                          const std::vector<Word>& basis_words, const EvaluationPoint& p);

/// {W1, W0, 1, W0W1, W1W0}.
std::vector<Word> default_aw3_basis();
/// [W0, [W0, W1]_q]_{q^-1}.
AlgebraElement aw3_target();

}  // namespace qons
