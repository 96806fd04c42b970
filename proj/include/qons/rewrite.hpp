#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qons/ncalg.hpp"

namespace qons {

inline constexpr std::size_t kDefaultFuel = 100000;

/// Graded lexicographic order under a declared letter precedence.
class WordOrder {
 public:
  WordOrder() = default;
  /// `precedence` lists every letter from smallest to largest.
  explicit WordOrder(std::vector<Letter> precedence, std::size_t alphabet_size);

  bool less(const Word& a, const Word& b) const;
  bool operator()(const Word& a, const Word& b) const { return less(a, b); }
  const std::vector<Letter>& precedence() const { return precedence_; }

 private:
  std::vector<Letter> precedence_;
  std::vector<int> rank_;
};

/// One defining relation solved for its leading word: lhs -> rhs.
struct RewriteRule {
  std::string name;
  Word lhs;
  AlgebraElement rhs;
};

/// Oriented presentation. Every replacement word is strictly smaller than its
/// leading word, so reduction terminates.
class RuleSet {
 public:
  RuleSet(AlphabetPtr alphabet, WordOrder order, std::vector<RewriteRule> rules);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const WordOrder& order() const { return order_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// The relation lhs - rhs of rule i.
  AlgebraElement relation(std::size_t i) const;

  /// First rule (declared order) matching at the leftmost position of w;
  /// returns {rule index, position} or {npos, npos}.
  std::pair<std::size_t, std::size_t> find_redex(const Word& w) const;

 private:
  AlphabetPtr alphabet_;
  WordOrder order_;
  std::vector<RewriteRule> rules_;
};

enum class ReductionStatus { converged, fuel_exhausted };

struct NormalForm {
  AlgebraElement value;
  ReductionStatus status;
  std::size_t steps;
};

/// Reduces x modulo the rule set, largest word first, leftmost redex, first
/// rule in declared order. Each elementary rewrite consumes one unit of fuel.
NormalForm normal_form(const AlgebraElement& x, const RuleSet& rules, std::size_t fuel = kDefaultFuel);

enum class ZeroVerdict { Zero, Inconclusive };

/// Zero only when the normal form converged to exactly 0. Never claims
/// "nonzero": the rule set need not be confluent.
ZeroVerdict certify_zero(const AlgebraElement& x, const RuleSet& rules, std::size_t fuel = kDefaultFuel);

}  // namespace qons
