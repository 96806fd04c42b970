#include "qons/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qons {

WordOrder::WordOrder(std::vector<Letter> precedence, std::size_t alphabet_size)
    : precedence_(std::move(precedence)), rank_(alphabet_size, -1) {
  if (precedence_.size() != alphabet_size) throw InvalidRule("precedence must list every letter exactly once");
  for (std::size_t i = 0; i < precedence_.size(); ++i) {
    const Letter l = precedence_[i];
    if (l >= alphabet_size || rank_[l] != -1) throw InvalidRule("precedence must list every letter exactly once");
    rank_[l] = static_cast<int>(i);
  }
}

bool WordOrder::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return rank_[a[i]] < rank_[b[i]];
  }
  return false;
}

RuleSet::RuleSet(AlphabetPtr alphabet, WordOrder order, std::vector<RewriteRule> rules)
    : alphabet_(std::move(alphabet)), order_(std::move(order)), rules_(std::move(rules)) {
  std::set<Word> leading;
  for (const auto& r : rules_) {
    if (r.lhs.empty()) throw InvalidRule("rule '" + r.name + "' has an empty leading word");
    if (!leading.insert(r.lhs).second) {
      throw InvalidRule("two rules share the leading word " + alphabet_->render(r.lhs));
    }
    for (const auto& [w, c] : r.rhs.terms()) {
      if (!order_.less(w, r.lhs)) {
        throw InvalidRule("rule '" + r.name + "': replacement word " + alphabet_->render(w) +
                          " is not smaller than " + alphabet_->render(r.lhs));
      }
    }
  }
}

AlgebraElement RuleSet::relation(std::size_t i) const {
  const auto& r = rules_.at(i);
  return AlgebraElement::word(alphabet_, r.lhs) - r.rhs;
}

std::pair<std::size_t, std::size_t> RuleSet::find_redex(const Word& w) const {
  constexpr auto npos = static_cast<std::size_t>(-1);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    for (std::size_t k = 0; k < rules_.size(); ++k) {
      const Word& lhs = rules_[k].lhs;
      if (pos + lhs.size() > w.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) return {k, pos};
    }
  }
  return {npos, npos};
}

NormalForm normal_form(const AlgebraElement& x, const RuleSet& rules, std::size_t fuel) {
  if (fuel == 0) throw std::invalid_argument("normal_form requires fuel > 0");
  if (x.alphabet() && !(*x.alphabet() == *rules.alphabet())) {
    throw AlphabetMismatch("element and rule set use different alphabets");
  }
  const WordOrder& order = rules.order();
  std::map<Word, Scalar, WordOrder> work(order);
  for (const auto& [w, c] : x.terms()) work.emplace(w, c);

  // Every word strictly above `bound` is known irreducible. Rewriting only
  // creates smaller words, so the scan proceeds downward.
  std::size_t steps = 0;
  auto it = work.end();
  ReductionStatus status = ReductionStatus::converged;
  while (it != work.begin()) {
    auto cur = std::prev(it);
    const auto [k, pos] = rules.find_redex(cur->first);
    if (k == static_cast<std::size_t>(-1)) {
      it = cur;
      continue;
    }
    if (steps == fuel) {
      status = ReductionStatus::fuel_exhausted;
      break;
    }
    ++steps;
    const Word w = cur->first;
    const Scalar c = cur->second;
    const RewriteRule& rule = rules.rules()[k];
    work.erase(cur);
    const auto p = static_cast<std::ptrdiff_t>(pos);
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Word nw(w.begin(), w.begin() + p);
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + p + static_cast<std::ptrdiff_t>(rule.lhs.size()), w.end());
      auto [slot, inserted] = work.try_emplace(std::move(nw), c * rc);
      if (!inserted) {
        slot->second += c * rc;
        if (slot->second.is_zero()) work.erase(slot);
      }
    }
    // Resume from the first word not above w.
    it = work.upper_bound(w);
  }

  AlgebraElement out(rules.alphabet());
  for (const auto& [w, c] : work) out.add_term(w, c);
  return {std::move(out), status, steps};
}

ZeroVerdict certify_zero(const AlgebraElement& x, const RuleSet& rules, std::size_t fuel) {
  if (x.is_zero()) return ZeroVerdict::Zero;
  const NormalForm nf = normal_form(x, rules, fuel);
  return nf.status == ReductionStatus::converged && nf.value.is_zero() ? ZeroVerdict::Zero
                                                                       : ZeroVerdict::Inconclusive;
}

}  // namespace qons
