#include "qons/linalg.hpp"

#include <tuple>

namespace qons {

namespace {

// Eliminates over the first `limit` columns only; later columns ride along.
ScalarEchelon eliminate(ScalarMatrix m, std::size_t limit, std::size_t budget) {
  ScalarEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  Scalar prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t best = rows;
    std::tuple<int, std::size_t> best_key{0, 0};
    for (std::size_t i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const std::tuple<int, std::size_t> key{m(i, c).total_degree(), m(i, c).term_count()};
      if (best == rows || key < best_key) {
        best = i;
        best_key = key;
      }
    }
    if (best == rows) continue;
    if (best != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(best, j), m(r, j));
    }
    const Scalar p = m(r, c);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar a = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) {
        if (j == c) continue;
        Scalar x = p * m(i, j) - a * m(r, j);
        if (!x.is_zero() && !prev.is_one()) x = exact_quotient(x, prev);
        if (x.term_count() > budget) {
          throw ResourceBudgetExceeded("elimination entry exceeds " + std::to_string(budget) + " terms");
        }
        m(i, j) = std::move(x);
      }
      m(i, c) = Scalar(0);
    }
    prev = p;
    out.pivots.push_back(c);
    ++r;
  }
  out.pivot = prev;
  out.reduced = std::move(m);
  return out;
}

RationalEchelon eliminate(RationalMatrix m, std::size_t limit) {
  RationalEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    }
    const mpq_class inv = 1 / m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const mpq_class a = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= a * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

// Divides every entry by d when the result stays in the field.
void divide_through(std::vector<Scalar>& v, const Scalar& d) {
  if (d.is_one()) return;
  if (d.is_q_only()) {
    for (auto& x : v) x /= d;
    return;
  }
  if (const auto inv = d.unit_inverse()) {
    for (auto& x : v) x *= *inv;
    return;
  }
  std::vector<Scalar> out;
  out.reserve(v.size());
  try {
    for (const auto& x : v) out.push_back(x.is_zero() ? x : exact_quotient(x, d));
  } catch (const NotDivisible&) {
    return;
  }
  v = std::move(out);
}

}  // namespace

ScalarEchelon ff_gauss_jordan(ScalarMatrix m, std::size_t term_budget) {
  const std::size_t cols = m.cols();
  return eliminate(std::move(m), cols, term_budget);
}

RationalEchelon rref(RationalMatrix m) {
  const std::size_t cols = m.cols();
  return eliminate(std::move(m), cols);
}

std::size_t rank(const ScalarMatrix& m, std::size_t term_budget) { return ff_gauss_jordan(m, term_budget).rank(); }
std::size_t rank(const RationalMatrix& m) { return rref(m).rank(); }

std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& m, std::size_t term_budget) {
  const ScalarEchelon e = ff_gauss_jordan(m, term_budget);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[f] = e.pivot;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    divide_through(v, e.pivot);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<mpq_class>> kernel(const RationalMatrix& m) {
  const RationalEchelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(m.cols(), mpq_class(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Scalar> ScalarSolution::value(std::size_t i) const {
  const Scalar& n = numerators.at(i);
  if (denominator.is_one() || n.is_zero()) return n;
  if (denominator.is_q_only()) return n / denominator;
  if (const auto inv = denominator.unit_inverse()) return n * *inv;
  try {
    return exact_quotient(n, denominator);
  } catch (const NotDivisible&) {
    return std::nullopt;
  }
}

ScalarSolution solve(const ScalarMatrix& a, const std::vector<Scalar>& b, std::size_t term_budget) {
  if (b.size() != a.rows()) throw CarrierMismatch("right-hand side length differs from row count");
  const std::size_t n = a.cols();
  ScalarMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const ScalarEchelon e = eliminate(std::move(aug), n, term_budget);
  ScalarSolution s;
  s.rank_a = e.rank();
  s.consistent = true;
  for (std::size_t i = e.rank(); i < a.rows(); ++i) {
    if (!e.reduced(i, n).is_zero()) s.consistent = false;
  }
  s.rank_augmented = s.rank_a + (s.consistent ? 0 : 1);
  s.numerators.assign(n, Scalar(0));
  for (std::size_t i = 0; i < e.rank(); ++i) s.numerators[e.pivots[i]] = e.reduced(i, n);
  s.denominator = e.pivot;
  std::vector<Scalar> all = s.numerators;
  all.push_back(s.denominator);
  divide_through(all, e.pivot);
  s.denominator = all.back();
  all.pop_back();
  s.numerators = std::move(all);
  return s;
}

RationalSolution solve(const RationalMatrix& a, const std::vector<mpq_class>& b) {
  if (b.size() != a.rows()) throw CarrierMismatch("right-hand side length differs from row count");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  const RationalEchelon e = eliminate(std::move(aug), n);
  RationalSolution s;
  s.rank_a = e.rank();
  s.consistent = true;
  for (std::size_t i = e.rank(); i < a.rows(); ++i) {
    if (e.reduced(i, n) != 0) s.consistent = false;
  }
  s.rank_augmented = s.rank_a + (s.consistent ? 0 : 1);
  s.x.assign(n, mpq_class(0));
  for (std::size_t i = 0; i < e.rank(); ++i) s.x[e.pivots[i]] = e.reduced(i, n);
  return s;
}

}  // namespace qons
