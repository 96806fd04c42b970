#include "qons/davies.hpp"

#include <algorithm>
#include <random>

namespace qons {

namespace {

std::vector<std::string> word_names(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(davies_alphabet()->render(w));
  return out;
}

template <class T>
Matrix<T> columns_of(const std::vector<Matrix<T>>& images, std::size_t d) {
  Matrix<T> a(d * d, images.size());
  for (std::size_t k = 0; k < images.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a(i * d + j, k) = images[k](i, j);
    }
  }
  return a;
}

template <class T>
std::vector<T> flatten(const Matrix<T>& m) {
  return m.data();
}

std::array<bool, kNumVars> matrix_support(const std::vector<const ScalarMatrix*>& ms) {
  std::array<bool, kNumVars> used{};
  for (const auto* m : ms) {
    for (const auto& x : m->data()) {
      const auto s = x.support();
      for (int i = 0; i < kNumVars; ++i) used[static_cast<std::size_t>(i)] |= s[static_cast<std::size_t>(i)];
    }
  }
  return used;
}

EvaluationPoint random_admissible(std::mt19937_64& rng, const std::array<bool, kNumVars>& used) {
  std::uniform_int_distribution<int> num(-11, 11), den(1, 9);
  EvaluationPoint p;
  for (int i = 0; i < kNumVars; ++i) {
    if (!used[static_cast<std::size_t>(i)]) continue;
    const Var v = static_cast<Var>(i);
    for (;;) {
      mpq_class x(num(rng), den(rng));
      x.canonicalize();
      if (x == 0) continue;
      if (v == Var::q && (x == 1 || x == -1)) continue;
      p.set(v, x);
      break;
    }
  }
  return p;
}

AlgebraElement element_from(const std::vector<Word>& words, const std::vector<Scalar>& coeffs) {
  AlgebraElement x(davies_alphabet());
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!coeffs[i].is_zero()) x.add_term(words[i], coeffs[i]);
  }
  return x;
}

std::vector<Scalar> to_scalars(const std::vector<mpq_class>& v) {
  std::vector<Scalar> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

ScalarMatrix word_image(const ScalarMatrix& w0, const ScalarMatrix& w1, const Word& w) {
  ScalarMatrix m = ScalarMatrix::identity(w0.rows());
  for (Letter l : w) m = m * (l == 0 ? w0 : w1);
  return m;
}

}  // namespace

const AlphabetPtr& davies_alphabet() { return bundled_presentation("qoa")->alphabet; }

WordBasis WordBasis::up_to(int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  WordBasis b;
  b.degree = degree;
  std::vector<Word> layer{Word{}};
  b.words = layer;
  for (int d = 1; d <= degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      for (Letter l : {Letter{0}, Letter{1}}) {
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    }
    b.words.insert(b.words.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return b;
}

std::vector<ScalarMatrix> word_images(const ScalarMatrix& w0, const ScalarMatrix& w1, const WordBasis& basis) {
  if (!w0.square() || w0.rows() != w1.rows() || w0.cols() != w1.cols()) {
    throw CarrierMismatch("W0 and W1 must be square matrices of one size");
  }
  std::vector<ScalarMatrix> images;
  images.reserve(basis.words.size());
  // Words are graded-lex, so the prefix of word k sits at index (k - 1) / 2.
  for (std::size_t k = 0; k < basis.words.size(); ++k) {
    if (k == 0) {
      images.push_back(ScalarMatrix::identity(w0.rows()));
      continue;
    }
    const ScalarMatrix& prefix = images[(k - 1) / 2];
    images.push_back(prefix * (basis.words[k].back() == 0 ? w0 : w1));
  }
  return images;
}

nlohmann::json KernelReport::to_json() const {
  nlohmann::json j;
  j["module"] = module;
  j["degree"] = degree;
  j["mode"] = mode;
  j["points"] = points;
  if (!point_dimensions.empty()) j["point_dimensions"] = point_dimensions;
  j["word_count"] = word_count;
  j["rank"] = rank;
  j["kernel_dimension"] = kernel_dimension;
  nlohmann::json basis_json = nlohmann::json::array();
  for (const auto& x : basis) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [w, c] : x.terms()) terms.push_back({davies_alphabet()->render(w), c.to_string()});
    basis_json.push_back(std::move(terms));
  }
  j["basis"] = std::move(basis_json);
  return j;
}

KernelReport kernel_basis(const ScalarMatrix& w0, const ScalarMatrix& w1, int degree, const std::string& label,
                          const std::optional<EvaluationPoint>& point, const KernelOptions& opts) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  const std::size_t count = (std::size_t{2} << degree) - 1;
  if (degree > 30 || count > opts.word_cap) {
    throw ResourceBudgetExceeded("degree " + std::to_string(degree) + " needs " + std::to_string(count) +
                                 " words; cap is " + std::to_string(opts.word_cap));
  }
  const WordBasis basis = WordBasis::up_to(degree);
  const std::size_t d = w0.rows();
  KernelReport rep;
  rep.module = label;
  rep.degree = degree;
  rep.word_count = basis.words.size();

  auto rational_run = [&](const EvaluationPoint& p) {
    const RationalMatrix r0 = evaluate(w0, p), r1 = evaluate(w1, p);
    const auto images = word_images(to_scalar(r0), to_scalar(r1), basis);
    std::vector<RationalMatrix> rimages;
    for (const auto& m : images) rimages.push_back(evaluate(m, p));
    return kernel(columns_of(rimages, d));
  };

  if (point) {
    rep.mode = "point";
    rep.points.push_back(point->to_string());
    const auto k = rational_run(*point);
    rep.kernel_dimension = k.size();
    for (const auto& v : k) rep.basis.push_back(element_from(basis.words, to_scalars(v)));
  } else {
    try {
      const auto images = word_images(w0, w1, basis);
      const auto k = kernel(columns_of(images, d), opts.term_budget);
      rep.mode = "symbolic";
      rep.kernel_dimension = k.size();
      for (const auto& v : k) rep.basis.push_back(element_from(basis.words, v));
    } catch (const ResourceBudgetExceeded&) {
      rep.mode = "fallback";
      std::mt19937_64 rng(opts.seed);
      const auto used = matrix_support({&w0, &w1});
      std::vector<std::vector<std::vector<mpq_class>>> kernels;
      while (static_cast<int>(kernels.size()) < std::max(3, opts.fallback_points)) {
        const EvaluationPoint p = random_admissible(rng, used);
        try {
          kernels.push_back(rational_run(p));
        } catch (const PoleAtPoint&) {
          continue;
        }
        rep.points.push_back(p.to_string());
        rep.point_dimensions.push_back(kernels.back().size());
      }
      const auto best = std::min_element(rep.point_dimensions.begin(), rep.point_dimensions.end());
      rep.kernel_dimension = *best;
      for (const auto& v : kernels[static_cast<std::size_t>(best - rep.point_dimensions.begin())]) {
        rep.basis.push_back(element_from(basis.words, to_scalars(v)));
      }
    }
  }
  rep.rank = rep.word_count - rep.kernel_dimension;
  return rep;
}

KernelReport kernel_basis(const Module& m, const QOnsagerPair& pair, int degree,
                          const std::optional<EvaluationPoint>& point, const KernelOptions& opts) {
  return kernel_basis(m.represent(pair.W0), m.represent(pair.W1), degree, m.describe(), point, opts);
}

std::optional<Scalar> FitResult::coefficient(std::size_t i) const {
  ScalarSolution s;
  s.numerators = numerators;
  s.denominator = denominator;
  return s.value(i);
}

mpq_class FitResult::coefficient_at(std::size_t i, const EvaluationPoint& p) const {
  const mpq_class d = denominator.evaluate(p);
  if (d == 0) throw PoleAtPoint("fit denominator vanishes at " + p.to_string());
  return numerators.at(i).evaluate(p) / d;
}

nlohmann::json FitResult::to_json() const {
  nlohmann::json j;
  j["feasible"] = feasible;
  j["specialization"] = specialization;
  j["basis"] = word_names(basis_words);
  nlohmann::json nums = nlohmann::json::array();
  for (const auto& n : numerators) nums.push_back(n.to_string());
  j["numerators"] = std::move(nums);
  j["denominator"] = denominator.to_string();
  j["rank_basis"] = rank_basis;
  j["rank_augmented"] = rank_augmented;
  j["solution_space_dimension"] = solution_space_dimension;
  j["residual"] = nonzero_entries(residual);
  return j;
}

FitResult fit_relation(const ScalarMatrix& target, const std::vector<ScalarMatrix>& basis_images,
                       std::vector<Word> basis_words, std::size_t term_budget) {
  const std::size_t d = target.rows();
  const ScalarSolution s = solve(columns_of(basis_images, d), flatten(target), term_budget);
  FitResult f;
  f.feasible = s.consistent;
  f.basis_words = std::move(basis_words);
  f.numerators = s.numerators;
  f.denominator = s.denominator;
  f.rank_basis = s.rank_a;
  f.rank_augmented = s.rank_augmented;
  f.solution_space_dimension = basis_images.size() - s.rank_a;
  ScalarMatrix r = f.denominator * target;
  for (std::size_t i = 0; i < basis_images.size(); ++i) {
    if (!f.numerators[i].is_zero()) r -= f.numerators[i] * basis_images[i];
  }
  f.residual = std::move(r);
  return f;
}

FitResult fit_relation(const ScalarMatrix& w0, const ScalarMatrix& w1, const AlgebraElement& target,
                       const std::vector<Word>& basis_words, std::size_t term_budget) {
  Homomorphism<ScalarMatrix> h(davies_alphabet(), ScalarMatrix::identity(w0.rows()));
  h.assign(Letter{0}, w0).assign(Letter{1}, w1);
  std::vector<ScalarMatrix> images;
  for (const auto& w : basis_words) images.push_back(word_image(w0, w1, w));
  return fit_relation(h.apply(target), images, basis_words, term_budget);
}

FitResult fit_relation_at(const ScalarMatrix& w0, const ScalarMatrix& w1, const AlgebraElement& target,
                          const std::vector<Word>& basis_words, const EvaluationPoint& p) {
  Homomorphism<ScalarMatrix> h(davies_alphabet(), ScalarMatrix::identity(w0.rows()));
  h.assign(Letter{0}, w0).assign(Letter{1}, w1);
  const RationalMatrix t = evaluate(h.apply(target), p);
  std::vector<RationalMatrix> images;
  for (const auto& w : basis_words) images.push_back(evaluate(word_image(w0, w1, w), p));
  const RationalSolution s = solve(columns_of(images, t.rows()), flatten(t));
  FitResult f;
  f.feasible = s.consistent;
  f.basis_words = basis_words;
  f.numerators = to_scalars(s.x);
  f.rank_basis = s.rank_a;
  f.rank_augmented = s.rank_augmented;
  f.solution_space_dimension = basis_words.size() - s.rank_a;
  f.specialization = p.to_string();
  RationalMatrix r = t;
  for (std::size_t i = 0; i < images.size(); ++i) r -= s.x[i] * images[i];
  f.residual = to_scalar(r);
  return f;
}

std::vector<Word> default_aw3_basis() { return {{1}, {0}, {}, {0, 1}, {1, 0}}; }

AlgebraElement aw3_target() { return parse_element("[W0,[W0,W1]_q]_q^-1", davies_alphabet()); }

}  // namespace qons
