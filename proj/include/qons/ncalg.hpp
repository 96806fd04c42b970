#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qons/errors.hpp"
#include "qons/matrix.hpp"
#include "qons/scalar.hpp"

namespace qons {

using Letter = std::uint16_t;
using Word = std::vector<Letter>;

/// Ordered generator names, with optional formal-inverse pairs.
///
/// Formal inverses are independent letters; only rule sets and modules know
/// that g * g_inv = 1.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> names,
           std::vector<std::pair<std::string, std::string>> inverse_pairs = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_.at(l); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Letter> find(std::string_view name) const;
  Letter at(std::string_view name) const;
  std::optional<Letter> inverse(Letter l) const;
  const std::vector<std::pair<Letter, Letter>>& inverse_pairs() const { return pairs_; }

  std::string render(const Word& w) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.names_ == b.names_ && a.pairs_ == b.pairs_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<Letter, Letter>> pairs_;
  std::vector<std::optional<Letter>> inverse_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names,
                          std::vector<std::pair<std::string, std::string>> inverse_pairs = {});

/// Graded lexicographic order on words: shorter first, then by letter index.
struct GradedLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Finite Scalar-linear combination of words; the empty word is the unit.
/// No simplification is ever applied beyond merging equal words.
class AlgebraElement {
 public:
  using Terms = std::map<Word, Scalar, GradedLex>;

  AlgebraElement() = default;
  explicit AlgebraElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}
  AlgebraElement(AlphabetPtr alphabet, const Scalar& c);

  static AlgebraElement letter(AlphabetPtr alphabet, Letter l);
  static AlgebraElement letter(AlphabetPtr alphabet, std::string_view name);
  static AlgebraElement word(AlphabetPtr alphabet, Word w, const Scalar& c = Scalar(1));

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the empty word when the element is a pure scalar.
  std::optional<Scalar> as_scalar() const;
  Scalar coefficient(const Word& w) const;
  std::size_t degree() const;

  void add_term(const Word& w, const Scalar& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);

  /// Expression text: `c*w1*w2 + ...`; `parse_element` reads it back.
  std::string to_string() const;

 private:
  void check_compatible(const AlgebraElement& o) const;
  AlphabetPtr alphabet_;
  Terms terms_;
};

/// xy - yx.
template <class T>
T bracket(const T& x, const T& y) {
  return x * y - y * x;
}

/// The deformed commutator lambda*x*y - lambda^{-1}*y*x.
template <class T>
T q_bracket(const T& x, const T& y, const Scalar& lambda) {
  if (lambda.is_zero()) throw ZeroDeformation("q_bracket with lambda = 0");
  const auto inv = lambda.unit_inverse();
  if (!inv) throw DenominatorOutOfDomain("q_bracket deformation " + lambda.to_string() + " is not a unit");
  return lambda * (x * y) - *inv * (y * x);
}

/// [x, [x, [x, y]_q]_{q^-1}], outermost an ordinary commutator.
template <class T>
T nested_dg_lhs(const T& x, const T& y) {
  const Scalar q = Scalar::q_power(1);
  const Scalar qinv = Scalar::q_power(-1);
  return bracket(x, q_bracket(x, q_bracket(x, y, q), qinv));
}

/// Letter assignment extended multiplicatively and Scalar-linearly.
/// Target is any associative type with *, +, Scalar*, e.g. AlgebraElement or
/// ScalarMatrix.
template <class Target>
class Homomorphism {
 public:
  Homomorphism(AlphabetPtr source, Target unit) : source_(std::move(source)), unit_(std::move(unit)) {
    images_.resize(source_->size());
  }

  Homomorphism& assign(Letter l, Target image) {
    images_.at(l) = std::move(image);
    return *this;
  }
  Homomorphism& assign(std::string_view name, Target image) { return assign(source_->at(name), std::move(image)); }

  const AlphabetPtr& source() const { return source_; }
  const Target& unit() const { return unit_; }
  const std::optional<Target>& image(Letter l) const { return images_.at(l); }

  Target apply_word(const Word& w) const {
    if (w.empty()) return unit_;
    Target acc = lookup(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) acc = acc * lookup(w[i]);
    return acc;
  }

  Target apply(const AlgebraElement& x) const {
    if (x.alphabet() && !(*x.alphabet() == *source_)) {
      throw AlphabetMismatch("homomorphism source alphabet differs from element alphabet");
    }
    Target acc = Scalar(0) * unit_;
    for (const auto& [w, c] : x.terms()) acc = acc + c * apply_word(w);
    return acc;
  }

 private:
  const Target& lookup(Letter l) const {
    const auto& img = images_.at(l);
    if (!img) throw UnassignedLetter(source_->name(l));
    return *img;
  }

  AlphabetPtr source_;
  Target unit_;
  std::vector<std::optional<Target>> images_;
};

template <class Target>
Target apply_hom(const Homomorphism<Target>& h, const AlgebraElement& x) {
  return h.apply(x);
}

/// Checks that each declared inverse pair maps to mutually inverse matrices.
bool inverse_images_consistent(const Homomorphism<ScalarMatrix>& h);

// Text grammar shared by Scalars and AlgebraElements:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | variable | letter | '(' expr ')'
//           | '[' expr ',' expr ']' ('_' atom)?
// Variables: q v v2..v6 t k+ k- e+ e-. Division only by q-only scalars.
// `[x,y]` is the commutator, `[x,y]_s` the deformed commutator with s.

Scalar parse_scalar(std::string_view text);
AlgebraElement parse_element(std::string_view text, const AlphabetPtr& alphabet);

}  // namespace qons
