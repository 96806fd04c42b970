#include "qons/ncalg.hpp"

#include <set>
#include <sstream>

namespace qons {

Alphabet::Alphabet(std::vector<std::string> names,
                   std::vector<std::pair<std::string, std::string>> inverse_pairs)
    : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidRule("empty generator name");
    if (parse_var_name(n)) throw InvalidRule("generator name '" + n + "' clashes with a scalar variable");
    if (!seen.insert(n).second) throw InvalidRule("duplicate generator name '" + n + "'");
  }
  inverse_.assign(names_.size(), std::nullopt);
  for (const auto& [a, b] : inverse_pairs) {
    const Letter la = at(a);
    const Letter lb = at(b);
    if (la == lb || inverse_[la] || inverse_[lb]) throw InvalidRule("bad inverse pair " + a + "/" + b);
    inverse_[la] = lb;
    inverse_[lb] = la;
    pairs_.emplace_back(la, lb);
  }
}

std::optional<Letter> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Letter>(i);
  }
  return std::nullopt;
}

Letter Alphabet::at(std::string_view name) const {
  auto l = find(name);
  if (!l) throw UnassignedLetter("unknown generator '" + std::string(name) + "'");
  return *l;
}

std::optional<Letter> Alphabet::inverse(Letter l) const { return inverse_.at(l); }

std::string Alphabet::render(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += names_.at(w[i]);
  }
  return s;
}

AlphabetPtr make_alphabet(std::vector<std::string> names,
                          std::vector<std::pair<std::string, std::string>> inverse_pairs) {
  return std::make_shared<const Alphabet>(std::move(names), std::move(inverse_pairs));
}

AlgebraElement::AlgebraElement(AlphabetPtr alphabet, const Scalar& c) : alphabet_(std::move(alphabet)) {
  if (!c.is_zero()) terms_.emplace(Word{}, c);
}

AlgebraElement AlgebraElement::letter(AlphabetPtr alphabet, Letter l) {
  return word(std::move(alphabet), Word{l});
}

AlgebraElement AlgebraElement::letter(AlphabetPtr alphabet, std::string_view name) {
  const Letter l = alphabet->at(name);
  return letter(std::move(alphabet), l);
}

AlgebraElement AlgebraElement::word(AlphabetPtr alphabet, Word w, const Scalar& c) {
  AlgebraElement x(std::move(alphabet));
  x.add_term(w, c);
  return x;
}

std::optional<Scalar> AlgebraElement::as_scalar() const {
  if (terms_.empty()) return Scalar(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

Scalar AlgebraElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::size_t AlgebraElement::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void AlgebraElement::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_compatible(const AlgebraElement& o) const {
  if (alphabet_ && o.alphabet_ && alphabet_ != o.alphabet_ && !(*alphabet_ == *o.alphabet_)) {
    throw AlphabetMismatch("elements over different alphabets");
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  check_compatible(o);
  if (!alphabet_) alphabet_ = o.alphabet_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += -o; }

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_compatible(b);
  AlgebraElement r(a.alphabet_ ? a.alphabet_ : b.alphabet_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  }
  return r;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
  AlgebraElement r(a.alphabet_);
  if (s.is_zero()) return r;
  for (const auto& [w, c] : a.terms_) r.add_term(w, s * c);
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.alphabet_ && b.alphabet_ && !(*a.alphabet_ == *b.alphabet_)) return false;
  return a.terms_ == b.terms_;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const std::string word = alphabet_ ? alphabet_->render(w) : "1";
    if (c.is_one()) {
      os << word;
    } else if (w.empty()) {
      os << "(" << c.to_string() << ")";
    } else {
      os << "(" << c.to_string() << ")*" << word;
    }
  }
  return os.str();
}

bool inverse_images_consistent(const Homomorphism<ScalarMatrix>& h) {
  for (const auto& [a, b] : h.source()->inverse_pairs()) {
    const auto& ia = h.image(a);
    const auto& ib = h.image(b);
    if (!ia || !ib) return false;
    const auto id = ScalarMatrix::identity(ia->rows());
    if (!(*ia * *ib == id) || !(*ib * *ia == id)) return false;
  }
  return true;
}

}  // namespace qons
