#include "qons/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "qons/errors.hpp"

namespace qons {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "q", "v", "v2", "v3", "v4", "v5", "v6", "t", "k+", "k-", "e+", "e-"};

constexpr std::size_t outer(Var v) { return static_cast<std::size_t>(v) - 1; }

Monomial add(const Monomial& a, const Monomial& b) {
  Monomial m{};
  for (int i = 0; i < kNumOuterVars; ++i) m[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return m;
}

bool is_unit_monomial(const Monomial& m) {
  for (int i = 0; i < kNumOuterVars; ++i) {
    if (m[i] != 0 && !is_laurent_var(static_cast<Var>(i + 1))) return false;
  }
  return true;
}

mpq_class pow(const mpq_class& x, int e, Var v) {
  if (e < 0 && x == 0) {
    throw PoleAtPoint(std::string(var_name(v)) + "=0 with negative exponent");
  }
  mpq_class base = e >= 0 ? x : mpq_class(1) / x;
  mpq_class r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> parse_var_name(std::string_view name) {
  for (std::size_t i = 0; i < kVarNames.size(); ++i) {
    if (kVarNames[i] == name) return static_cast<Var>(i);
  }
  if (name == "v1") return Var::v1;
  return std::nullopt;
}

bool is_laurent_var(Var v) { return static_cast<int>(v) <= static_cast<int>(Var::t); }

Var spectral_var(int index) {
  if (index < 1 || index > 6) throw std::out_of_range("spectral variable index");
  return static_cast<Var>(index);
}

EvaluationPoint& EvaluationPoint::set(Var v, const mpq_class& value) {
  auto& slot = values_[index(v)];
  slot = value;
  slot->canonicalize();
  return *this;
}

const mpq_class& EvaluationPoint::get(Var v) const {
  const auto& slot = values_[index(v)];
  if (!slot) throw UnboundVariable(std::string(var_name(v)));
  return *slot;
}

bool EvaluationPoint::empty() const {
  return std::none_of(values_.begin(), values_.end(), [](const auto& x) { return x.has_value(); });
}

std::string EvaluationPoint::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kNumVars; ++i) {
    if (!values_[static_cast<std::size_t>(i)]) continue;
    if (!first) os << ", ";
    first = false;
    os << var_name(static_cast<Var>(i)) << "=" << values_[static_cast<std::size_t>(i)]->get_str();
  }
  return os.str();
}

Scalar::Scalar(long c) : Scalar(mpz_class(c)) {}

Scalar::Scalar(const mpz_class& c) {
  if (c != 0) num_.emplace(Monomial{}, QPoly(c));
}

Scalar::Scalar(const mpq_class& c) {
  if (c != 0) {
    num_.emplace(Monomial{}, QPoly(c.get_num()));
    den_ = QPoly(c.get_den());
  }
}

Scalar::Scalar(const QPoly& p) {
  if (!p.is_zero()) num_.emplace(Monomial{}, p);
}

Scalar::Scalar(Numerator numerator, QPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  normalize();
}

Scalar Scalar::q_power(int n) { return Scalar(QPoly::monomial(n)); }

Scalar Scalar::var(Var v, int exponent) {
  if (v == Var::q) return q_power(exponent);
  if (exponent < 0 && !is_laurent_var(v)) {
    throw DenominatorOutOfDomain(std::string(var_name(v)) + " cannot be inverted");
  }
  Scalar s;
  Monomial m{};
  m[outer(v)] = static_cast<std::int16_t>(exponent);
  s.num_.emplace(m, QPoly(1));
  return s;
}

bool Scalar::is_one() const {
  return den_.is_one() && num_.size() == 1 && num_.begin()->first == Monomial{} &&
         num_.begin()->second.is_one();
}

bool Scalar::is_q_only() const {
  return num_.empty() || (num_.size() == 1 && num_.begin()->first == Monomial{});
}

bool Scalar::is_rational() const {
  return is_zero() || (is_q_only() && num_.begin()->second.is_constant() && den_.is_constant());
}

mpq_class Scalar::to_rational() const {
  if (!is_rational()) throw std::logic_error("Scalar is not a rational constant: " + to_string());
  if (is_zero()) return 0;
  mpq_class r(num_.begin()->second.coeffs()[0], den_.coeffs()[0]);
  r.canonicalize();
  return r;
}

std::size_t Scalar::term_count() const {
  std::size_t n = 0;
  for (const auto& [m, c] : num_) n += c.coeffs().size();
  return n;
}

int Scalar::total_degree() const {
  int best = 0;
  for (const auto& [m, c] : num_) {
    int d = std::max(std::abs(c.low()), std::abs(c.high()));
    for (auto e : m) d += std::abs(e);
    best = std::max(best, d);
  }
  return best;
}

std::array<bool, kNumVars> Scalar::support() const {
  std::array<bool, kNumVars> s{};
  s[0] = !den_.is_constant();
  for (const auto& [m, c] : num_) {
    if (!(c.is_constant())) s[0] = true;
    for (int i = 0; i < kNumOuterVars; ++i) {
      if (m[i] != 0) s[static_cast<std::size_t>(i + 1)] = true;
    }
  }
  return s;
}

void Scalar::normalize() {
  for (auto it = num_.begin(); it != num_.end();) {
    it = it->second.is_zero() ? num_.erase(it) : std::next(it);
  }
  if (num_.empty()) {
    den_ = QPoly(1);
    return;
  }
  if (den_.low() != 0) {
    const int s = den_.low();
    den_ = den_.shifted(-s);
    for (auto& [m, c] : num_) c = c.shifted(-s);
  }
  if (den_.span() > 0) {
    QPoly g = den_;
    for (const auto& [m, c] : num_) {
      g = poly_gcd(g, c);
      if (g.span() == 0) break;
    }
    if (g.span() > 0) {
      den_ = den_.divexact(g);
      for (auto& [m, c] : num_) c = c.divexact(g);
    }
  }
  mpz_class content = den_.content();
  for (const auto& [m, c] : num_) {
    if (content == 1) break;
    mpz_class cc = c.content();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), cc.get_mpz_t());
  }
  if (den_.leading() < 0) content = -content;
  if (content != 1) {
    den_ = den_.divided_by(content);
    for (auto& [m, c] : num_) c = c.divided_by(content);
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& [m, c] : s.num_) c = -c;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    for (const auto& [m, c] : o.num_) num_[m] += c;
    normalize();
    return *this;
  }
  const QPoly g = poly_gcd(den_, o.den_);
  const QPoly mine = o.den_.divexact(g);    // multiply our numerator by this
  const QPoly theirs = den_.divexact(g);    // multiply theirs by this
  for (auto& [m, c] : num_) c *= mine;
  for (const auto& [m, c] : o.num_) num_[m] += c * theirs;
  den_ *= mine;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Scalar r;
  for (const auto& [ma, ca] : a.num_) {
    for (const auto& [mb, cb] : b.num_) r.num_[add(ma, mb)] += ca * cb;
  }
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division of " + to_string() + " by zero");
  if (!o.is_q_only()) {
    throw DenominatorOutOfDomain("divisor " + o.to_string() + " involves variables other than q");
  }
  if (is_zero()) return *this;
  const QPoly onum = o.num_.begin()->second;
  const QPoly oden = o.den_;
  for (auto& [m, c] : num_) c *= oden;
  den_ *= onum;
  normalize();
  return *this;
}

std::optional<Scalar> Scalar::unit_inverse() const {
  if (is_zero()) return std::nullopt;
  if (is_q_only()) return Scalar(1) / *this;
  if (num_.size() != 1 || !is_unit_monomial(num_.begin()->first)) return std::nullopt;
  Monomial inv{};
  for (int i = 0; i < kNumOuterVars; ++i) inv[i] = static_cast<std::int16_t>(-num_.begin()->first[i]);
  Numerator n;
  n.emplace(inv, QPoly(1));
  return Scalar(std::move(n), QPoly(1)) * (Scalar(den_) / Scalar(num_.begin()->second));
}

mpq_class Scalar::evaluate(const EvaluationPoint& p) const {
  if (is_zero()) return 0;
  const auto used = support();
  for (int i = 0; i < kNumVars; ++i) {
    if (used[static_cast<std::size_t>(i)] && !p.has(static_cast<Var>(i))) {
      throw UnboundVariable(std::string(var_name(static_cast<Var>(i))) + " in " + to_string());
    }
  }
  const mpq_class qv = used[0] ? p.get(Var::q) : mpq_class(1);
  const mpq_class d = den_.evaluate(qv);
  if (d == 0) throw PoleAtPoint(to_string() + " at " + p.to_string());
  mpq_class acc = 0;
  for (const auto& [m, c] : num_) {
    mpq_class term = c.evaluate(qv);
    for (int i = 0; i < kNumOuterVars; ++i) {
      if (m[i] == 0) continue;
      const Var v = static_cast<Var>(i + 1);
      term *= pow(p.get(v), m[i], v);
    }
    acc += term;
  }
  return acc / d;
}

Scalar Scalar::specialize(const EvaluationPoint& p) const {
  if (is_zero()) return {};
  const bool bind_q = p.has(Var::q);
  Scalar acc;
  for (const auto& [m, c] : num_) {
    Monomial rest{};
    mpq_class factor = 1;
    for (int i = 0; i < kNumOuterVars; ++i) {
      const Var v = static_cast<Var>(i + 1);
      if (m[i] != 0 && p.has(v)) {
        factor *= pow(p.get(v), m[i], v);
      } else {
        rest[i] = m[i];
      }
    }
    Numerator n;
    if (bind_q) {
      n.emplace(rest, QPoly(1));
      factor *= c.evaluate(p.get(Var::q));
    } else {
      n.emplace(rest, c);
    }
    acc += Scalar(std::move(n), QPoly(1)) * Scalar(factor);
  }
  if (bind_q) {
    const mpq_class d = den_.evaluate(p.get(Var::q));
    if (d == 0) throw PoleAtPoint(to_string() + " at " + p.to_string());
    return acc * Scalar(mpq_class(1) / d);
  }
  return acc / Scalar(den_);
}

namespace {

struct FlatTerm {
  std::array<int, kNumVars> exps;
  mpz_class coeff;
};

std::string render_numerator(const Scalar::Numerator& num, bool& single_term) {
  std::vector<FlatTerm> terms;
  for (const auto& [m, c] : num) {
    for (int e = c.low(); e <= c.high(); ++e) {
      mpz_class k = c.coeff(e);
      if (k == 0) continue;
      FlatTerm t;
      t.exps[0] = e;
      for (int i = 0; i < kNumOuterVars; ++i) t.exps[static_cast<std::size_t>(i + 1)] = m[i];
      t.coeff = k;
      terms.push_back(std::move(t));
    }
  }
  // Lexicographic on (q, v, ..., e-) with exponents ascending.
  std::sort(terms.begin(), terms.end(),
            [](const FlatTerm& a, const FlatTerm& b) { return a.exps < b.exps; });
  single_term = terms.size() == 1;
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    const mpz_class a = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) os << "-";
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1) {
      os << a.get_str();
      wrote = true;
    }
    for (int i = 0; i < kNumVars; ++i) {
      const int e = t.exps[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << var_name(static_cast<Var>(i));
      if (e != 1) os << "^" << e;
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  bool single = false;
  std::string n = render_numerator(num_, single);
  if (den_.is_one()) return n;
  return "(" + n + ")/(" + den_.to_string() + ")";
}

Scalar exact_quotient(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("exact_quotient by zero");
  if (a.is_zero()) return {};
  if (b.is_q_only()) return a / b;

  // Per-variable exponent bounds any quotient term must satisfy.
  Monomial lo{}, hi{};
  auto bounds = [](const Scalar& s, Monomial& mn, Monomial& mx) {
    bool first = true;
    for (const auto& [m, c] : s.numerator()) {
      for (int i = 0; i < kNumOuterVars; ++i) {
        if (first || m[i] < mn[i]) mn[i] = m[i];
        if (first || m[i] > mx[i]) mx[i] = m[i];
      }
      first = false;
    }
  };
  Monomial alo{}, ahi{}, blo{}, bhi{};
  bounds(a, alo, ahi);
  bounds(b, blo, bhi);
  for (int i = 0; i < kNumOuterVars; ++i) {
    lo[i] = static_cast<std::int16_t>(alo[i] - blo[i]);
    hi[i] = static_cast<std::int16_t>(ahi[i] - bhi[i]);
    if (!is_laurent_var(static_cast<Var>(i + 1)) && lo[i] < 0) lo[i] = 0;
    if (lo[i] > hi[i]) throw NotDivisible(a.to_string() + " by " + b.to_string());
  }

  // Pseudo-division on numerators: a/b = (A db) / (B da). Each step scales
  // the remainder by lead(B)/g instead of dividing, so no rational function
  // normalization happens until the end. Division runs from whichever end of
  // B (lex-largest or lex-smallest term) has the cheaper coefficient; inside
  // the exponent box both are valid term orders.
  using Num = Scalar::Numerator;
  auto scale = [](Num& n, const QPoly& f) {
    for (auto& [m, c] : n) c = c * f;
  };
  auto cost = [](const QPoly& c) {
    const bool unit = c.is_monomial() && (c.leading() == 1 || c.leading() == -1);
    return std::pair<int, std::size_t>{unit ? 0 : c.span() + 1, mpz_sizeinbase(c.content().get_mpz_t(), 2)};
  };
  const Num& bn = b.numerator();
  const bool from_top = cost(bn.rbegin()->second) <= cost(bn.begin()->second);
  const auto& [bm, bc] = from_top ? *bn.rbegin() : *bn.begin();
  const bool bc_unit = cost(bc).first == 0;
  Num rem = a.numerator();
  scale(rem, b.denominator());
  Num quot;
  QPoly mult(1);
  while (!rem.empty()) {
    const auto [rm, rc] = from_top ? *rem.rbegin() : *rem.begin();
    Monomial qm{};
    for (int i = 0; i < kNumOuterVars; ++i) {
      qm[i] = static_cast<std::int16_t>(rm[i] - bm[i]);
      if (qm[i] < lo[i] || qm[i] > hi[i]) throw NotDivisible(a.to_string() + " by " + b.to_string());
    }
    QPoly t;
    if (bc_unit) {
      // bc = +-q^j divides anything.
      t = rc.shifted(-bc.low());
      if (bc.leading() < 0) t = -t;
    } else {
      const QPoly g = poly_gcd(bc, rc);
      const QPoly f = bc.divexact(g);
      t = rc.divexact(g);
      if (!f.is_one()) {
        scale(rem, f);
        scale(quot, f);
        mult = mult * f;
      }
    }
    quot[qm] = quot[qm] + t;
    for (const auto& [m, c] : bn) {
      Monomial mm{};
      for (int i = 0; i < kNumOuterVars; ++i) mm[i] = static_cast<std::int16_t>(m[i] + qm[i]);
      QPoly& slot = rem[mm];
      slot = slot - t * c;
      if (slot.is_zero()) rem.erase(mm);
    }
  }
  return Scalar(std::move(quot), mult * a.denominator());
}

Scalar q_integer(int n) {
  if (n == 0) return {};
  const int m = std::abs(n);
  // q^{m-1} + q^{m-3} + ... + q^{-(m-1)}
  std::vector<mpz_class> dense(static_cast<std::size_t>(2 * m - 1), 0);
  for (int k = 0; k < m; ++k) dense[static_cast<std::size_t>(2 * k)] = 1;
  QPoly p = QPoly::from_coeffs(-(m - 1), std::move(dense));
  return n > 0 ? Scalar(p) : -Scalar(p);
}

}  // namespace qons
