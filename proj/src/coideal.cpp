#include "qons/coideal.hpp"

#include "qons/onsager.hpp"

namespace qons {

namespace {

const AlphabetPtr& affine_alphabet() { return bundled_presentation("uq_sl2hat")->alphabet; }

AlgebraElement L(std::string_view name) { return AlgebraElement::letter(affine_alphabet(), name); }

Scalar q(int n = 1) { return Scalar::q_power(n); }

// Columns: vec of each spanning matrix; then extra columns appended.
template <class T>
Matrix<T> span_columns(const std::vector<Matrix<T>>& span, std::size_t d) {
  Matrix<T> s(d * d, span.size());
  for (std::size_t k = 0; k < span.size(); ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) s(i * d + j, k) = span[k](i, j);
    }
  }
  return s;
}

template <class T>
Matrix<T> append_columns(const Matrix<T>& s, const std::vector<std::vector<T>>& extra) {
  Matrix<T> out(s.rows(), s.cols() + extra.size());
  for (std::size_t i = 0; i < s.rows(); ++i) {
    for (std::size_t j = 0; j < s.cols(); ++j) out(i, j) = s(i, j);
    for (std::size_t k = 0; k < extra.size(); ++k) out(i, s.cols() + k) = extra[k][i];
  }
  return out;
}

// Blocks of X on the free factor, flattened over the constrained factor.
template <class T>
std::vector<std::vector<T>> blocks(const Matrix<T>& x, std::size_t d1, std::size_t d2, CoidealSide side) {
  std::vector<std::vector<T>> out;
  if (side == CoidealSide::left) {
    for (std::size_t i = 0; i < d2; ++i) {
      for (std::size_t j = 0; j < d2; ++j) {
        std::vector<T> v(d1 * d1, T(0));
        for (std::size_t a = 0; a < d1; ++a) {
          for (std::size_t b = 0; b < d1; ++b) v[a * d1 + b] = x(a * d2 + i, b * d2 + j);
        }
        out.push_back(std::move(v));
      }
    }
  } else {
    for (std::size_t a = 0; a < d1; ++a) {
      for (std::size_t b = 0; b < d1; ++b) {
        std::vector<T> v(d2 * d2, T(0));
        for (std::size_t i = 0; i < d2; ++i) {
          for (std::size_t j = 0; j < d2; ++j) v[i * d2 + j] = x(a * d2 + i, b * d2 + j);
        }
        out.push_back(std::move(v));
      }
    }
  }
  // Zero blocks never change a rank.
  std::erase_if(out, [](const std::vector<T>& v) {
    for (const auto& e : v) {
      if (!(e == T(0))) return false;
    }
    return true;
  });
  return out;
}

template <class T, class RankFn>
void fill_report(CoidealReport& rep, const std::vector<std::pair<std::string, Matrix<T>>>& images,
                 const std::vector<Matrix<T>>& span1, const std::vector<Matrix<T>>& span2, std::size_t d1,
                 std::size_t d2, RankFn rank_of) {
  const Matrix<T> s1 = span_columns(span1, d1);
  const Matrix<T> s2 = span_columns(span2, d2);
  rep.span_left = rank_of(s1);
  rep.span_right = rank_of(s2);
  rep.ambient_left = d1 * d1;
  rep.ambient_right = d2 * d2;
  for (const auto& [name, x] : images) {
    for (CoidealSide side : {CoidealSide::left, CoidealSide::right}) {
      const auto& s = side == CoidealSide::left ? s1 : s2;
      const std::size_t base = side == CoidealSide::left ? rep.span_left : rep.span_right;
      const auto extra = blocks(x, d1, d2, side);
      const bool member = extra.empty() || rank_of(append_columns(s, extra)) == base;
      rep.members.push_back({name, side, member});
    }
  }
}

}  // namespace

QOAParams QOAParams::specialized(const EvaluationPoint& p) const {
  return {kp.specialize(p), km.specialize(p), ep.specialize(p), em.specialize(p)};
}

Scalar QOAParams::rho() const {
  const Scalar s = q() + q(-1);
  return s * s * kp * km;
}

QOnsagerPair qoa_image(const QOAParams& p) {
  return {
      p.kp * L("e1") + p.km * q(-1) * (L("f1") * L("K1")) + p.ep * L("K1"),
      p.km * L("e0") + p.kp * q(-1) * (L("f0") * L("K0")) + p.em * L("K0"),
      p.rho(),
  };
}

AugmentedQuadruple augmented_image(const QOAParams& p) {
  const Scalar c = q(2) - q(-2);
  return {
      p.ep * L("K1"),
      p.em * L("K0"),
      c * (p.ep * q(-1) * (L("e0") * L("K1")) + p.em * (L("f1") * L("K1") * L("K0"))),
      c * (p.em * q(-1) * (L("e1") * L("K0")) + p.ep * (L("f0") * L("K1") * L("K0"))),
  };
}

AlgebraElement specialize(const AlgebraElement& x, const EvaluationPoint& p) {
  AlgebraElement out(x.alphabet());
  for (const auto& [w, c] : x.terms()) out.add_term(w, c.specialize(p));
  return out;
}

QOnsagerPair specialize(const QOnsagerPair& x, const EvaluationPoint& p) {
  return {specialize(x.W0, p), specialize(x.W1, p), x.rho.specialize(p)};
}

AugmentedQuadruple specialize(const AugmentedQuadruple& x, const EvaluationPoint& p) {
  return {specialize(x.K0, p), specialize(x.K1, p), specialize(x.Z1, p), specialize(x.Zt1, p)};
}

std::vector<AlgebraElement> word_span(const std::vector<AlgebraElement>& gens, int degree) {
  std::vector<AlgebraElement> out;
  if (gens.empty()) return out;
  std::vector<AlgebraElement> layer{AlgebraElement(gens.front().alphabet(), Scalar(1))};
  out = layer;
  for (int d = 1; d <= degree; ++d) {
    std::vector<AlgebraElement> next;
    for (const auto& w : layer) {
      for (const auto& g : gens) next.push_back(w * g);
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

const char* to_string(CoidealSide s) { return s == CoidealSide::left ? "left" : "right"; }

bool CoidealReport::holds(CoidealSide s) const {
  for (const auto& m : members) {
    if (m.side == s && !m.member) return false;
  }
  return true;
}

nlohmann::json CoidealReport::to_json() const {
  nlohmann::json j;
  j["convention"] = convention;
  j["modules"] = modules;
  j["specialization"] = specialization;
  for (CoidealSide s : {CoidealSide::left, CoidealSide::right}) {
    nlohmann::json side;
    side["span_dimension"] = s == CoidealSide::left ? span_left : span_right;
    side["ambient_dimension"] = s == CoidealSide::left ? ambient_left : ambient_right;
    side["vacuous"] = vacuous(s);
    side["holds"] = holds(s);
    nlohmann::json gens = nlohmann::json::object();
    for (const auto& m : members) {
      if (m.side == s) gens[m.generator] = m.member;
    }
    side["members"] = std::move(gens);
    j[to_string(s)] = std::move(side);
  }
  return j;
}

CoidealReport check_coideal_on_modules(const std::vector<std::pair<std::string, AlgebraElement>>& generators,
                                       const std::vector<AlgebraElement>& spanning_set,
                                       const CoproductConvention& c, const Module& m1, const Module& m2,
                                       const std::optional<EvaluationPoint>& point, std::size_t term_budget) {
  if (m1.presentation().name != c.presentation->name || m2.presentation().name != c.presentation->name) {
    throw PresentationMismatch("modules and coproduct convention use different presentations");
  }
  const std::size_t d1 = m1.dimension(), d2 = m2.dimension();
  Homomorphism<AlgebraElement> delta(c.presentation->alphabet, AlgebraElement(c.doubled, Scalar(1)));
  for (std::size_t i = 0; i < c.images.size(); ++i) delta.assign(static_cast<Letter>(i), c.images[i]);
  Homomorphism<ScalarMatrix> pair(c.doubled, ScalarMatrix::identity(d1 * d2));
  const auto n = c.presentation->alphabet->size();
  for (Letter l = 0; l < n; ++l) {
    pair.assign(l, kron(m1.action(l), ScalarMatrix::identity(d2)));
    pair.assign(static_cast<Letter>(l + n), kron(ScalarMatrix::identity(d1), m2.action(l)));
  }
  std::vector<std::pair<std::string, ScalarMatrix>> images;
  for (const auto& [name, x] : generators) images.emplace_back(name, pair.apply(delta.apply(x)));
  std::vector<ScalarMatrix> span1, span2;
  for (const auto& b : spanning_set) {
    span1.push_back(m1.represent(b));
    span2.push_back(m2.represent(b));
  }

  CoidealReport rep;
  rep.convention = c.name;
  rep.modules = m1.describe() + " (x) " + m2.describe();
  if (point) {
    rep.specialization = point->to_string();
    std::vector<std::pair<std::string, RationalMatrix>> rimages;
    for (const auto& [name, x] : images) rimages.emplace_back(name, evaluate(x, *point));
    std::vector<RationalMatrix> r1, r2;
    for (const auto& s : span1) r1.push_back(evaluate(s, *point));
    for (const auto& s : span2) r2.push_back(evaluate(s, *point));
    fill_report(rep, rimages, r1, r2, d1, d2, [](const RationalMatrix& m) { return rank(m); });
  } else {
    rep.specialization = "symbolic";
    fill_report(rep, images, span1, span2, d1, d2,
                [term_budget](const ScalarMatrix& m) { return rank(m, term_budget); });
  }
  return rep;
}

Certificate check_q1_degeneration(const Module& m, const std::vector<mpq_class>& q_points,
                                  const EvaluationPoint& rest) {
  const QOAParams params{Scalar(1), Scalar(1), Scalar(0), Scalar(0)};
  const QOnsagerPair w = qoa_image(params);
  const ScalarMatrix w0 = m.represent(w.W0), w1 = m.represent(w.W1);
  const auto residuals = qdg_residuals(w0, w1, w.rho);

  Certificate cert;
  cert.identity = "q-dolan-grady-at-q=1";
  cert.engine = Engine::matrix;
  cert.bindings["module"] = m.describe();
  cert.bindings["k+"] = "1";
  cert.bindings["k-"] = "1";
  cert.bindings["e+"] = "0";
  cert.bindings["e-"] = "0";
  std::string qs;
  for (const auto& x : q_points) qs += (qs.empty() ? "" : " ") + x.get_str();
  cert.bindings["q_points"] = qs;
  std::size_t skipped = 0;
  for (const auto& x : q_points) {
    EvaluationPoint p = rest;
    p.set(Var::q, x);
    const std::string at = "q=" + x.get_str() + ": ";
    for (const auto& [name, r] : residuals) {
      ResidualComponent rc{at + name, {}};
      for (std::size_t i = 0; i < r.rows(); ++i) {
        for (std::size_t j = 0; j < r.cols(); ++j) {
          try {
            const mpq_class v = r(i, j).evaluate(p);
            if (v != 0) {
              rc.entries.push_back("(" + std::to_string(i) + "," + std::to_string(j) + "): " + v.get_str());
            }
          } catch (const PoleAtPoint&) {
            ++skipped;
          }
        }
      }
      cert.residuals.push_back(std::move(rc));
    }
    if (x == 1) {
      const RationalMatrix a0 = mpq_class(2) * evaluate(w0, p);
      const RationalMatrix a1 = mpq_class(2) * evaluate(w1, p);
      const Certificate dg = check_dolan_grady(a0, a1, 16);
      for (auto rc : dg.residuals) {
        rc.relation = at + "A=2W: " + rc.relation;
        cert.residuals.push_back(std::move(rc));
      }
    }
  }
  cert.bindings["poles_skipped"] = std::to_string(skipped);
  cert.finalize();
  return cert;
}

}  // namespace qons
