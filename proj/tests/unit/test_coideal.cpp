#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qons/coideal.hpp"
#include "qons/onsager.hpp"
#include "support/random.hpp"

using namespace qons;

namespace {

Scalar q(int n = 1) { return Scalar::q_power(n); }
Scalar var(Var v, int e = 1) { return Scalar::var(v, e); }

const PresentationPtr& affine() {
  static const PresentationPtr p = bundled_presentation("uq_sl2hat");
  return p;
}

Word word(std::initializer_list<const char*> names) {
  Word w;
  for (const char* n : names) w.push_back(affine()->alphabet->at(n));
  return w;
}

}  // namespace

TEST_CASE("qoa_image examples") {
  const auto w = qoa_image();
  CHECK(w.W0.terms().size() == 3);
  CHECK(w.W0.coefficient(word({"e1"})) == var(Var::kp));
  CHECK(w.W0.coefficient(word({"f1", "K1"})) == var(Var::km) * q(-1));
  CHECK(w.W0.coefficient(word({"K1"})) == var(Var::ep));
  CHECK(w.W1.coefficient(word({"e0"})) == var(Var::km));
  CHECK(w.W1.coefficient(word({"f0", "K0"})) == var(Var::kp) * q(-1));
  CHECK(w.W1.coefficient(word({"K0"})) == var(Var::em));
  CHECK(w.rho == (q() + q(-1)) * (q() + q(-1)) * var(Var::kp) * var(Var::km));

  QOAParams p;
  p.kp = p.km = Scalar(0);
  const auto z = qoa_image(p);
  CHECK(z.W0 == var(Var::ep) * AlgebraElement::word(affine()->alphabet, word({"K1"})));
  CHECK(z.W1 == var(Var::em) * AlgebraElement::word(affine()->alphabet, word({"K0"})));
  CHECK(z.rho.is_zero());

  // Spin-1/2 matrices worked out by hand: W0 = [[e+ q, k+], [k-, e+/q]],
  // W1 = [[e-/q, k+/v], [k- v, e- q]].
  const auto m = evaluation_module(1);
  const ScalarMatrix w0 = m.represent(w.W0), w1 = m.represent(w.W1);
  CHECK(w0(0, 0) == var(Var::ep) * q());
  CHECK(w0(0, 1) == var(Var::kp));
  CHECK(w0(1, 0) == var(Var::km));
  CHECK(w0(1, 1) == var(Var::ep) * q(-1));
  CHECK(w1(0, 0) == var(Var::em) * q(-1));
  CHECK(w1(0, 1) == var(Var::kp) * var(Var::v1, -1));
  CHECK(w1(1, 0) == var(Var::km) * var(Var::v1));
  CHECK(w1(1, 1) == var(Var::em) * q());
}

TEST_CASE("augmented_image examples") {
  const auto a = augmented_image();
  CHECK(a.K0 == var(Var::ep) * AlgebraElement::word(affine()->alphabet, word({"K1"})));
  CHECK(a.Z1.coefficient(word({"e0", "K1"})) == (q(2) - q(-2)) * var(Var::ep) * q(-1));
  CHECK(a.Z1.coefficient(word({"f1", "K1", "K0"})) == (q(2) - q(-2)) * var(Var::em));
  CHECK(a.Zt1.coefficient(word({"e1", "K0"})) == (q(2) - q(-2)) * var(Var::em) * q(-1));
  CHECK(a.Zt1.coefficient(word({"f0", "K1", "K0"})) == (q(2) - q(-2)) * var(Var::ep));

  QOAParams p;
  p.ep = Scalar(0);
  const auto z = augmented_image(p);
  CHECK(z.K0.is_zero());
  CHECK(z.Z1 == (q(2) - q(-2)) * var(Var::em) * AlgebraElement::word(affine()->alphabet, word({"f1", "K1", "K0"})));
  CHECK(z.Zt1.terms().size() == 1);

  const auto m = evaluation_module(1);
  CHECK(m.represent(a.K0 * a.K1) == (var(Var::ep) * var(Var::em)) * ScalarMatrix::identity(2));
}

TEST_CASE("q-DG and augmented relations on evaluation modules") {
  const auto w = qoa_image();
  const auto a = augmented_image();
  for (int n : {1, 2}) {
    const auto m = evaluation_module(n);
    const auto c = check_qdg(m.represent(w.W0), m.represent(w.W1), w.rho);
    CHECK(c.verdict == Verdict::Verified);
    const auto g = check_augmented(m.represent(a.K0), m.represent(a.K1), m.represent(a.Z1), m.represent(a.Zt1));
    CHECK(g.verdict == Verdict::Verified);
    // Negative controls.
    CHECK(check_qdg(m.represent(w.W0), m.represent(w.W1), Scalar(1)).verdict == Verdict::Failed);
    CHECK(check_augmented(m.represent(a.K0), m.represent(a.K1), m.represent(a.Z1), m.represent(a.Zt1), 4).verdict ==
          Verdict::Failed);
  }
}

TEST_CASE("checker examples on small matrices") {
  ScalarMatrix E(2, 2), F(2, 2), K(2, 2);
  E(0, 1) = Scalar(1);
  F(1, 0) = Scalar(1);
  K(0, 0) = q();
  K(1, 1) = q(-1);
  CHECK(check_qdg(E, F, Scalar(0)).verdict == Verdict::Verified);
  CHECK(check_qdg(ScalarMatrix(2, 2), ScalarMatrix(2, 2), var(Var::kp)).verdict == Verdict::Verified);
  const auto id = ScalarMatrix::identity(2);
  CHECK(check_augmented(id, id, ScalarMatrix(2, 2), ScalarMatrix(2, 2)).verdict == Verdict::Verified);
  const auto bad = check_augmented(K, K, E, F);
  CHECK(bad.verdict == Verdict::Failed);
  CHECK_FALSE(bad.residuals[1].entries.empty());
  CHECK(bad.residuals[0].entries.empty());
  CHECK_THROWS_AS(check_qdg(E, ScalarMatrix(3, 3), Scalar(0)), CarrierMismatch);
}

TEST_CASE("q-DG holds in the presented algebra via rewriting") {
  // The rewrite carrier for the abstract qoa presentation: generic W0, W1.
  const auto p = bundled_presentation("qoa");
  const auto w0 = AlgebraElement::letter(p->alphabet, "W0"), w1 = AlgebraElement::letter(p->alphabet, "W1");
  const Scalar rho = (q() + q(-1)) * (q() + q(-1)) * var(Var::kp) * var(Var::km);
  CHECK(check_qdg(w0, w1, rho, p->rules).verdict == Verdict::Verified);
  const auto wrong = check_qdg(w0, w1, Scalar(1), p->rules);
  CHECK(wrong.verdict == Verdict::Inconclusive);
}

TEST_CASE("specialization consistency") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 20; ++i) {
    const auto full = testing::random_point(rng);
    EvaluationPoint pt;
    for (Var v : {Var::kp, Var::km, Var::ep, Var::em}) pt.set(v, full.get(v));
    const QOAParams sp = QOAParams{}.specialized(pt);
    const auto a = specialize(qoa_image(), pt);
    const auto b = qoa_image(sp);
    CHECK(a.W0 == b.W0);
    CHECK(a.W1 == b.W1);
    CHECK(a.rho == b.rho);
    const auto c = specialize(augmented_image(), pt);
    const auto d = augmented_image(sp);
    CHECK(c.Z1 == d.Z1);
    CHECK(c.Zt1 == d.Zt1);
    CHECK(c.K0 == d.K0);
  }
}

TEST_CASE("word_span") {
  const auto w = qoa_image();
  const auto s = word_span({w.W0, w.W1}, 3);
  CHECK(s.size() == 15);
  CHECK(s[0] == AlgebraElement(affine()->alphabet, Scalar(1)));
  CHECK(s[4] == w.W0 * w.W1);
}

TEST_CASE("coideal membership reports") {
  const auto c = default_coproduct(affine());
  const auto m1 = evaluation_module(1);
  const auto m2 = evaluation_module(1, var(Var::v2));
  const AlgebraElement one(affine()->alphabet, Scalar(1));

  // Unit only, against a span containing the unit.
  const auto r1 = check_coideal_on_modules({{"1", one}}, {one}, c, m1, m2);
  CHECK(r1.holds(CoidealSide::left));
  CHECK(r1.holds(CoidealSide::right));
  CHECK(r1.span_left == 1);

  // The Chevalley words of degree <= 2 span all of M_2: vacuous.
  std::vector<AlgebraElement> gens;
  for (const char* n : {"e1", "f1", "K1"}) gens.push_back(AlgebraElement::letter(affine()->alphabet, n));
  const auto full = word_span(gens, 2);
  const auto r2 = check_coideal_on_modules({{"e1", gens[0]}}, full, c, m1, m2);
  CHECK(r2.vacuous(CoidealSide::left));
  CHECK(r2.holds(CoidealSide::left));

  // q-Onsager generators on spin-1 and spin-2 modules, at a rational point.
  const auto w = qoa_image();
  const auto span = word_span({w.W0, w.W1}, 3);
  EvaluationPoint pt;
  pt.set(Var::q, mpq_class(3, 2)).set(Var::v1, mpq_class(5, 7)).set(Var::v2, mpq_class(-2, 3));
  pt.set(Var::kp, mpq_class(2)).set(Var::km, mpq_class(-1, 3)).set(Var::ep, mpq_class(1, 5)).set(Var::em, 3);
  const auto rep = check_coideal_on_modules({{"W0", w.W0}, {"W1", w.W1}}, span, c, evaluation_module(2), m2, pt);
  CHECK(rep.ambient_left == 9);
  CHECK(rep.ambient_right == 4);
  CHECK(rep.holds(CoidealSide::right));
  const auto j = rep.to_json();
  CHECK(j["right"]["holds"] == true);
  CHECK(j["specialization"] != "symbolic");

  // Symbolic on two spin-1/2 factors.
  const auto sym = check_coideal_on_modules({{"W0", w.W0}, {"W1", w.W1}}, span, c, m1, m2);
  CHECK(sym.holds(CoidealSide::right));
  CHECK(sym.specialization == "symbolic");

  CHECK_THROWS_AS(check_coideal_on_modules({}, {}, c, irrep(1), m2), PresentationMismatch);
}

TEST_CASE("q = 1 degeneration") {
  EvaluationPoint rest;
  rest.set(Var::v1, mpq_class(3, 2));
  for (int n : {1, 2}) {
    const auto cert = check_q1_degeneration(evaluation_module(n), {1, mpq_class(1001, 1000), mpq_class(999, 1000)}, rest);
    CHECK(cert.verdict == Verdict::Verified);
    CHECK(cert.bindings.at("poles_skipped") == "0");
  }
  // At q = 1 and v = t^-1 the images are half the loop generators.
  const auto m = evaluation_module(1, var(Var::t, -1));
  const auto w = qoa_image(QOAParams{Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
  EvaluationPoint q1;
  q1.set(Var::q, 1);
  CHECK(specialize(Scalar(2) * m.represent(w.W0), q1) == loop_matrix(loop_A(0)));
  CHECK(specialize(Scalar(2) * m.represent(w.W1), q1) == loop_matrix(loop_A(1)));
}
