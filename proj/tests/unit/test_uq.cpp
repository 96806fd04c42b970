#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qons/uq_sl2hat.hpp"
#include "support/random.hpp"

using namespace qons;

namespace {

Scalar q(int n = 1) { return Scalar::q_power(n); }

// Oracle irrep at a rational q, built only from rational arithmetic.
struct RatIrrep {
  RationalMatrix E, F, K;
};

mpq_class qint_at(int n, const mpq_class& x) {
  mpq_class s = 0, p = 1;
  for (int i = 0; i < n - 1; ++i) p /= x;  // x^{-(n-1)}
  for (int i = 0; i < n; ++i) {
    s += p;
    p *= x * x;
  }
  return s;
}

RatIrrep rat_irrep(int n, const mpq_class& x) {
  const auto d = static_cast<std::size_t>(n + 1);
  RatIrrep r{RationalMatrix(d, d), RationalMatrix(d, d), RationalMatrix(d, d)};
  for (int m = 0; m <= n; ++m) {
    mpq_class k = 1;
    for (int i = 0; i < std::abs(n - 2 * m); ++i) k = n - 2 * m > 0 ? mpq_class(k * x) : mpq_class(k / x);
    r.K(m, m) = k;
    if (m > 0) r.E(m - 1, m) = qint_at(n - m + 1, x);
    if (m < n) r.F(m + 1, m) = qint_at(m + 1, x);
  }
  return r;
}

EvaluationPoint at_q(const mpq_class& x) {
  EvaluationPoint p;
  p.set(Var::q, x);
  return p;
}

}  // namespace

TEST_CASE("irrep examples") {
  const auto m0 = irrep(0);
  CHECK(m0.dimension() == 1);
  CHECK(m0.action("E").is_zero());
  CHECK(m0.action("K") == ScalarMatrix::identity(1));

  const auto m1 = irrep_matrices(1);
  CHECK(m1.K(0, 0) == q());
  CHECK(m1.K(1, 1) == q(-1));
  CHECK(m1.E(0, 1) == Scalar(1));
  CHECK(m1.F(1, 0) == Scalar(1));
  const Scalar inv = Scalar(1) / (q() - q(-1));
  CHECK((bracket(m1.E, m1.F) - inv * (m1.K - m1.Kinv)).is_zero());

  CHECK_THROWS_AS(irrep(-1), NegativeSpinParameter);
  for (int n = 0; n <= 5; ++n) {
    const auto m = irrep(n);
    for (const auto& [name, r] : m.relation_residuals()) CHECK(r.is_zero());
    for (mpq_class x : {mpq_class(2), mpq_class(-5, 3)}) {
      const auto oracle = rat_irrep(n, x);
      CHECK(evaluate(m.action("E"), at_q(x)) == oracle.E);
      CHECK(evaluate(m.action("F"), at_q(x)) == oracle.F);
      CHECK(evaluate(m.action("K"), at_q(x)) == oracle.K);
    }
  }
}

TEST_CASE("evaluation module examples") {
  for (int n = 1; n <= 3; ++n) {
    const auto m = evaluation_module(n);
    CHECK(m.dimension() == static_cast<std::size_t>(n + 1));
    CHECK(m.action("K0") * m.action("K1") == ScalarMatrix::identity(m.dimension()));
    for (const auto& [name, r] : m.relation_residuals()) {
      CAPTURE(name);
      CHECK(r.is_zero());
    }
  }
  const auto m1 = evaluation_module(1);
  const auto serre = parse_element("[e1,[e1,[e1,e0]_q]_q^-1]", m1.presentation().alphabet);
  CHECK(m1.represent(serre).is_zero());
  const auto mspec = evaluation_module(1, Scalar(1));
  EvaluationPoint p;
  p.set(Var::q, 3);
  for (const auto& [name, r] : mspec.relation_residuals()) CHECK(evaluate(r, p).is_zero());
  CHECK_THROWS_AS(evaluation_module(1, Scalar(0)), NonInvertibleSpectralParameter);
  CHECK_THROWS_AS(evaluation_module(1, Scalar::var(Var::v1) + Scalar(1)), NonInvertibleSpectralParameter);
}

TEST_CASE("invalid modules are rejected") {
  const auto p = bundled_presentation("uq_sl2");
  auto m = irrep_matrices(1);
  m.E = Scalar(2) * m.E;
  CHECK_THROWS_AS(Module(p, std::vector<ScalarMatrix>{m.E, m.F, m.K, m.Kinv}, {}), InvalidModule);
  auto good = irrep_matrices(1);
  CHECK_THROWS_AS(Module(p, std::vector<ScalarMatrix>{good.E, good.F, good.K, good.K}, {}), InvalidModule);
  CHECK_THROWS_AS(Module(p, std::vector<ScalarMatrix>{good.E, good.F, good.K}, {}), InvalidModule);
  CHECK_THROWS_AS(Module(p, std::map<std::string, ScalarMatrix>{{"E", good.E}, {"F", good.F}, {"K", good.K}}, {}), InvalidModule);
}

TEST_CASE("tensor examples") {
  const auto pres = bundled_presentation("uq_sl2hat");
  const auto c = default_coproduct(pres);
  const auto m = evaluation_module(1);
  const auto triv = evaluation_module(0);
  const auto left = tensor(m, triv, c);
  const auto right = tensor(triv, m, c);
  CHECK(left.actions() == m.actions());
  CHECK(right.actions() == m.actions());

  const auto a = evaluation_module(1, Scalar::var(Var::v1));
  const auto b = evaluation_module(1, Scalar::var(Var::v2));
  const auto t = tensor(a, b, c);
  CHECK(t.dimension() == 4);
  CHECK(t.action("K1") == kron(a.action("K1"), b.action("K1")));
  // Independent assembly of Delta(e1) and Delta(f0).
  const auto i2 = ScalarMatrix::identity(2);
  CHECK(t.action("e1") == kron(a.action("e1"), i2) + kron(a.action("K1"), b.action("e1")));
  CHECK(t.action("f0") == kron(a.action("f0"), b.action("K0inv")) + kron(i2, b.action("f0")));
  for (const auto& [name, r] : t.relation_residuals()) CHECK(r.is_zero());

  CHECK_THROWS_AS(tensor(irrep(1), m, c), PresentationMismatch);
}

TEST_CASE("coproduct relations certify on the doubled rule set") {
  for (const char* name : {"uq_sl2", "uq_sl2hat"}) {
    const auto c = default_coproduct(bundled_presentation(name));
    for (const auto& [rel, verdict] : coproduct_relation_check(c)) {
      CAPTURE(rel);
      CHECK(verdict == ZeroVerdict::Zero);
    }
  }
  CHECK_THROWS_AS(default_coproduct(bundled_presentation("qoa")), PresentationMismatch);
}

TEST_CASE("a wrong coproduct is caught by the tensor module") {
  const auto pres = bundled_presentation("uq_sl2");
  // e (x) 1 + 1 (x) e is not compatible with [E,F] = (K - K^-1)/(q - q^-1).
  const auto bad = make_coproduct("bad", pres,
                                  {{"E", "E_L + E_R"}, {"F", "F_L + F_R"}, {"K", "K_L*K_R"}, {"Kinv", "Kinv_L*Kinv_R"}});
  CHECK_THROWS_AS(tensor(irrep(1), irrep(1), bad), InvalidModule);
  bool any_inconclusive = false;
  for (const auto& [rel, verdict] : coproduct_relation_check(bad)) any_inconclusive |= verdict == ZeroVerdict::Inconclusive;
  CHECK(any_inconclusive);
}

TEST_CASE("coproduct is multiplicative on module pairs") {
  const auto pres = bundled_presentation("uq_sl2hat");
  const auto c = default_coproduct(pres);
  const auto a = evaluation_module(1, Scalar::var(Var::v1));
  const auto b = evaluation_module(2, Scalar::var(Var::v2));
  const auto t = tensor(a, b, c);
  Homomorphism<AlgebraElement> delta(pres->alphabet, AlgebraElement(c.doubled, Scalar(1)));
  for (std::size_t i = 0; i < c.images.size(); ++i) delta.assign(static_cast<Letter>(i), c.images[i]);
  Homomorphism<ScalarMatrix> pair(c.doubled, ScalarMatrix::identity(6));
  const auto n = pres->alphabet->size();
  for (Letter l = 0; l < n; ++l) {
    pair.assign(l, kron(a.action(l), ScalarMatrix::identity(3)));
    pair.assign(static_cast<Letter>(l + n), kron(ScalarMatrix::identity(2), b.action(l)));
  }
  std::mt19937_64 rng(41);
  for (int i = 0; i < 12; ++i) {
    const auto x = testing::random_element(rng, pres->alphabet, 3, 2);
    const auto y = testing::random_element(rng, pres->alphabet, 2, 2);
    CHECK(pair.apply(delta.apply(x * y)) == pair.apply(delta.apply(x)) * pair.apply(delta.apply(y)));
    CHECK(pair.apply(delta.apply(x)) == t.represent(x));
  }
}

TEST_CASE("rewrite soundness against modules") {
  const auto pres = bundled_presentation("uq_sl2hat");
  const auto m1 = evaluation_module(1);
  const auto m2 = evaluation_module(2);
  std::mt19937_64 rng(43);
  for (int i = 0; i < 25; ++i) {
    const auto x = testing::random_element(rng, pres->alphabet, 4, 2);
    const auto nf = normal_form(x, pres->rules);
    CHECK(m1.represent(x) == m1.represent(nf.value));
    CHECK(m2.represent(x) == m2.represent(nf.value));
  }
}

TEST_CASE("spin chains") {
  const auto c = default_coproduct(bundled_presentation("uq_sl2hat"));
  const auto m = spin_chain_module(3, c);
  CHECK(m.dimension() == 8);
  CHECK(m.label().at("sites") == "3");
  CHECK_THROWS(spin_chain_module(0, c));
}

TEST_CASE("module JSON round trip revalidates") {
  const auto m = evaluation_module(2);
  const auto j = module_to_json(m);
  const auto back = module_from_json(j);
  CHECK(back.actions() == m.actions());
  CHECK(back.label() == m.label());
  CHECK(back.presentation().name == "uq_sl2hat");

  auto broken = j;
  broken["action"]["e1"][0][1] = "q^5";
  CHECK_THROWS_AS(module_from_json(broken), InvalidModule);
  auto truncated = j;
  truncated["action"].erase("K0");
  CHECK_THROWS_AS(module_from_json(truncated), InvalidModule);
  CHECK_THROWS_AS(module_from_json(nlohmann::json::parse("{\"presentation\": 3}")), InvalidModule);

  const auto custom = std::make_shared<const Presentation>(
      parse_presentation("name: comm\nalphabet: x y\nprecedence: x y\ny*x -> x*y\n"));
  ScalarMatrix x = ScalarMatrix::identity(2), y = ScalarMatrix::identity(2);
  x(0, 0) = q();
  y(1, 1) = Scalar::var(Var::kp);
  const Module cm(custom, std::vector<ScalarMatrix>{x, y}, ModuleLabel{{"kind", "diagonal"}});
  CHECK(module_from_json(module_to_json(cm)).actions() == cm.actions());
}
