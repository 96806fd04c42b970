#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qons/onsager.hpp"
#include "support/random.hpp"

using namespace qons;

namespace {

LoopElement random_loop(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pw(-3, 3), c(-4, 4), n(1, 4);
  LoopElement x;
  for (int i = n(rng); i > 0; --i) {
    x += LoopElement::E(pw(rng), c(rng)) + LoopElement::F(pw(rng), c(rng)) + LoopElement::H(pw(rng), c(rng));
  }
  return x;
}

bool has_entry(const Certificate& c, const std::string& needle) {
  for (const auto& r : c.residuals) {
    for (const auto& e : r.entries) {
      if (e.find(needle) != std::string::npos) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("loop generator examples") {
  CHECK(loop_G(0).is_zero());
  CHECK(bracket(loop_A(1), loop_A(0)) == mpq_class(4) * loop_G(1));
  CHECK(bracket(loop_A(1), loop_A(0)) == LoopElement::H(1, 4) - LoopElement::H(-1, 4));
  CHECK(bracket(loop_G(1), loop_A(0)) == mpq_class(2) * loop_A(1) - mpq_class(2) * loop_A(-1));
  CHECK(bracket(LoopElement::E(0), LoopElement::F(0)) == LoopElement::H(0));
  CHECK(bracket(LoopElement::H(0), LoopElement::E(2)) == LoopElement::E(2, 2));
  CHECK(bracket(LoopElement::H(1), LoopElement::F(-1)) == LoopElement::F(0, -2));
}

TEST_CASE("loop bracket properties against the matrix realization") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 100; ++i) {
    const auto x = random_loop(rng), y = random_loop(rng), z = random_loop(rng);
    CHECK(bracket(x, y) == -bracket(y, x));
    CHECK((bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))).is_zero());
    CHECK(bracket(x, y + z) == bracket(x, y) + bracket(x, z));
    // Independent oracle: commutators of 2x2 matrices over Q[t, t^-1].
    CHECK(loop_matrix(bracket(x, y)) == bracket(loop_matrix(x), loop_matrix(y)));
  }
}

TEST_CASE("Dolan-Grady examples") {
  const auto c = check_dolan_grady(loop_A(0), loop_A(1));
  CHECK(c.verdict == Verdict::Verified);
  CHECK(c.bindings.at("c") == "16");
  CHECK(c.engine == Engine::loop);
  CHECK(check_dolan_grady(LoopElement{}, LoopElement{}, 7).verdict == Verdict::Verified);
  RationalMatrix d0(2, 2), d1(2, 2);
  d0(0, 0) = 1, d0(1, 1) = -1;
  d1(0, 0) = 1, d1(1, 1) = 2;
  CHECK(check_dolan_grady(d0, d1).verdict == Verdict::Verified);
  const auto wrong = check_dolan_grady(loop_A(0), loop_A(1), 15);
  CHECK(wrong.verdict == Verdict::Failed);
  CHECK_FALSE(wrong.residuals[0].entries.empty());
  // Same relation on the 2x2 loop matrices.
  CHECK(check_dolan_grady(loop_matrix(loop_A(0)), loop_matrix(loop_A(1))).verdict == Verdict::Verified);
  CHECK_THROWS_AS(check_dolan_grady(RationalMatrix(2, 2), RationalMatrix(3, 3)), CarrierMismatch);
}

TEST_CASE("second presentation") {
  for (int w : {0, 1, 5, 8}) CHECK(check_second_presentation(loop_family(w), w).verdict == Verdict::Verified);

  auto fam = loop_family(2);
  fam.G[1] += LoopElement::H(0);
  const auto bad = check_second_presentation(fam, 2);
  CHECK(bad.verdict == Verdict::Failed);
  CHECK(has_entry(bad, "k=1,l=0: t^0: (-4)H"));

  auto small = loop_family(1);
  CHECK_THROWS_AS(check_second_presentation(small, 2), MissingIndex);

  // Skew data in the passing family.
  const auto f = loop_family(4);
  for (int l = -4; l <= 4; ++l) CHECK(f.G.at(-l) == -f.G.at(l));
}

TEST_CASE("matrix family via the loop embedding") {
  OnsagerFamily<ScalarMatrix> fam;
  for (int i = -4; i <= 4; ++i) {
    fam.A[i] = loop_matrix(loop_A(i));
    fam.G[i] = loop_matrix(loop_G(i));
  }
  CHECK(check_second_presentation(fam, 2).verdict == Verdict::Verified);
}

TEST_CASE("certificate JSON") {
  auto fam = loop_family(1);
  fam.G[1] += LoopElement::H(0);
  Certificate c = check_second_presentation(fam, 1);
  c.timestamp = "2026-01-01T00:00:00Z";
  const auto j = to_json(c);
  CHECK(j["verdict"] == "Failed");
  CHECK(j["identity"] == "onsager-second-presentation");
  CHECK(j["engine"] == "loop");
  const Certificate back = certificate_from_json(j);
  CHECK(back.verdict == c.verdict);
  CHECK(back.residuals.size() == c.residuals.size());
  CHECK(back.residuals[0].entries == c.residuals[0].entries);
  CHECK(to_json(back) == j);
  CHECK(weakest(Verdict::Verified, Verdict::Inconclusive) == Verdict::Inconclusive);
  CHECK(weakest(Verdict::Failed, Verdict::Inconclusive) == Verdict::Failed);
}
