#pragma once

#include <random>

#include "qons/ncalg.hpp"
#include "qons/scalar.hpp"

namespace qons::testing {

/// Small random Scalars over q, v, k+, e- with occasional q-only denominators.
inline Scalar random_scalar(std::mt19937_64& rng, bool allow_denominator = true) {
  std::uniform_int_distribution<int> nterms(1, 3), coeff(-3, 3), qexp(-2, 2), vexp(-1, 1), kexp(0, 1), pick(0, 3);
  Scalar s;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Scalar t(coeff(rng));
    t *= Scalar::q_power(qexp(rng));
    t *= Scalar::var(Var::v1, vexp(rng));
    if (kexp(rng)) t *= Scalar::var(Var::kp);
    if (kexp(rng)) t *= Scalar::var(Var::em);
    s += t;
  }
  if (allow_denominator) {
    switch (pick(rng)) {
      case 0: s /= q_integer(2); break;
      case 1: s /= Scalar::q_power(1) - Scalar::q_power(-1); break;
      case 2: s /= Scalar(3); break;
      default: break;
    }
  }
  return s;
}

/// Admissible rational point for the variables used by random_scalar.
inline EvaluationPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  auto nonzero = [&](bool avoid_units) {
    for (;;) {
      mpq_class x(num(rng), den(rng));
      x.canonicalize();
      if (x == 0) continue;
      if (avoid_units && (x == 1 || x == -1)) continue;
      return x;
    }
  };
  EvaluationPoint p;
  p.set(Var::q, nonzero(true));
  for (Var v : {Var::v1, Var::v2, Var::v3, Var::t}) p.set(v, nonzero(false));
  for (Var v : {Var::kp, Var::km, Var::ep, Var::em}) p.set(v, mpq_class(num(rng), den(rng)));
  return p;
}

inline AlgebraElement random_element(std::mt19937_64& rng, const AlphabetPtr& alphabet, int max_degree,
                                     int max_terms = 3) {
  std::uniform_int_distribution<int> nterms(1, max_terms), deg(0, max_degree);
  std::uniform_int_distribution<int> letter(0, static_cast<int>(alphabet->size()) - 1);
  AlgebraElement x(alphabet);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Word w;
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) w.push_back(static_cast<Letter>(letter(rng)));
    x.add_term(w, random_scalar(rng, false));
  }
  return x;
}

}  // namespace qons::testing
