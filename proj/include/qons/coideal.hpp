#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qons/certificate.hpp"
#include "qons/linalg.hpp"
#include "qons/uq_sl2hat.hpp"

namespace qons {

/// k+, k-, e+, e- as Scalars; symbolic by default.
struct QOAParams {
  Scalar kp = Scalar::var(Var::kp);
  Scalar km = Scalar::var(Var::km);
  Scalar ep = Scalar::var(Var::ep);
  Scalar em = Scalar::var(Var::em);

  QOAParams specialized(const EvaluationPoint& p) const;
  /// (q + q^-1)^2 k+ k-.
  Scalar rho() const;
};

struct QOnsagerPair {
  AlgebraElement W0, W1;
  Scalar rho;
};

/// W0 -> k+ e1 + k- q^-1 f1 K1 + e+ K1,  W1 -> k- e0 + k+ q^-1 f0 K0 + e- K0.
QOnsagerPair qoa_image(const QOAParams& p = {});

struct AugmentedQuadruple {
  AlgebraElement K0, K1, Z1, Zt1;
};

/// K0 -> e+ K1, K1 -> e- K0,
/// Z1 -> (q^2 - q^-2)(e+ q^-1 e0 K1 + e- f1 K1 K0),
/// Zt1 -> (q^2 - q^-2)(e- q^-1 e1 K0 + e+ f0 K1 K0).
AugmentedQuadruple augmented_image(const QOAParams& p = {});

/// Coefficient-wise partial specialization.
AlgebraElement specialize(const AlgebraElement& x, const EvaluationPoint& p);
QOnsagerPair specialize(const QOnsagerPair& x, const EvaluationPoint& p);
AugmentedQuadruple specialize(const AugmentedQuadruple& x, const EvaluationPoint& p);

/// All products of at most `degree` factors from `gens`, the unit first,
/// in graded-lex order of the factor index sequence.
std::vector<AlgebraElement> word_span(const std::vector<AlgebraElement>& gens, int degree);

enum class CoidealSide {
  left,   // Delta(x) in span{pi1(b) (x) M}
  right,  // Delta(x) in span{M (x) pi2(b)}
};
const char* to_string(CoidealSide s);

struct CoidealMembership {
  std::string generator;
  CoidealSide side;
  bool member = false;
};

/// Exact linear-membership evidence for the coideal property on m1 (x) m2.
struct CoidealReport {
  std::string convention;
  std::string modules;
  std::string specialization;  // "symbolic" or the point used
  std::size_t span_left = 0, ambient_left = 0;
  std::size_t span_right = 0, ambient_right = 0;
  std::vector<CoidealMembership> members;

  bool vacuous(CoidealSide s) const {
    return s == CoidealSide::left ? span_left == ambient_left : span_right == ambient_right;
  }
  /// True when every generator is a member on side s.
  bool holds(CoidealSide s) const;
  nlohmann::json to_json() const;
};

/// Represents Delta(x) on m1 (x) m2 for every generator and tests membership
/// on both sides against the images of `spanning_set`. With `point`, ranks
/// are computed over Q at that point; otherwise over the symbolic field.
CoidealReport check_coideal_on_modules(const std::vector<std::pair<std::string, AlgebraElement>>& generators,
                                       const std::vector<AlgebraElement>& spanning_set,
                                       const CoproductConvention& c, const Module& m1, const Module& m2,
                                       const std::optional<EvaluationPoint>& point = std::nullopt,
                                       std::size_t term_budget = kDefaultTermBudget);

/// q = 1 degeneration on m with k+ = k- = 1, e+ = e- = 0. The q-DG residual
/// matrices are computed symbolically, then each entry is evaluated at every
/// q in `q_points` together with `rest`. Entries with a pole there are skipped
/// and counted under the binding "poles_skipped". For q = 1 the classical
/// Dolan-Grady relation with c = 16 is also checked on A_i = 2 W_i.
Certificate check_q1_degeneration(const Module& m, const std::vector<mpq_class>& q_points,
                                  const EvaluationPoint& rest);

}  // namespace qons
