#pragma once

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qons/matrix.hpp"
#include "qons/ncalg.hpp"
#include "qons/presentation.hpp"

namespace qons {

using ModuleLabel = std::map<std::string, std::string>;

/// Finite-dimensional representation of a presentation: one exact matrix per
/// letter. Construction validates every relation (including stated ones) to
/// the exact zero matrix and every inverse pair to mutually inverse matrices,
/// and throws InvalidModule otherwise.
class Module {
 public:
  Module(PresentationPtr presentation, std::vector<ScalarMatrix> action, ModuleLabel label);
  Module(PresentationPtr presentation, const std::map<std::string, ScalarMatrix>& action, ModuleLabel label);

  const Presentation& presentation() const { return *presentation_; }
  const PresentationPtr& presentation_ptr() const { return presentation_; }
  std::size_t dimension() const { return dim_; }
  const ScalarMatrix& action(Letter l) const { return action_.at(l); }
  const ScalarMatrix& action(std::string_view name) const;
  const std::vector<ScalarMatrix>& actions() const { return action_; }
  const ModuleLabel& label() const { return label_; }
  std::string describe() const;
  /// Same module with a different label; no revalidation.
  Module relabeled(ModuleLabel label) const {
    Module m = *this;
    m.label_ = std::move(label);
    return m;
  }

  const Homomorphism<ScalarMatrix>& representation() const { return hom_; }
  ScalarMatrix represent(const AlgebraElement& x) const { return hom_.apply(x); }

  /// Residual matrix of every relation, in presentation order.
  std::vector<std::pair<std::string, ScalarMatrix>> relation_residuals() const;

 private:
  PresentationPtr presentation_;
  std::size_t dim_ = 0;
  std::vector<ScalarMatrix> action_;
  ModuleLabel label_;
  Homomorphism<ScalarMatrix> hom_;
};

/// JSON: {"presentation", "dimension", "label", "action": {letter: rows of
/// Scalar text}}. Presentations outside the bundle also carry their text
/// under "presentation_text". Loading re-runs full validation.
nlohmann::json module_to_json(const Module& m);
Module module_from_json(const nlohmann::json& j);

/// (n+1)-dimensional irreducible U_q(sl2) module with basis u_0..u_n:
/// K u_m = q^{n-2m} u_m, E u_m = [n-m+1] u_{m-1}, F u_m = [m+1] u_{m+1}.
/// Matrices are returned as {E, F, K, Kinv}.
struct Sl2Matrices {
  ScalarMatrix E, F, K, Kinv;
};
Sl2Matrices irrep_matrices(int n);
Module irrep(int n);

/// Pull-back of irrep(n) to U_q(sl2-hat) through the evaluation map
/// e1 -> E, f1 -> F, K1 -> K, e0 -> v F, f0 -> v^-1 E, K0 -> K^-1.
Module evaluation_module(int n, const Scalar& spectral);
Module evaluation_module(int n);  // spectral parameter v

/// Coproduct as data: the image of every letter as an element over the
/// doubled alphabet whose letters are `<g>_L` (g (x) 1) and `<g>_R` (1 (x) g).
struct CoproductConvention {
  std::string name;
  PresentationPtr presentation;
  AlphabetPtr doubled;
  std::vector<AlgebraElement> images;
};

AlphabetPtr doubled_alphabet(const Alphabet& a);
/// Builds a convention from letter -> image text over the doubled alphabet.
CoproductConvention make_coproduct(std::string name, PresentationPtr presentation,
                                   const std::map<std::string, std::string>& images);
/// Delta(e_i) = e_i (x) 1 + K_i (x) e_i, Delta(f_i) = f_i (x) K_i^-1 + 1 (x) f_i,
/// Delta(K_i^{+-1}) = K_i^{+-1} (x) K_i^{+-1}. Available for uq_sl2 and uq_sl2hat.
CoproductConvention default_coproduct(const PresentationPtr& presentation);

/// Rule set on the doubled alphabet: both copies of the rules plus
/// R-letters commuting past L-letters.
RuleSet doubled_rules(const Presentation& p);

/// Delta applied to each relation, reduced over the doubled rules.
std::vector<std::pair<std::string, ZeroVerdict>> coproduct_relation_check(const CoproductConvention& c,
                                                                          std::size_t fuel = kDefaultFuel);

/// Module on V1 (x) V2 where g acts as (m1 (x) m2)(Delta(g)).
Module tensor(const Module& m1, const Module& m2, const CoproductConvention& c);
/// N-fold tensor of spin-1/2 evaluation modules at v, v2, ..., vN.
Module spin_chain_module(int sites, const CoproductConvention& c);

}  // namespace qons
