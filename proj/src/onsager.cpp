#include "qons/onsager.hpp"

namespace qons {

OnsagerFamily<LoopElement> loop_family(int window) {
  OnsagerFamily<LoopElement> fam;
  for (int i = -2 * window; i <= 2 * window; ++i) {
    fam.A[i] = loop_A(i);
    fam.G[i] = loop_G(i);
  }
  return fam;
}

Certificate matrix_certificate(std::string identity,
                               const std::vector<std::pair<std::string, ScalarMatrix>>& residuals) {
  Certificate cert;
  cert.identity = std::move(identity);
  cert.engine = Engine::matrix;
  for (const auto& [name, r] : residuals) cert.residuals.push_back({name, nonzero_entries(r)});
  cert.finalize();
  return cert;
}

Certificate rewrite_certificate(std::string identity,
                                const std::vector<std::pair<std::string, AlgebraElement>>& residuals,
                                const RuleSet& rules, std::size_t fuel) {
  Certificate cert;
  cert.identity = std::move(identity);
  cert.engine = Engine::rewrite;
  cert.bindings["fuel"] = std::to_string(fuel);
  for (const auto& [name, r] : residuals) {
    const NormalForm nf = normal_form(r, rules, fuel);
    ResidualComponent rc{name, {}, true};
    if (!(nf.status == ReductionStatus::converged && nf.value.is_zero())) {
      // A nonzero normal form is not proof of nonvanishing.
      rc.conclusive = false;
      for (const auto& [w, c] : nf.value.terms()) rc.entries.push_back(rules.alphabet()->render(w) + ": " + c.to_string());
      if (nf.status == ReductionStatus::fuel_exhausted) rc.entries.push_back("fuel exhausted");
    }
    cert.residuals.push_back(std::move(rc));
  }
  cert.finalize();
  return cert;
}

Certificate check_qdg(const ScalarMatrix& w0, const ScalarMatrix& w1, const Scalar& rho) {
  if (!same_carrier(w0, w1)) throw CarrierMismatch("W0 and W1 have different shapes");
  Certificate cert = matrix_certificate("q-dolan-grady", qdg_residuals(w0, w1, rho));
  cert.bindings["rho"] = rho.to_string();
  return cert;
}

Certificate check_qdg(const AlgebraElement& w0, const AlgebraElement& w1, const Scalar& rho, const RuleSet& rules,
                      std::size_t fuel) {
  Certificate cert = rewrite_certificate("q-dolan-grady", qdg_residuals(w0, w1, rho), rules, fuel);
  cert.bindings["rho"] = rho.to_string();
  return cert;
}

Certificate check_augmented(const ScalarMatrix& k0, const ScalarMatrix& k1, const ScalarMatrix& z1,
                            const ScalarMatrix& zt1, int exchange_power) {
  if (!same_carrier(k0, k1) || !same_carrier(k0, z1) || !same_carrier(k0, zt1)) {
    throw CarrierMismatch("augmented generators have different shapes");
  }
  Certificate cert = matrix_certificate("augmented-q-onsager", augmented_residuals(k0, k1, z1, zt1, exchange_power));
  cert.bindings["exchange_power"] = std::to_string(exchange_power);
  return cert;
}

Certificate check_augmented(const AlgebraElement& k0, const AlgebraElement& k1, const AlgebraElement& z1,
                            const AlgebraElement& zt1, const RuleSet& rules, std::size_t fuel, int exchange_power) {
  Certificate cert = rewrite_certificate("augmented-q-onsager",
                                         augmented_residuals(k0, k1, z1, zt1, exchange_power), rules, fuel);
  cert.bindings["exchange_power"] = std::to_string(exchange_power);
  return cert;
}

}  // namespace qons
