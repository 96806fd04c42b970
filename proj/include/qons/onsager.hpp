#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qons/certificate.hpp"
#include "qons/loop.hpp"
#include "qons/ncalg.hpp"
#include "qons/rewrite.hpp"

namespace qons {

// Residual rendering per carrier.
inline std::vector<std::string> residual_entries(const LoopElement& x) { return x.entries(); }
inline std::vector<std::string> residual_entries(const ScalarMatrix& m) { return nonzero_entries(m); }
inline std::vector<std::string> residual_entries(const RationalMatrix& m) { return nonzero_entries(m); }

inline LoopElement scale(const mpq_class& c, const LoopElement& x) { return c * x; }
inline ScalarMatrix scale(const mpq_class& c, const ScalarMatrix& x) { return Scalar(c) * x; }
inline RationalMatrix scale(const mpq_class& c, const RationalMatrix& x) { return c * x; }

template <class T>
bool same_carrier(const T&, const T&) {
  return true;
}
template <class U>
bool same_carrier(const Matrix<U>& a, const Matrix<U>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a.square();
}

/// Dolan-Grady residuals [A0,[A0,[A0,A1]]] - c[A0,A1] and the mirror.
/// Works on loop elements and on exact matrices.
template <class T>
Certificate check_dolan_grady(const T& a0, const T& a1, const mpq_class& c = 16) {
  if (!same_carrier(a0, a1)) throw CarrierMismatch("Dolan-Grady generators on different carriers");
  Certificate cert;
  cert.identity = "dolan-grady";
  cert.bindings["c"] = c.get_str();
  cert.engine = std::is_same_v<T, LoopElement> ? Engine::loop : Engine::matrix;
  const T r0 = bracket(a0, bracket(a0, bracket(a0, a1))) - scale(c, bracket(a0, a1));
  const T r1 = bracket(a1, bracket(a1, bracket(a1, a0))) - scale(c, bracket(a1, a0));
  cert.residuals.push_back({"[A0,[A0,[A0,A1]]] = c[A0,A1]", residual_entries(r0)});
  cert.residuals.push_back({"[A1,[A1,[A1,A0]]] = c[A1,A0]", residual_entries(r1)});
  cert.finalize();
  return cert;
}

/// Generators A_k, G_l on a finite index window.
template <class T>
struct OnsagerFamily {
  std::map<int, T> A;
  std::map<int, T> G;
};

/// Loop-realization family with A_k for |k| <= 2*window and G_l likewise,
/// enough for every relation with |k|, |l| <= window.
OnsagerFamily<LoopElement> loop_family(int window);

/// [A_k,A_l] = 4G_{k-l}, [G_l,A_k] = 2A_{k+l} - 2A_{k-l}, [G_k,G_l] = 0 for all
/// |k|, |l| <= window. Throws MissingIndex when the family is too small.
template <class T>
Certificate check_second_presentation(const OnsagerFamily<T>& fam, int window) {
  auto get = [](const std::map<int, T>& m, int i, const char* what) -> const T& {
    auto it = m.find(i);
    if (it == m.end()) throw MissingIndex(std::string(what) + "_" + std::to_string(i));
    return it->second;
  };
  Certificate cert;
  cert.identity = "onsager-second-presentation";
  cert.bindings["window"] = std::to_string(window);
  cert.engine = std::is_same_v<T, LoopElement> ? Engine::loop : Engine::matrix;
  ResidualComponent aa{"[A_k,A_l] = 4G_{k-l}", {}};
  ResidualComponent ga{"[G_l,A_k] = 2A_{k+l} - 2A_{k-l}", {}};
  ResidualComponent gg{"[G_k,G_l] = 0", {}};
  auto record = [](ResidualComponent& rc, const std::string& where, const T& r) {
    for (const auto& e : residual_entries(r)) rc.entries.push_back(where + " " + e);
  };
  for (int k = -window; k <= window; ++k) {
    for (int l = -window; l <= window; ++l) {
      const std::string at = "k=" + std::to_string(k) + ",l=" + std::to_string(l) + ":";
      const T& ak = get(fam.A, k, "A");
      const T& al = get(fam.A, l, "A");
      const T& gl = get(fam.G, l, "G");
      record(aa, at, bracket(ak, al) - scale(4, get(fam.G, k - l, "G")));
      record(ga, at, bracket(gl, ak) - (scale(2, get(fam.A, k + l, "A")) - scale(2, get(fam.A, k - l, "A"))));
      record(gg, at, bracket(get(fam.G, k, "G"), gl));
    }
  }
  cert.residuals = {aa, ga, gg};
  cert.finalize();
  return cert;
}

/// Residual expressions of the two q-deformed Dolan-Grady relations.
template <class T>
std::vector<std::pair<std::string, T>> qdg_residuals(const T& w0, const T& w1, const Scalar& rho) {
  return {
      {"[W0,[W0,[W0,W1]_q]_q^-1] = rho[W0,W1]", nested_dg_lhs(w0, w1) - rho * bracket(w0, w1)},
      {"[W1,[W1,[W1,W0]_q]_q^-1] = rho[W1,W0]", nested_dg_lhs(w1, w0) - rho * bracket(w1, w0)},
  };
}

/// The seven augmented q-Onsager relations. `exchange_power` is the exponent
/// p in K0 Z1 = q^-p Z1 K0 and its three siblings (2 in the algebra).
template <class T>
std::vector<std::pair<std::string, T>> augmented_residuals(const T& k0, const T& k1, const T& z1, const T& zt1,
                                                           int exchange_power = 2) {
  const Scalar qp = Scalar::q_power(exchange_power);
  const Scalar qm = Scalar::q_power(-exchange_power);
  const Scalar coeff = (Scalar::q_power(3) - Scalar::q_power(-3)) * (Scalar::q_power(2) - Scalar::q_power(-2)) *
                       (Scalar::q_power(2) - Scalar::q_power(-2)) * (Scalar::q_power(2) - Scalar::q_power(-2)) /
                       (Scalar::q_power(1) - Scalar::q_power(-1));
  return {
      {"[K0,K1] = 0", bracket(k0, k1)},
      {"K0 Z1 = q^-2 Z1 K0", k0 * z1 - qm * (z1 * k0)},
      {"K0 Zt1 = q^2 Zt1 K0", k0 * zt1 - qp * (zt1 * k0)},
      {"K1 Z1 = q^2 Z1 K1", k1 * z1 - qp * (z1 * k1)},
      {"K1 Zt1 = q^-2 Zt1 K1", k1 * zt1 - qm * (zt1 * k1)},
      {"[Z1,[Z1,[Z1,Zt1]_q]_q^-1] = c Z1(K1K1 - K0K0)Z1",
       nested_dg_lhs(z1, zt1) - coeff * (z1 * (k1 * k1 - k0 * k0) * z1)},
      {"[Zt1,[Zt1,[Zt1,Z1]_q]_q^-1] = c Zt1(K0K0 - K1K1)Zt1",
       nested_dg_lhs(zt1, z1) - coeff * (zt1 * (k0 * k0 - k1 * k1) * zt1)},
  };
}

/// Matrix carrier: Verified or Failed.
Certificate check_qdg(const ScalarMatrix& w0, const ScalarMatrix& w1, const Scalar& rho);
/// Rewrite carrier: Verified or Inconclusive.
Certificate check_qdg(const AlgebraElement& w0, const AlgebraElement& w1, const Scalar& rho, const RuleSet& rules,
                      std::size_t fuel = kDefaultFuel);

Certificate check_augmented(const ScalarMatrix& k0, const ScalarMatrix& k1, const ScalarMatrix& z1,
                            const ScalarMatrix& zt1, int exchange_power = 2);
Certificate check_augmented(const AlgebraElement& k0, const AlgebraElement& k1, const AlgebraElement& z1,
                            const AlgebraElement& zt1, const RuleSet& rules, std::size_t fuel = kDefaultFuel,
                            int exchange_power = 2);

/// Builds a certificate from matrix residuals (Verified iff all are zero).
Certificate matrix_certificate(std::string identity, const std::vector<std::pair<std::string, ScalarMatrix>>& residuals);
/// Builds a certificate from element residuals reduced over a rule set.
Certificate rewrite_certificate(std::string identity, const std::vector<std::pair<std::string, AlgebraElement>>& residuals,
                                const RuleSet& rules, std::size_t fuel);

}  // namespace qons
