#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qons {

inline constexpr const char* kToolVersion = "0.3.0";

enum class Verdict { Verified, Failed, Inconclusive };
enum class Engine { matrix, rewrite, loop, linear_algebra };

std::string to_string(Verdict v);
std::string to_string(Engine e);
Verdict verdict_from_string(const std::string& s);
Engine engine_from_string(const std::string& s);

/// The weaker of two verdicts: Failed < Inconclusive < Verified.
Verdict weakest(Verdict a, Verdict b);

/// Residual of one relation: every nonzero entry (matrix position or word)
/// with its exact value. An empty entry list means the residual is zero.
struct ResidualComponent {
  std::string relation;
  std::vector<std::string> entries;
  /// False when the residual could not be decided (rewrite ran out of rules
  /// or fuel); entries then hold the unreduced remainder.
  bool conclusive = true;

  bool zero() const { return conclusive && entries.empty(); }
};

/// Machine-readable record of an identity check.
struct Certificate {
  std::string identity;
  std::map<std::string, std::string> bindings;
  std::vector<ResidualComponent> residuals;
  Verdict verdict = Verdict::Inconclusive;
  Engine engine = Engine::matrix;
  std::string timestamp;
  std::string version = kToolVersion;

  /// Recomputes the verdict from the residual components: Verified iff all
  /// are zero; Failed if any conclusive component is nonzero.
  void finalize();
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

/// Current UTC time in ISO 8601.
std::string utc_timestamp();

}  // namespace qons
