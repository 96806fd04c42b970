#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "qons/certificate.hpp"

namespace qons::cli {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitResource = 70;

struct RunOptions {
  unsigned jobs = 1;
  bool reproducible = false;
};

struct SuiteRun {
  std::string suite;
  std::vector<Certificate> certificates;
  /// Suite-specific evidence (kernel dimensions, fit coefficients, ...).
  nlohmann::json reports = nlohmann::json::object();
  Verdict verdict = Verdict::Verified;
};

/// Runs the suite named by c.suite. Identities run concurrently on up to
/// opts.jobs threads; results keep declaration order.
SuiteRun run_suite(const SuiteConfig& c, const RunOptions& opts);

/// Writes one certificate file per identity and report.json (with its
/// manifest) into dir, each file atomically. Returns the written paths.
std::vector<std::filesystem::path> write_outputs(const SuiteRun& run, const SuiteConfig& c,
                                                 const std::filesystem::path& dir, bool reproducible);

int exit_code(Verdict v);

}  // namespace qons::cli
