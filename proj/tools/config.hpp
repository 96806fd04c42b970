#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qons::cli {

inline constexpr std::string_view kSuites[] = {
    "classical-onsager", "qdg-coideal", "augmented-coideal", "affine-presentation",
    "davies-kernel",     "aw3-fit",     "rewrite-zero",
};

bool is_suite(std::string_view name);

/// Config file grammar, one entry per line:
///   # comment
///   key = value
///   key = item, item, ...        (list keys: spins, spectral)
///   bindings = var:value, ...    (rational values, e.g. k+:1, q:3/2)
/// Keys may appear at most once; unknown keys are rejected. Unset keys take
/// the suite defaults.
struct SuiteConfig {
  std::optional<std::string> suite;
  std::optional<std::vector<int>> spins;
  std::optional<std::vector<std::string>> spectral;
  std::optional<int> tensor_depth;
  std::optional<int> degree;
  std::optional<std::uint64_t> fuel;
  std::optional<int> window;
  std::optional<std::string> out;
  std::optional<std::string> rho;
  std::optional<std::string> dg_constant;
  std::optional<int> exchange_power;
  std::optional<bool> perturb_g1;
  std::optional<std::map<std::string, std::string>> bindings;
  std::optional<int> samples;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const SuiteConfig&, const SuiteConfig&) = default;
};

/// Throws ConfigError with the offending line number.
SuiteConfig parse_config(std::string_view text);
SuiteConfig load_config(const std::string& path);
/// Canonical text: set keys only, in declaration order.
std::string format_config(const SuiteConfig& c);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t x);

}  // namespace qons::cli
