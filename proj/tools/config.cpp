#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <gmpxx.h>

#include "qons/errors.hpp"
#include "qons/ncalg.hpp"
#include "qons/scalar.hpp"

namespace qons::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.emplace_back(trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class Int>
Int parse_int(std::string_view s, Int lo, Int hi, const std::string& where) {
  Int x{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || p != s.data() + s.size()) throw ConfigError(where + ": expected an integer, got '" + std::string(s) + "'");
  if (x < lo || x > hi) {
    throw ConfigError(where + ": " + std::string(s) + " is outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return x;
}

mpq_class parse_rational(const std::string& s, const std::string& where) {
  mpq_class x;
  if (s.empty() || x.set_str(s, 10) != 0) throw ConfigError(where + ": expected a rational, got '" + s + "'");
  if (s.find('/') != std::string::npos && x.get_den() == 0) throw ConfigError(where + ": zero denominator");
  x.canonicalize();
  return x;
}

void check_scalar(const std::string& s, const std::string& where) {
  try {
    (void)parse_scalar(s);
  } catch (const Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

}  // namespace

bool is_suite(std::string_view name) {
  return std::find(std::begin(kSuites), std::end(kSuites), name) != std::end(kSuites);
}

SuiteConfig parse_config(std::string_view text) {
  SuiteConfig c;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError(where + ": duplicate key '" + key + "'");
    const std::string at = where + " (" + key + ")";

    if (key == "suite") {
      if (!is_suite(value)) throw ConfigError(at + ": unknown suite '" + value + "'");
      c.suite = value;
    } else if (key == "spins") {
      std::vector<int> spins;
      for (const auto& s : split_list(value)) spins.push_back(parse_int<int>(s, 0, 16, at));
      c.spins = std::move(spins);
    } else if (key == "spectral") {
      auto items = split_list(value);
      for (const auto& s : items) check_scalar(s, at);
      c.spectral = std::move(items);
    } else if (key == "tensor_depth") {
      c.tensor_depth = parse_int<int>(value, 0, 6, at);
    } else if (key == "degree") {
      c.degree = parse_int<int>(value, 0, 30, at);
    } else if (key == "fuel") {
      c.fuel = parse_int<std::uint64_t>(value, 1, UINT64_MAX, at);
    } else if (key == "window") {
      c.window = parse_int<int>(value, 0, 64, at);
    } else if (key == "out") {
      c.out = value;
    } else if (key == "rho") {
      check_scalar(value, at);
      c.rho = value;
    } else if (key == "dg_constant") {
      c.dg_constant = parse_rational(value, at).get_str();
    } else if (key == "exchange_power") {
      c.exchange_power = parse_int<int>(value, -16, 16, at);
    } else if (key == "perturb_g1") {
      if (value != "true" && value != "false") throw ConfigError(at + ": expected true or false");
      c.perturb_g1 = value == "true";
    } else if (key == "bindings") {
      std::map<std::string, std::string> b;
      for (const auto& item : split_list(value)) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw ConfigError(at + ": expected var:value, got '" + item + "'");
        const std::string name(trim(std::string_view(item).substr(0, colon)));
        if (!parse_var_name(name)) throw ConfigError(at + ": unknown variable '" + name + "'");
        const mpq_class x = parse_rational(std::string(trim(std::string_view(item).substr(colon + 1))), at);
        if (!b.emplace(name, x.get_str()).second) throw ConfigError(at + ": variable '" + name + "' bound twice");
      }
      c.bindings = std::move(b);
    } else if (key == "samples") {
      c.samples = parse_int<int>(value, 0, 100000, at);
    } else if (key == "seed") {
      c.seed = parse_int<std::uint64_t>(value, 0, UINT64_MAX, at);
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  return c;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const SuiteConfig& c) {
  std::ostringstream os;
  auto put = [&](const char* key, const std::string& v) { os << key << " = " << v << '\n'; };
  if (c.suite) put("suite", *c.suite);
  if (c.spins) {
    std::vector<std::string> s;
    for (int x : *c.spins) s.push_back(std::to_string(x));
    put("spins", join(s));
  }
  if (c.spectral) put("spectral", join(*c.spectral));
  if (c.tensor_depth) put("tensor_depth", std::to_string(*c.tensor_depth));
  if (c.degree) put("degree", std::to_string(*c.degree));
  if (c.fuel) put("fuel", std::to_string(*c.fuel));
  if (c.window) put("window", std::to_string(*c.window));
  if (c.out) put("out", *c.out);
  if (c.rho) put("rho", *c.rho);
  if (c.dg_constant) put("dg_constant", *c.dg_constant);
  if (c.exchange_power) put("exchange_power", std::to_string(*c.exchange_power));
  if (c.perturb_g1) put("perturb_g1", *c.perturb_g1 ? "true" : "false");
  if (c.bindings) {
    std::vector<std::string> s;
    for (const auto& [k, v] : *c.bindings) s.push_back(k + ":" + v);
    put("bindings", join(s));
  }
  if (c.samples) put("samples", std::to_string(*c.samples));
  if (c.seed) put("seed", std::to_string(*c.seed));
  return os.str();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace qons::cli
