#include "qons/certificate.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace qons {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Failed: return "Failed";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::matrix: return "matrix";
    case Engine::rewrite: return "rewrite";
    case Engine::loop: return "loop";
    case Engine::linear_algebra: return "linear_algebra";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  for (auto v : {Verdict::Verified, Verdict::Failed, Verdict::Inconclusive}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Engine engine_from_string(const std::string& s) {
  for (auto e : {Engine::matrix, Engine::rewrite, Engine::loop, Engine::linear_algebra}) {
    if (to_string(e) == s) return e;
  }
  throw std::invalid_argument("unknown engine '" + s + "'");
}

Verdict weakest(Verdict a, Verdict b) {
  if (a == Verdict::Failed || b == Verdict::Failed) return Verdict::Failed;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) return Verdict::Inconclusive;
  return Verdict::Verified;
}

void Certificate::finalize() {
  Verdict v = Verdict::Verified;
  for (const auto& r : residuals) {
    if (!r.conclusive) {
      v = weakest(v, Verdict::Inconclusive);
    } else if (!r.entries.empty()) {
      v = Verdict::Failed;
    }
  }
  verdict = v;
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json residual = nlohmann::json::array();
  for (const auto& r : c.residuals) {
    residual.push_back({{"relation", r.relation}, {"conclusive", r.conclusive}, {"entries", r.entries}});
  }
  nlohmann::json j{{"identity", c.identity},
                   {"bindings", c.bindings},
                   {"residual", residual},
                   {"verdict", to_string(c.verdict)},
                   {"engine", to_string(c.engine)},
                   {"version", c.version}};
  if (!c.timestamp.empty()) j["timestamp"] = c.timestamp;
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.identity = j.at("identity").get<std::string>();
  c.bindings = j.at("bindings").get<std::map<std::string, std::string>>();
  for (const auto& r : j.at("residual")) {
    c.residuals.push_back({r.at("relation").get<std::string>(), r.at("entries").get<std::vector<std::string>>(),
                           r.at("conclusive").get<bool>()});
  }
  c.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  c.engine = engine_from_string(j.at("engine").get<std::string>());
  c.version = j.at("version").get<std::string>();
  if (j.contains("timestamp")) c.timestamp = j.at("timestamp").get<std::string>();
  return c;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qons
