#include "qons/presentation.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <sstream>

#include "bundled_presentations.hpp"

namespace qons {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

// "<id>: <body>" after a keyword.
std::pair<std::string, std::string> named(const std::string& rest, std::size_t line) {
  const auto colon = rest.find(':');
  if (colon == std::string::npos) {
    throw ParseError("line " + std::to_string(line) + ": expected '<name>: ...'");
  }
  return {trim(rest.substr(0, colon)), trim(rest.substr(colon + 1))};
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::string name;
  std::vector<std::string> letters;
  std::vector<std::pair<std::string, std::string>> inverses;
  std::vector<std::string> precedence;
  struct Pending {
    std::string name, lhs, rhs;
    std::size_t line;
  };
  std::vector<Pending> rules, relations;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    auto starts = [&](std::string_view kw) { return line.rfind(kw, 0) == 0; };
    if (starts("name:")) {
      name = trim(line.substr(5));
    } else if (starts("alphabet:")) {
      letters = split_ws(line.substr(9));
    } else if (starts("inverse:")) {
      auto pair = split_ws(line.substr(8));
      if (pair.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": inverse needs two letters");
      inverses.emplace_back(pair[0], pair[1]);
    } else if (starts("precedence:")) {
      precedence = split_ws(line.substr(11));
    } else if (starts("rule ")) {
      auto [id, body] = named(line.substr(5), lineno);
      const auto arrow = body.find("->");
      if (arrow == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": rule needs '->'");
      rules.push_back({id, trim(body.substr(0, arrow)), trim(body.substr(arrow + 2)), lineno});
    } else if (starts("relation ")) {
      auto [id, body] = named(line.substr(9), lineno);
      const auto eq = body.find('=');
      if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": relation needs '='");
      relations.push_back({id, trim(body.substr(0, eq)), trim(body.substr(eq + 1)), lineno});
    } else if (line.find("->") != std::string::npos) {
      const auto arrow = line.find("->");
      rules.push_back({"rule" + std::to_string(rules.size() + 1), trim(line.substr(0, arrow)),
                       trim(line.substr(arrow + 2)), lineno});
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unrecognized directive '" + line + "'");
    }
  }
  if (letters.empty()) throw ParseError("presentation declares no alphabet");
  auto alphabet = make_alphabet(letters, inverses);
  if (precedence.empty()) precedence = letters;
  std::vector<Letter> prec;
  for (const auto& p : precedence) prec.push_back(alphabet->at(p));
  WordOrder order(std::move(prec), alphabet->size());

  std::vector<RewriteRule> parsed;
  for (const auto& r : rules) {
    const AlgebraElement lhs = parse_element(r.lhs, alphabet);
    if (lhs.terms().size() != 1 || !lhs.terms().begin()->second.is_one() ||
        lhs.terms().begin()->first.empty()) {
      throw ParseError("line " + std::to_string(r.line) + ": rule left side must be a single word");
    }
    parsed.push_back({r.name, lhs.terms().begin()->first, parse_element(r.rhs, alphabet)});
  }
  Presentation p{name, alphabet, RuleSet(alphabet, std::move(order), std::move(parsed)), {}};
  for (std::size_t i = 0; i < p.rules.rules().size(); ++i) {
    p.relations.push_back({p.rules.rules()[i].name, p.rules.relation(i)});
  }
  for (const auto& r : relations) {
    p.relations.push_back({r.name, parse_element(r.lhs, alphabet) - parse_element(r.rhs, alphabet)});
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  const Alphabet& a = *p.alphabet;
  os << "name: " << p.name << "\nalphabet:";
  for (const auto& n : a.names()) os << " " << n;
  os << "\n";
  for (const auto& [x, y] : a.inverse_pairs()) os << "inverse: " << a.name(x) << " " << a.name(y) << "\n";
  os << "precedence:";
  for (Letter l : p.rules.order().precedence()) os << " " << a.name(l);
  os << "\n";
  for (const auto& r : p.rules.rules()) {
    os << "rule " << r.name << ": " << a.render(r.lhs) << " -> " << r.rhs.to_string() << "\n";
  }
  for (std::size_t i = p.rules.rules().size(); i < p.relations.size(); ++i) {
    os << "relation " << p.relations[i].name << ": " << p.relations[i].element.to_string() << " = 0\n";
  }
  return os.str();
}

std::string_view bundled_presentation_text(std::string_view name) {
  for (const auto& [n, text] : detail::kBundledPresentations) {
    if (n == name) return text;
  }
  throw PresentationMismatch("no bundled presentation named '" + std::string(name) + "'");
}

std::vector<std::string> bundled_presentation_names() {
  std::vector<std::string> out;
  for (const auto& [n, text] : detail::kBundledPresentations) out.emplace_back(n);
  return out;
}

PresentationPtr bundled_presentation(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, PresentationPtr, std::less<>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  auto p = std::make_shared<const Presentation>(parse_presentation(bundled_presentation_text(name)));
  cache.emplace(std::string(name), p);
  return p;
}

}  // namespace qons
