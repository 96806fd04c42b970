#include "qons/uq_sl2hat.hpp"

#include <algorithm>
#include <sstream>

namespace qons {

namespace {

Homomorphism<ScalarMatrix> build_hom(const Presentation& p, const std::vector<ScalarMatrix>& action,
                                     std::size_t dim) {
  Homomorphism<ScalarMatrix> h(p.alphabet, ScalarMatrix::identity(dim));
  for (std::size_t i = 0; i < action.size(); ++i) h.assign(static_cast<Letter>(i), action[i]);
  return h;
}

std::vector<ScalarMatrix> order_action(const Presentation& p, const std::map<std::string, ScalarMatrix>& action) {
  std::vector<ScalarMatrix> out;
  for (const auto& name : p.alphabet->names()) {
    auto it = action.find(name);
    if (it == action.end()) throw InvalidModule("no matrix for generator '" + name + "'");
    out.push_back(it->second);
  }
  if (action.size() != out.size()) throw InvalidModule("matrix given for a letter outside the alphabet");
  return out;
}

}  // namespace

Module::Module(PresentationPtr presentation, std::vector<ScalarMatrix> action, ModuleLabel label)
    : presentation_(std::move(presentation)),
      dim_(action.empty() ? 0 : action.front().rows()),
      action_(std::move(action)),
      label_(std::move(label)),
      hom_(build_hom(*presentation_, action_, dim_)) {
  if (action_.size() != presentation_->alphabet->size()) {
    throw InvalidModule("expected one matrix per generator");
  }
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw InvalidModule("generator matrices must be square of one size");
  }
  if (!inverse_images_consistent(hom_)) throw InvalidModule("inverse letters are not mapped to inverse matrices");
  for (const auto& [name, residual] : relation_residuals()) {
    if (!residual.is_zero()) {
      throw InvalidModule("relation '" + name + "' fails on " + describe() + ": " + to_string(residual));
    }
  }
}

Module::Module(PresentationPtr presentation, const std::map<std::string, ScalarMatrix>& action, ModuleLabel label)
    : Module(presentation, order_action(*presentation, action), std::move(label)) {}

const ScalarMatrix& Module::action(std::string_view name) const {
  return action_.at(presentation_->alphabet->at(name));
}

std::string Module::describe() const {
  std::ostringstream os;
  os << presentation_->name << "-module dim " << dim_;
  for (const auto& [k, v] : label_) os << " " << k << "=" << v;
  return os.str();
}

std::vector<std::pair<std::string, ScalarMatrix>> Module::relation_residuals() const {
  std::vector<std::pair<std::string, ScalarMatrix>> out;
  for (const auto& r : presentation_->relations) out.emplace_back(r.name, hom_.apply(r.element));
  return out;
}

nlohmann::json module_to_json(const Module& m) {
  nlohmann::json j;
  const auto& p = m.presentation();
  j["presentation"] = p.name;
  const auto names = bundled_presentation_names();
  if (std::find(names.begin(), names.end(), p.name) == names.end()) j["presentation_text"] = format_presentation(p);
  j["dimension"] = m.dimension();
  j["label"] = m.label();
  nlohmann::json action = nlohmann::json::object();
  for (Letter l = 0; l < p.alphabet->size(); ++l) {
    const auto& a = m.action(l);
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).to_string());
      rows.push_back(std::move(row));
    }
    action[p.alphabet->name(l)] = std::move(rows);
  }
  j["action"] = std::move(action);
  return j;
}

Module module_from_json(const nlohmann::json& j) {
  try {
    PresentationPtr p;
    if (j.contains("presentation_text")) {
      p = std::make_shared<const Presentation>(parse_presentation(j.at("presentation_text").get<std::string>()));
    } else {
      p = bundled_presentation(j.at("presentation").get<std::string>());
    }
    const auto d = j.at("dimension").get<std::size_t>();
    std::map<std::string, ScalarMatrix> action;
    for (const auto& [name, rows] : j.at("action").items()) {
      if (rows.size() != d) throw InvalidModule("matrix for " + name + " has wrong row count");
      ScalarMatrix m(d, d);
      for (std::size_t r = 0; r < d; ++r) {
        if (rows[r].size() != d) throw InvalidModule("matrix for " + name + " has wrong column count");
        for (std::size_t c = 0; c < d; ++c) m(r, c) = parse_scalar(rows[r][c].get<std::string>());
      }
      action.emplace(name, std::move(m));
    }
    ModuleLabel label = j.value("label", ModuleLabel{});
    return Module(p, action, std::move(label));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidModule(std::string("malformed module JSON: ") + e.what());
  }
}

Sl2Matrices irrep_matrices(int n) {
  if (n < 0) throw NegativeSpinParameter("irrep(" + std::to_string(n) + ")");
  const auto d = static_cast<std::size_t>(n + 1);
  Sl2Matrices m{ScalarMatrix(d, d), ScalarMatrix(d, d), ScalarMatrix(d, d), ScalarMatrix(d, d)};
  for (std::size_t i = 0; i < d; ++i) {
    const int k = static_cast<int>(i);
    m.K(i, i) = Scalar::q_power(n - 2 * k);
    m.Kinv(i, i) = Scalar::q_power(2 * k - n);
    if (i > 0) m.E(i - 1, i) = q_integer(n - k + 1);
    if (i + 1 < d) m.F(i + 1, i) = q_integer(k + 1);
  }
  return m;
}

Module irrep(int n) {
  auto m = irrep_matrices(n);
  return Module(bundled_presentation("uq_sl2"), {m.E, m.F, m.K, m.Kinv},
                ModuleLabel{{"spin", std::to_string(n)}});
}

Module evaluation_module(int n, const Scalar& spectral) {
  auto inv = spectral.unit_inverse();
  if (!inv) throw NonInvertibleSpectralParameter(spectral.to_string());
  auto m = irrep_matrices(n);
  const auto p = bundled_presentation("uq_sl2hat");
  std::map<std::string, ScalarMatrix> a{
      {"e1", m.E}, {"f1", m.F}, {"K1", m.K}, {"K1inv", m.Kinv},
      {"e0", spectral * m.F}, {"f0", *inv * m.E}, {"K0", m.Kinv}, {"K0inv", m.K},
  };
  return Module(p, a, ModuleLabel{{"spin", std::to_string(n)}, {"spectral", spectral.to_string()}});
}

Module evaluation_module(int n) { return evaluation_module(n, Scalar::var(Var::v1)); }

AlphabetPtr doubled_alphabet(const Alphabet& a) {
  std::vector<std::string> names;
  for (const auto& n : a.names()) names.push_back(n + "_L");
  for (const auto& n : a.names()) names.push_back(n + "_R");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const char* side : {"_L", "_R"}) {
    for (const auto& [x, y] : a.inverse_pairs()) pairs.emplace_back(a.name(x) + side, a.name(y) + side);
  }
  return make_alphabet(std::move(names), std::move(pairs));
}

CoproductConvention make_coproduct(std::string name, PresentationPtr presentation,
                                   const std::map<std::string, std::string>& images) {
  CoproductConvention c{std::move(name), presentation, doubled_alphabet(*presentation->alphabet), {}};
  for (const auto& letter : presentation->alphabet->names()) {
    auto it = images.find(letter);
    if (it == images.end()) throw UnassignedLetter("coproduct image missing for '" + letter + "'");
    c.images.push_back(parse_element(it->second, c.doubled));
  }
  return c;
}

CoproductConvention default_coproduct(const PresentationPtr& presentation) {
  std::map<std::string, std::string> img;
  auto add = [&](const std::string& e, const std::string& f, const std::string& k, const std::string& kinv) {
    img[e] = e + "_L + " + k + "_L*" + e + "_R";
    img[f] = f + "_L*" + kinv + "_R + " + f + "_R";
    img[k] = k + "_L*" + k + "_R";
    img[kinv] = kinv + "_L*" + kinv + "_R";
  };
  if (presentation->name == "uq_sl2") {
    add("E", "F", "K", "Kinv");
  } else if (presentation->name == "uq_sl2hat") {
    add("e0", "f0", "K0", "K0inv");
    add("e1", "f1", "K1", "K1inv");
  } else {
    throw PresentationMismatch("no default coproduct for '" + presentation->name + "'");
  }
  return make_coproduct("default", presentation, img);
}

RuleSet doubled_rules(const Presentation& p) {
  const auto doubled = doubled_alphabet(*p.alphabet);
  const auto n = static_cast<Letter>(p.alphabet->size());
  std::vector<Letter> prec;
  for (Letter side : {Letter{0}, n}) {
    for (Letter l : p.rules.order().precedence()) prec.push_back(static_cast<Letter>(l + side));
  }
  std::vector<RewriteRule> rules;
  for (Letter side : {Letter{0}, n}) {
    Homomorphism<AlgebraElement> shift(p.alphabet, AlgebraElement(doubled, Scalar(1)));
    for (Letter l = 0; l < n; ++l) shift.assign(l, AlgebraElement::letter(doubled, static_cast<Letter>(l + side)));
    for (const auto& r : p.rules.rules()) {
      Word lhs;
      for (Letter l : r.lhs) lhs.push_back(static_cast<Letter>(l + side));
      rules.push_back({r.name + (side ? "_R" : "_L"), lhs, shift.apply(r.rhs)});
    }
  }
  for (Letter r = 0; r < n; ++r) {
    for (Letter l = 0; l < n; ++l) {
      rules.push_back({"swap", Word{static_cast<Letter>(r + n), l},
                       AlgebraElement::word(doubled, Word{l, static_cast<Letter>(r + n)})});
    }
  }
  return RuleSet(doubled, WordOrder(std::move(prec), doubled->size()), std::move(rules));
}

std::vector<std::pair<std::string, ZeroVerdict>> coproduct_relation_check(const CoproductConvention& c,
                                                                          std::size_t fuel) {
  const RuleSet rules = doubled_rules(*c.presentation);
  Homomorphism<AlgebraElement> delta(c.presentation->alphabet, AlgebraElement(c.doubled, Scalar(1)));
  for (std::size_t i = 0; i < c.images.size(); ++i) delta.assign(static_cast<Letter>(i), c.images[i]);
  std::vector<std::pair<std::string, ZeroVerdict>> out;
  for (const auto& r : c.presentation->relations) {
    out.emplace_back(r.name, certify_zero(delta.apply(r.element), rules, fuel));
  }
  return out;
}

Module tensor(const Module& m1, const Module& m2, const CoproductConvention& c) {
  if (m1.presentation().name != m2.presentation().name || m1.presentation().name != c.presentation->name) {
    throw PresentationMismatch("tensor of modules over different presentations");
  }
  const auto n = c.presentation->alphabet->size();
  const auto i1 = ScalarMatrix::identity(m1.dimension());
  const auto i2 = ScalarMatrix::identity(m2.dimension());
  Homomorphism<ScalarMatrix> h(c.doubled, ScalarMatrix::identity(m1.dimension() * m2.dimension()));
  for (std::size_t l = 0; l < n; ++l) {
    h.assign(static_cast<Letter>(l), kron(m1.action(static_cast<Letter>(l)), i2));
    h.assign(static_cast<Letter>(l + n), kron(i1, m2.action(static_cast<Letter>(l))));
  }
  std::vector<ScalarMatrix> action;
  for (const auto& img : c.images) action.push_back(h.apply(img));
  ModuleLabel label;
  label["left"] = m1.describe();
  label["right"] = m2.describe();
  label["coproduct"] = c.name;
  return Module(c.presentation, std::move(action), std::move(label));
}

Module spin_chain_module(int sites, const CoproductConvention& c) {
  if (sites < 1 || sites > 6) throw std::invalid_argument("spin chain supports 1..6 sites");
  Module m = evaluation_module(1, Scalar::var(spectral_var(1)));
  for (int s = 2; s <= sites; ++s) m = tensor(m, evaluation_module(1, Scalar::var(spectral_var(s))), c);
  return m.relabeled(ModuleLabel{{"sites", std::to_string(sites)}, {"coproduct", c.name}});
}

}  // namespace qons
