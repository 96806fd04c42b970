#include "suites.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <functional>
#include <random>
#include <thread>

#include "qons/coideal.hpp"
#include "qons/davies.hpp"
#include "qons/errors.hpp"
#include "qons/onsager.hpp"

namespace qons::cli {

namespace {

struct Settings {
  std::string suite;
  std::vector<int> spins;
  std::vector<Scalar> spectral;
  int tensor_depth = 2;
  int degree = 1;
  std::size_t fuel = kDefaultFuel;
  int window = 5;
  std::optional<Scalar> rho;
  mpq_class dg_constant = 16;
  int exchange_power = 2;
  bool perturb_g1 = false;
  EvaluationPoint bindings;
  int samples = 100;
  std::uint64_t seed = 1;
};

Settings resolve(const SuiteConfig& c) {
  Settings s;
  s.suite = *c.suite;
  if (s.suite == "affine-presentation") {
    s.spins = {1, 2, 3};
  } else if (s.suite == "davies-kernel" || s.suite == "aw3-fit") {
    s.spins = {1};
    s.degree = 3;
    s.tensor_depth = 0;
  } else {
    s.spins = {1, 2};
    s.degree = 1;
  }
  if (c.spins) s.spins = *c.spins;
  std::vector<std::string> spectral = c.spectral.value_or(std::vector<std::string>{"v"});
  if (spectral.size() != 1 && spectral.size() != s.spins.size()) {
    throw ConfigError("spectral needs one entry or one per spin");
  }
  for (std::size_t i = 0; i < s.spins.size(); ++i) s.spectral.push_back(parse_scalar(spectral[spectral.size() == 1 ? 0 : i]));
  if (c.tensor_depth) s.tensor_depth = *c.tensor_depth;
  if (c.degree) s.degree = *c.degree;
  if (c.fuel) s.fuel = *c.fuel;
  if (c.window) s.window = *c.window;
  if (c.rho) s.rho = parse_scalar(*c.rho);
  if (c.dg_constant) s.dg_constant = mpq_class(*c.dg_constant);
  if (c.exchange_power) s.exchange_power = *c.exchange_power;
  if (c.perturb_g1) s.perturb_g1 = *c.perturb_g1;
  if (c.bindings) {
    for (const auto& [name, value] : *c.bindings) s.bindings.set(*parse_var_name(name), mpq_class(value));
  }
  if (c.samples) s.samples = *c.samples;
  if (c.seed) s.seed = *c.seed;
  return s;
}

const PresentationPtr& affine() {
  static const PresentationPtr p = bundled_presentation("uq_sl2hat");
  return p;
}

Module bind(const Module& m, const EvaluationPoint& p) {
  if (p.empty()) return m;
  std::vector<ScalarMatrix> action;
  for (const auto& a : m.actions()) action.push_back(specialize(a, p));
  ModuleLabel label = m.label();
  label["bindings"] = p.to_string();
  return Module(m.presentation_ptr(), std::move(action), std::move(label));
}

QOAParams params(const Settings& s) { return QOAParams{}.specialized(s.bindings); }

Scalar rho_of(const Settings& s) { return s.rho ? s.rho->specialize(s.bindings) : params(s).rho(); }

struct TaskResult {
  std::vector<Certificate> certificates;
  nlohmann::json report;  // merged under reports[key] when not null
  std::string key;
};

using Task = std::function<TaskResult()>;

TaskResult single(Certificate c) { return {{std::move(c)}, nullptr, {}}; }

std::vector<TaskResult> run_tasks(const std::vector<Task>& tasks, unsigned jobs) {
  std::vector<TaskResult> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

Certificate tagged(Certificate c, const std::string& module) {
  c.bindings["module"] = module;
  return c;
}

Certificate coideal_certificate(const CoidealReport& rep, std::string identity) {
  Certificate cert;
  cert.identity = std::move(identity);
  cert.engine = Engine::linear_algebra;
  cert.bindings["module"] = rep.modules;
  cert.bindings["convention"] = rep.convention;
  cert.bindings["side"] = to_string(CoidealSide::right);
  cert.bindings["span_dimension"] = std::to_string(rep.span_right);
  cert.bindings["ambient_dimension"] = std::to_string(rep.ambient_right);
  for (const auto& m : rep.members) {
    if (m.side != CoidealSide::right) continue;
    ResidualComponent rc{"Delta(" + m.generator + ") in U (x) B", {}};
    if (!m.member) rc.entries.push_back("outside the span of B on the right factor");
    cert.residuals.push_back(std::move(rc));
  }
  if (rep.vacuous(CoidealSide::right)) {
    cert.residuals.push_back({"span of B is proper", {"vacuous: span fills the right factor"}, false});
  }
  cert.finalize();
  return cert;
}

// Spin-1/2 (x) spin-1 at independent spectral parameters. On a spin-1/2
// right factor the degree-1 span already fills End(V), so the test is vacuous.
std::pair<Module, Module> coideal_factors(const Settings& s) {
  return {bind(evaluation_module(1), s.bindings), bind(evaluation_module(2, Scalar::var(Var::v2)), s.bindings)};
}

std::vector<Task> classical_onsager(const Settings& s) {
  std::vector<Task> tasks;
  tasks.push_back([s] {
    Certificate c = check_dolan_grady(loop_A(0), loop_A(1), s.dg_constant);
    c.bindings["carrier"] = "loop";
    return single(std::move(c));
  });
  tasks.push_back([s] {
    Certificate c = check_dolan_grady(loop_matrix(loop_A(0)), loop_matrix(loop_A(1)), s.dg_constant);
    c.bindings["carrier"] = "2x2 matrices over Q[t, t^-1]";
    return single(std::move(c));
  });
  tasks.push_back([s] {
    auto fam = loop_family(s.window);
    if (s.perturb_g1) fam.G[1] += LoopElement::H(0);
    Certificate c = check_second_presentation(fam, s.window);
    if (s.perturb_g1) c.bindings["perturbation"] = "G_1 += H";
    return single(std::move(c));
  });
  return tasks;
}

std::vector<Task> qdg_coideal(const Settings& s) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < s.spins.size(); ++i) {
    tasks.push_back([s, i] {
      const Module m = bind(evaluation_module(s.spins[i], s.spectral[i]), s.bindings);
      const auto w = qoa_image(params(s));
      return single(tagged(check_qdg(m.represent(w.W0), m.represent(w.W1), rho_of(s)), m.describe()));
    });
  }
  if (s.tensor_depth >= 2) {
    tasks.push_back([s] {
      const Module m = bind(spin_chain_module(s.tensor_depth, default_coproduct(affine())), s.bindings);
      const auto w = qoa_image(params(s));
      return single(tagged(check_qdg(m.represent(w.W0), m.represent(w.W1), rho_of(s)), m.describe()));
    });
    tasks.push_back([s] {
      const auto [m1, m2] = coideal_factors(s);
      const auto w = qoa_image(params(s));
      const auto rep = check_coideal_on_modules({{"W0", w.W0}, {"W1", w.W1}}, word_span({w.W0, w.W1}, s.degree),
                                                default_coproduct(affine()), m1, m2);
      return TaskResult{{coideal_certificate(rep, "q-onsager-coideal")}, rep.to_json(), "coideal"};
    });
  }
  return tasks;
}

std::vector<Task> augmented_coideal(const Settings& s) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < s.spins.size(); ++i) {
    tasks.push_back([s, i] {
      const Module m = bind(evaluation_module(s.spins[i], s.spectral[i]), s.bindings);
      const auto a = augmented_image(params(s));
      return single(tagged(check_augmented(m.represent(a.K0), m.represent(a.K1), m.represent(a.Z1),
                                           m.represent(a.Zt1), s.exchange_power),
                           m.describe()));
    });
  }
  if (s.tensor_depth >= 2) {
    tasks.push_back([s] {
      const auto [m1, m2] = coideal_factors(s);
      const auto a = augmented_image(params(s));
      const auto rep =
          check_coideal_on_modules({{"K0", a.K0}, {"K1", a.K1}, {"Z1", a.Z1}, {"Zt1", a.Zt1}},
                                   word_span({a.K0, a.K1, a.Z1, a.Zt1}, s.degree),
                                   default_coproduct(affine()), m1, m2);
      return TaskResult{{coideal_certificate(rep, "augmented-coideal")}, rep.to_json(), "coideal"};
    });
  }
  return tasks;
}

std::vector<Task> affine_presentation(const Settings& s) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < s.spins.size(); ++i) {
    tasks.push_back([s, i] {
      const Module m = bind(evaluation_module(s.spins[i], s.spectral[i]), s.bindings);
      return single(tagged(matrix_certificate("affine-chevalley-relations", m.relation_residuals()), m.describe()));
    });
  }
  if (s.tensor_depth >= 2) {
    tasks.push_back([s] {
      const Module m = bind(spin_chain_module(s.tensor_depth, default_coproduct(affine())), s.bindings);
      return single(tagged(matrix_certificate("affine-chevalley-relations", m.relation_residuals()), m.describe()));
    });
  }
  tasks.push_back([s] {
    const auto c = default_coproduct(affine());
    Certificate cert;
    cert.identity = "coproduct-respects-relations";
    cert.engine = Engine::rewrite;
    cert.bindings["convention"] = c.name;
    cert.bindings["fuel"] = std::to_string(s.fuel);
    for (const auto& [name, v] : coproduct_relation_check(c, s.fuel)) {
      ResidualComponent rc{"Delta(" + name + ")", {}};
      if (v != ZeroVerdict::Zero) {
        rc.conclusive = false;
        rc.entries.push_back("normal form did not reach 0");
      }
      cert.residuals.push_back(std::move(rc));
    }
    cert.finalize();
    return single(std::move(cert));
  });
  return tasks;
}

std::vector<Task> davies_kernel(const Settings& s) {
  std::vector<Task> tasks;
  // Index spins.size() stands for the tensor_depth-site spin chain.
  const std::size_t count = s.spins.size() + (s.tensor_depth >= 2 ? 1 : 0);
  for (std::size_t i = 0; i < count; ++i) {
    tasks.push_back([s, i] {
      const Module m = bind(i < s.spins.size() ? evaluation_module(s.spins[i], s.spectral[i])
                                               : spin_chain_module(s.tensor_depth, default_coproduct(affine())),
                            s.bindings);
      const auto w = qoa_image(params(s));
      const ScalarMatrix w0 = m.represent(w.W0), w1 = m.represent(w.W1);
      KernelOptions opts;
      opts.seed = s.seed;
      const KernelReport k = kernel_basis(w0, w1, s.degree, m.describe(), std::nullopt, opts);
      Homomorphism<ScalarMatrix> h(davies_alphabet(), ScalarMatrix::identity(m.dimension()));
      h.assign("W0", w0).assign("W1", w1);
      Certificate cert;
      cert.identity = "davies-kernel";
      cert.engine = Engine::linear_algebra;
      cert.bindings["module"] = m.describe();
      cert.bindings["degree"] = std::to_string(s.degree);
      cert.bindings["mode"] = k.mode;
      cert.bindings["kernel_dimension"] = std::to_string(k.kernel_dimension);
      for (std::size_t j = 0; j < k.basis.size(); ++j) {
        ResidualComponent rc{"kernel vector " + std::to_string(j) + " acts as 0", {}};
        if (k.mode == "symbolic") {
          rc.entries = nonzero_entries(h.apply(k.basis[j]));
        } else {
          rc.conclusive = false;
          rc.entries.push_back("kernel computed at rational points only");
        }
        cert.residuals.push_back(std::move(rc));
      }
      cert.finalize();
      return TaskResult{{std::move(cert)}, k.to_json(), "kernel:" + m.describe()};
    });
  }
  return tasks;
}

std::vector<Task> aw3_fit(const Settings& s) {
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < s.spins.size(); ++i) {
    tasks.push_back([s, i] {
      const Module m = bind(evaluation_module(s.spins[i], s.spectral[i]), s.bindings);
      const auto w = qoa_image(params(s));
      const FitResult f = fit_relation(m.represent(w.W0), m.represent(w.W1), aw3_target(), default_aw3_basis());
      Certificate cert;
      cert.identity = "aw3-fit";
      cert.engine = Engine::linear_algebra;
      cert.bindings["module"] = m.describe();
      cert.bindings["target"] = aw3_target().to_string();
      cert.bindings["feasible"] = f.feasible ? "true" : "false";
      cert.residuals.push_back({"denominator*target - sum numerators*basis", nonzero_entries(f.residual)});
      if (!f.feasible) cert.residuals.push_back({"target in span of basis", {"rank increases when target is appended"}});
      cert.finalize();
      return TaskResult{{std::move(cert)}, f.to_json(), "fit:" + m.describe()};
    });
  }
  return tasks;
}

// Matrix carriers for each bundled presentation.
std::vector<std::pair<std::string, Homomorphism<ScalarMatrix>>> carriers(const Presentation& p) {
  std::vector<std::pair<std::string, Homomorphism<ScalarMatrix>>> out;
  if (p.name == "uq_sl2") {
    for (int n : {1, 2}) {
      const Module m = irrep(n);
      out.emplace_back(m.describe(), m.representation());
    }
  } else if (p.name == "uq_sl2hat") {
    for (int n : {1, 2}) {
      const Module m = evaluation_module(n);
      out.emplace_back(m.describe(), m.representation());
    }
  } else if (p.name == "qoa") {
    for (int n : {1, 2}) {
      const Module m = evaluation_module(n);
      const auto w = qoa_image();
      Homomorphism<ScalarMatrix> h(p.alphabet, ScalarMatrix::identity(m.dimension()));
      h.assign("W0", m.represent(w.W0)).assign("W1", m.represent(w.W1));
      out.emplace_back("qoa_image on " + m.describe(), std::move(h));
    }
  } else if (p.name == "augmented_qoa") {
    for (int n : {1, 2}) {
      const Module m = evaluation_module(n);
      const auto a = augmented_image();
      Homomorphism<ScalarMatrix> h(p.alphabet, ScalarMatrix::identity(m.dimension()));
      h.assign("K0", m.represent(a.K0)).assign("K1", m.represent(a.K1));
      h.assign("Z1", m.represent(a.Z1)).assign("Zt1", m.represent(a.Zt1));
      out.emplace_back("augmented_image on " + m.describe(), std::move(h));
    }
  }
  return out;
}

ResidualComponent soundness_component(std::string label, const AlgebraElement& x, const Presentation& p,
                                      const std::vector<std::pair<std::string, Homomorphism<ScalarMatrix>>>& cs,
                                      std::size_t fuel) {
  ResidualComponent rc{std::move(label), {}};
  const bool zero = certify_zero(x, p.rules, fuel) == ZeroVerdict::Zero;
  for (const auto& [name, h] : cs) {
    for (const auto& e : nonzero_entries(h.apply(x))) rc.entries.push_back(name + " " + e);
  }
  if (zero && !rc.entries.empty()) rc.entries.insert(rc.entries.begin(), "false certification");
  if (!zero && rc.entries.empty()) {
    rc.conclusive = false;
    rc.entries.push_back("rewrite inconclusive");
  }
  return rc;
}

Word random_word(std::mt19937_64& rng, std::size_t letters, int length) {
  std::uniform_int_distribution<std::size_t> pick(0, letters - 1);
  Word w;
  for (int i = 0; i < length; ++i) w.push_back(static_cast<Letter>(pick(rng)));
  return w;
}

std::vector<Task> rewrite_zero(const Settings& s) {
  std::vector<Task> tasks;
  const auto names = bundled_presentation_names();
  for (const auto& name : names) {
    tasks.push_back([s, name] {
      const auto p = bundled_presentation(name);
      const auto cs = carriers(*p);
      Certificate cert;
      cert.identity = "rewrite-zero:" + name + ":corpus";
      cert.engine = Engine::rewrite;
      cert.bindings["fuel"] = std::to_string(s.fuel);
      for (const auto& r : p->relations) cert.residuals.push_back(soundness_component(r.name, r.element, *p, cs, s.fuel));
      cert.finalize();
      return single(std::move(cert));
    });
  }
  // Consequences u * r * w with |u| + |w| <= 3, dealt round-robin over presentations.
  const int per = names.empty() ? 0 : s.samples;
  for (std::size_t k = 0; k < names.size(); ++k) {
    const int count = per / static_cast<int>(names.size()) + (static_cast<int>(k) < per % static_cast<int>(names.size()) ? 1 : 0);
    if (count == 0) continue;
    tasks.push_back([s, name = names[k], count, k] {
      const auto p = bundled_presentation(name);
      const auto cs = carriers(*p);
      std::mt19937_64 rng(s.seed * 1000003 + k);
      std::uniform_int_distribution<int> total(0, 3), coeff(-3, 3), qexp(-2, 2);
      std::uniform_int_distribution<std::size_t> rel(0, p->relations.size() - 1);
      Certificate cert;
      cert.identity = "rewrite-zero:" + name + ":consequences";
      cert.engine = Engine::rewrite;
      cert.bindings["fuel"] = std::to_string(s.fuel);
      cert.bindings["seed"] = std::to_string(s.seed);
      cert.bindings["samples"] = std::to_string(count);
      for (int i = 0; i < count; ++i) {
        const int d = total(rng);
        const int left = std::uniform_int_distribution<int>(0, d)(rng);
        const Word u = random_word(rng, p->alphabet->size(), left);
        const Word v = random_word(rng, p->alphabet->size(), d - left);
        const auto& r = p->relations[rel(rng)];
        int c = coeff(rng);
        if (c == 0) c = 1;
        const AlgebraElement x = (Scalar(c) * Scalar::q_power(qexp(rng))) *
                                 (AlgebraElement::word(p->alphabet, u) * r.element * AlgebraElement::word(p->alphabet, v));
        const std::string label = p->alphabet->render(u) + " * (" + r.name + ") * " + p->alphabet->render(v);
        cert.residuals.push_back(soundness_component(label, x, *p, cs, s.fuel));
      }
      cert.finalize();
      return single(std::move(cert));
    });
  }
  return tasks;
}

std::string file_stem(std::size_t index, const std::string& identity) {
  std::string out = (index < 10 ? "0" : "") + std::to_string(index) + "-";
  for (char ch : identity) out += std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' ? ch : '_';
  return out;
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Verified: return kExitVerified;
    case Verdict::Failed: return kExitFailed;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitFailed;
}

SuiteRun run_suite(const SuiteConfig& c, const RunOptions& opts) {
  if (!c.suite || !is_suite(*c.suite)) throw ConfigError("no valid suite selected");
  const Settings s = resolve(c);
  std::vector<Task> tasks;
  if (s.suite == "classical-onsager") tasks = classical_onsager(s);
  else if (s.suite == "qdg-coideal") tasks = qdg_coideal(s);
  else if (s.suite == "augmented-coideal") tasks = augmented_coideal(s);
  else if (s.suite == "affine-presentation") tasks = affine_presentation(s);
  else if (s.suite == "davies-kernel") tasks = davies_kernel(s);
  else if (s.suite == "aw3-fit") tasks = aw3_fit(s);
  else tasks = rewrite_zero(s);

  SuiteRun run;
  run.suite = s.suite;
  for (auto& r : run_tasks(tasks, opts.jobs)) {
    for (auto& cert : r.certificates) {
      cert.timestamp = opts.reproducible ? "" : utc_timestamp();
      run.verdict = weakest(run.verdict, cert.verdict);
      run.certificates.push_back(std::move(cert));
    }
    if (!r.report.is_null()) run.reports[r.key] = std::move(r.report);
  }
  return run;
}

std::vector<std::filesystem::path> write_outputs(const SuiteRun& run, const SuiteConfig& c,
                                                 const std::filesystem::path& dir, bool reproducible) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  nlohmann::json files = nlohmann::json::array();
  for (std::size_t i = 0; i < run.certificates.size(); ++i) {
    const auto path = dir / (file_stem(i, run.certificates[i].identity) + ".json");
    write_atomic(path, to_json(run.certificates[i]).dump(2) + "\n");
    files.push_back(path.filename().string());
    written.push_back(path);
  }
  // The output location does not affect results; keep it out of the hash.
  SuiteConfig hashed = c;
  hashed.out.reset();
  const std::string canonical = format_config(hashed);
  nlohmann::json report;
  report["suite"] = run.suite;
  report["verdict"] = to_string(run.verdict);
  report["reports"] = run.reports;
  nlohmann::json manifest;
  manifest["suite"] = run.suite;
  manifest["version"] = kToolVersion;
  manifest["config"] = canonical;
  manifest["config_hash"] = "fnv1a64:" + hex64(fnv1a64(canonical));
  manifest["certificates"] = std::move(files);
  if (!reproducible) manifest["timestamp"] = utc_timestamp();
  report["manifest"] = std::move(manifest);
  const auto path = dir / "report.json";
  write_atomic(path, report.dump(2) + "\n");
  written.push_back(path);
  return written;
}

}  // namespace qons::cli
