#include "bohrlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "bohrlab/bounds.hpp"
#include "bohrlab/operators.hpp"
#include "bohrlab/polynomial_io.hpp"
#include "bohrlab/radii.hpp"
#include "bohrlab/rng.hpp"

namespace bohrlab {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!allowed.count(it.key())) throw std::invalid_argument("unknown key '" + it.key() + "' in " + where);
  }
}

Exponent exponent_from_json(const json& v) {
  if (v.is_string()) return Exponent::parse(v.get<std::string>());
  if (v.is_number()) return Exponent(v.get<double>());
  throw std::invalid_argument("exponent must be a number or \"inf\"");
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

std::vector<double> split_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto k = s.find(sep, start);
    out.push_back(s.substr(start, k - start));
    if (k == std::string::npos) break;
    start = k + 1;
  }
  return out;
}

CorpusSpec corpus_from_json(const json& j) {
  if (j.is_string()) return parse_corpus_spec(j.get<std::string>());
  reject_unknown(j, {"family", "a", "truncation", "ensemble", "degrees", "count", "density", "path"}, "corpus entry");
  CorpusSpec c;
  c.family = j.at("family").get<std::string>();
  if (j.contains("a")) {
    const auto& a = j["a"];
    if (a.is_array()) {
      c.a = a.get<std::vector<double>>();
    } else {
      reject_unknown(a, {"lo", "hi", "step"}, "corpus a-grid");
      c.a = a_grid(a.at("lo").get<double>(), a.at("hi").get<double>(), a.at("step").get<double>());
    }
  }
  if (j.contains("truncation")) c.truncation = j["truncation"].get<int>();
  if (j.contains("ensemble")) c.ensemble = parse_ensemble(j["ensemble"].get<std::string>());
  if (j.contains("degrees")) c.degrees = j["degrees"].get<std::vector<int>>();
  if (j.contains("count")) c.count = j["count"].get<int>();
  if (j.contains("density")) c.density = j["density"].get<double>();
  if (j.contains("path")) c.path = j["path"].get<std::string>();
  return c;
}

std::string b01(bool b) { return b ? "1" : "0"; }

}  // namespace

CorpusSpec parse_corpus_spec(const std::string& spec) {
  const auto parts = split(spec, ':');
  CorpusSpec c;
  const std::string& fam = parts[0];
  if (fam == "mobius" || fam == "mobius_axis") {
    c.family = "mobius_axis";
    if (parts.size() == 2) {
      c.a = split_doubles(parts[1]);
    } else if (parts.size() == 4 || parts.size() == 5) {
      c.a = a_grid(std::stod(parts[1]), std::stod(parts[2]), std::stod(parts[3]));
      if (parts.size() == 5) c.truncation = std::stoi(parts[4]);
    } else {
      throw std::invalid_argument("mobius corpus spec is mobius:lo:hi:step[:truncation] or mobius:a1,a2,...");
    }
  } else if (fam == "random") {
    if (parts.size() != 4) throw std::invalid_argument("random corpus spec is random:<ensemble>:<degrees>:<count>");
    c.family = "random";
    c.ensemble = parse_ensemble(parts[1]);
    c.degrees = split_ints(parts[2]);
    c.count = std::stoi(parts[3]);
  } else if (fam == "coordinate") {
    c.family = "coordinate";
  } else if (fam == "file") {
    if (parts.size() < 2) throw std::invalid_argument("file corpus spec is file:<path>");
    c.family = "file";
    c.path = spec.substr(5);
  } else {
    throw std::invalid_argument("unknown corpus family in '" + spec + "'");
  }
  return c;
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(j, {"seed", "workers", "grid", "operators", "corpus", "budget", "majorant", "tol", "arithmetic",
                     "sandwich", "km", "cotype_constants", "out"},
                 "config");
  ExperimentConfig c;
  try {
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("workers")) c.workers = j["workers"].get<int>();
    if (j.contains("grid")) {
      const auto& g = j["grid"];
      reject_unknown(g, {"p", "n", "lambda"}, "grid");
      if (g.contains("p")) {
        c.p.clear();
        for (const auto& v : g["p"]) c.p.push_back(exponent_from_json(v));
      }
      if (g.contains("n")) c.n = g["n"].get<std::vector<int>>();
      if (g.contains("lambda")) c.lambda = g["lambda"].get<std::vector<double>>();
    }
    if (j.contains("operators")) c.operators = j["operators"].get<std::vector<std::string>>();
    if (j.contains("corpus")) {
      for (const auto& e : j["corpus"]) c.corpus.push_back(corpus_from_json(e));
    }
    if (j.contains("budget")) {
      reject_unknown(j["budget"], {"restarts", "iterations"}, "budget");
      c.norm_budget.restarts = j["budget"].value("restarts", c.norm_budget.restarts);
      c.norm_budget.iterations = j["budget"].value("iterations", c.norm_budget.iterations);
    }
    if (j.contains("majorant")) {
      reject_unknown(j["majorant"], {"restarts", "iterations"}, "majorant");
      c.majorant_restarts = j["majorant"].value("restarts", c.majorant_restarts);
      c.majorant_iterations = j["majorant"].value("iterations", c.majorant_iterations);
    }
    if (j.contains("tol")) c.tol = j["tol"].get<double>();
    if (j.contains("arithmetic")) {
      const auto& a = j["arithmetic"];
      if (a.is_boolean()) {
        c.arithmetic = a.get<bool>();
      } else {
        reject_unknown(a, {"enabled", "restarts", "sweeps", "r_cap", "tol"}, "arithmetic");
        c.arithmetic = a.value("enabled", true);
        auto& o = c.arithmetic_options;
        o.restarts = a.value("restarts", o.restarts);
        o.sweeps = a.value("sweeps", o.sweeps);
        o.r_cap = a.value("r_cap", o.r_cap);
        o.tol = a.value("tol", o.tol);
      }
    }
    if (j.contains("sandwich")) c.sandwich = j["sandwich"].get<bool>();
    if (j.contains("km")) {
      const auto& k = j["km"];
      reject_unknown(k, {"degrees", "count", "ensemble"}, "km");
      c.km_degrees = k.value("degrees", std::vector<int>{});
      c.km_count = k.value("count", c.km_count);
      if (k.contains("ensemble")) c.km_ensemble = parse_ensemble(k["ensemble"].get<std::string>());
    }
    if (j.contains("cotype_constants")) c.cotype_constants = j["cotype_constants"].get<std::map<std::string, double>>();
    if (j.contains("out")) c.out = j["out"].get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  c.validate();
  return c;
}

ExperimentConfig ExperimentConfig::load(const std::string& path) { return from_json_text(read_text_file(path)); }

void ExperimentConfig::validate() const {
  if (p.empty() || n.empty() || lambda.empty() || operators.empty()) throw std::invalid_argument("grid has an empty axis");
  for (int v : n) {
    if (v < 1) throw std::invalid_argument("grid n must be >= 1");
  }
  for (double l : lambda) {
    if (!(l > 0.0) || !std::isfinite(l)) throw std::invalid_argument("grid lambda must be positive and finite");
  }
  for (const auto& op : operators) (void)OperatorModel::parse(op);
  if (corpus.empty()) throw std::invalid_argument("config needs at least one corpus entry");
  if (!(tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (norm_budget.restarts < 1 || norm_budget.iterations < 1 || majorant_restarts < 1 || majorant_iterations < 1) {
    throw std::invalid_argument("budgets must be >= 1");
  }
  for (int m : km_degrees) {
    if (m < 1) throw std::invalid_argument("km degrees must be >= 1");
  }
  if (workers < 0) throw std::invalid_argument("workers must be >= 0");
}

CsvTable radii_table() {
  return CsvTable("radii", {"quantity", "p", "n", "m", "lambda", "operator", "lower", "lower_source", "upper",
                            "upper_source", "tol", "capped", "seed"});
}
CsvTable bounds_table() {
  return CsvTable("bounds", {"theorem", "direction", "p", "n", "lambda", "operator", "value", "constants_used"});
}
CsvTable arithmetic_table() {
  return CsvTable("arithmetic", {"p", "n", "lambda", "operator", "mean_lower", "method", "capped_coords", "seed"});
}
CsvTable checks_table() {
  return CsvTable("checks", {"check", "p", "n", "m", "lambda", "operator", "lhs", "rhs", "passed", "detail"});
}

void ExperimentResult::write(const std::string& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory '" + dir + "': " + ec.message());
  const std::filesystem::path d(dir);
  radii.write((d / "radii.csv").string());
  bounds.write((d / "bounds.csv").string());
  arithmetic.write((d / "arithmetic.csv").string());
  checks.write((d / "checks.csv").string());
}

std::uint64_t group_seed(std::uint64_t root, Exponent p, int n, const std::string& op) {
  return derive_seed(root, "p=" + p.to_string() + "/n=" + std::to_string(n) + "/op=" + op);
}

namespace {

struct Group {
  Exponent p;
  int n;
  std::string op;
};

struct GroupOutput {
  ExperimentResult res;
  std::exception_ptr error;
};

class Point {
 public:
  Point(ExperimentResult& r, const Group& g, double lambda) : r_(r), g_(g), lambda_(format_double(lambda)) {}

  void check(const std::string& name, int m, double lhs, double rhs, bool passed, const std::string& detail = "") {
    r_.checks.add_row({name, g_.p.to_string(), std::to_string(g_.n), std::to_string(m), lambda_, g_.op,
                       format_double(lhs), format_double(rhs), b01(passed), detail});
    if (!passed) ++r_.failures;
  }
  void radius(Quantity q, int m, double lower, const std::string& lower_src, double upper,
              const std::string& upper_src, double tol, bool capped, std::uint64_t seed) {
    r_.radii.add_row({to_string(q), g_.p.to_string(), std::to_string(g_.n), std::to_string(m), lambda_, g_.op,
                      format_double(lower), lower_src, format_double(upper), upper_src, format_double(tol),
                      b01(capped), std::to_string(seed)});
    check("radius_bracket:" + to_string(q), m, lower, upper, lower <= upper);
  }
  void bound(const BoundValue& b) {
    r_.bounds.add_row({b.theorem, to_string(b.direction), g_.p.to_string(), std::to_string(g_.n), lambda_, g_.op,
                       format_double(b.value), b.constants_used});
  }
  void arith(double mean, const std::string& method, int capped, std::uint64_t seed) {
    r_.arithmetic.add_row({g_.p.to_string(), std::to_string(g_.n), lambda_, g_.op, format_double(mean), method,
                           std::to_string(capped), std::to_string(seed)});
  }

 private:
  ExperimentResult& r_;
  const Group& g_;
  std::string lambda_;
};

}  // namespace

BoundContext bound_context(Exponent p, int n, double lambda, const OperatorModel& V,
                           const std::map<std::string, double>& cotype_constants) {
  BoundContext ctx;
  ctx.p = p;
  ctx.n = n;
  ctx.lambda = lambda;
  ctx.opnorm = operator_norm_upper(V);
  ctx.identity = V.kind() == OperatorKind::identity;
  ctx.source = V.source();
  ctx.target = V.target();
  if (auto it = cotype_constants.find(V.source().label()); it != cotype_constants.end()) {
    ctx.source_cotype_constant = it->second;
  }
  if (auto it = cotype_constants.find(V.target().label()); it != cotype_constants.end()) {
    ctx.target_cotype_constant = it->second;
  }
  return ctx;
}

BestLower best_k_lower(const BoundContext& ctx) {
  BestLower best;
  for (const auto& b : k_lower_bounds(ctx)) {
    if (b.value > best.value) best = {b.value, b.theorem};
  }
  if (ctx.lambda == 1.0 && !(ctx.source.dim == 1 && ctx.identity)) best.source += ";no positivity guarantee";
  return best;
}

namespace {

void run_group(const ExperimentConfig& cfg, const Group& g, ExperimentResult& out) {
  const OperatorModel V = OperatorModel::parse(g.op);
  SpaceSpec X = V.source();
  X.role = SpaceRole::coefficient;
  const std::uint64_t gseed = group_seed(cfg.seed, g.p, g.n, g.op);
  const auto corpus = build_corpus(cfg.corpus, g.p, g.n, X, cfg.norm_budget, derive_seed(gseed, "corpus"));
  std::vector<std::pair<int, std::vector<CorpusMember>>> km_corpora;
  for (int m : cfg.km_degrees) {
    CorpusSpec s;
    s.family = "random";
    s.ensemble = cfg.km_ensemble;
    s.degrees = {m};
    s.count = cfg.km_count;
    km_corpora.emplace_back(m, build_corpus({s}, g.p, g.n, X, cfg.norm_budget, derive_seed(gseed, "km")));
  }
  std::string opnorm_source;
  const double opnorm = operator_norm_upper(V, &opnorm_source);

  BoundContext ctx = bound_context(g.p, g.n, 1.0, V, cfg.cotype_constants);
  ctx.opnorm = opnorm;

  RadiusOptions ro;
  ro.tol = cfg.tol;
  ro.restarts = cfg.majorant_restarts;
  ro.iterations = cfg.majorant_iterations;
  ro.seed = derive_seed(gseed, "radius");

  for (std::size_t li = 0; li < cfg.lambda.size(); ++li) {
    const double lambda = cfg.lambda[li];
    Point pt(out, g, lambda);
    ctx.lambda = lambda;

    // K
    const auto kr = estimate_K_upper(corpus, V, lambda, ro);
    const auto lowers = k_lower_bounds(ctx);
    for (const auto& b : formula_table(ctx)) pt.bound(b);
    for (const auto& b : lowers) {
      pt.check("ordering:" + b.theorem, 0, b.value, kr.value, b.value <= kr.value, "upper=corpus:" + kr.argmin);
    }
    const auto best = best_k_lower(ctx);
    double tail = 0.0;
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      if (corpus[k].id == kr.argmin) tail = kr.members[k].tail_slack;
    }
    pt.radius(Quantity::K, 0, best.value, best.source, kr.value, "corpus:" + kr.argmin, cfg.tol + tail, kr.capped, gseed);

    // sandwich
    if (cfg.sandwich && opnorm < lambda) {
      const auto s = sandwich_check(kr.value, km_lower_cauchy(g.n, lambda, opnorm), km_lower_cauchy(g.n, 1.0, opnorm),
                                    opnorm, lambda);
      pt.check("sandwich", 0, std::max(s.lower_main, s.lower_unit), s.k_upper, s.passed,
               "main=" + format_double(s.lower_main) + ";unit=" + format_double(s.lower_unit));
    }

    // K_m
    for (const auto& [m, kc] : km_corpora) {
      const auto km = estimate_Km_upper(kc, V, lambda, ro);
      const double lo = km_lower_cauchy_degree(g.n, m, lambda, opnorm);
      pt.radius(Quantity::Km, m, lo, "cauchy_coefficient", km.capped, "corpus:" + km.argmin, 0.0, km.raw >= 1.0,
                gseed);
      const auto kk = estimate_K_upper(kc, V, lambda, ro);
      pt.check("km_vs_k", m, kk.value, km.capped, kk.value <= km.capped * (1.0 + 1e-12),
               "K over the degree-m corpus vs K_m estimate");
    }

    // arithmetic
    if (cfg.arithmetic) {
      const ArithmeticProblem prob(corpus, V, lambda);
      ArithmeticOptions ao = cfg.arithmetic_options;
      ao.seed = derive_seed(gseed, "arith/" + std::to_string(li));
      const auto res = maximize_mean(prob, ao);
      pt.arith(res.mean, res.method, res.capped_coords, ao.seed);
      pt.radius(Quantity::A, 0, res.mean, "maximize_mean:" + res.method, std::numeric_limits<double>::infinity(),
                "none", 0.0, res.capped_coords > 0, ao.seed);
      if (kr.value > 0.0) {
        const auto c = constructive_lower(kr.value, g.p, g.n);
        const auto cc = prob.check(c);
        pt.arith(c.mean(), "constructive", 0, ao.seed);
        pt.check("arithmetic_constructive_feasible", 0, -cc.slack, 0.0, cc.feasible, "worst=" + cc.worst);
        pt.check("arithmetic_lemma", 0, c.mean() - 1e-9, res.mean, c.mean() - 1e-9 <= res.mean);
      }
      if (g.n == 1) {
        const double diff = std::abs(res.mean - kr.value);
        const double allowed = cfg.tol + 1e-12;
        pt.check("arithmetic_n1", 0, diff, allowed, diff <= allowed);
      }
    }
  }
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, int workers) {
  config.validate();
  std::vector<Group> groups;
  for (const auto& p : config.p) {
    for (int n : config.n) {
      for (const auto& op : config.operators) groups.push_back({p, n, op});
    }
  }
  std::vector<GroupOutput> outs(groups.size());
  int w = workers >= 0 ? workers : config.workers;
  if (w == 0) w = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  w = std::min<int>(w, static_cast<int>(groups.size()));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= groups.size()) return;
      try {
        run_group(config, groups[k], outs[k].res);
      } catch (...) {
        outs[k].error = std::current_exception();
      }
    }
  };
  if (w <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < w; ++i) pool.emplace_back(work);
  }

  ExperimentResult all;
  for (auto& o : outs) {
    if (o.error) std::rethrow_exception(o.error);
    all.radii.append(o.res.radii);
    all.bounds.append(o.res.bounds);
    all.arithmetic.append(o.res.arithmetic);
    all.checks.append(o.res.checks);
    all.failures += o.res.failures;
  }
  return all;
}

}  // namespace bohrlab
