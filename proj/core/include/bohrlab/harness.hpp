#pragma once

// Experiment grids. A config names the grid, the operators and the corpus
// recipe; run_experiment evaluates every grid point and returns four CSV
// tables (radii, bounds, arithmetic, checks). Output depends on the config
// and root seed only, never on the worker count.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bohrlab/arithmetic.hpp"
#include "bohrlab/bounds.hpp"
#include "bohrlab/corpus.hpp"
#include "bohrlab/csv.hpp"
#include "bohrlab/norm_search.hpp"

namespace bohrlab {

struct ExperimentConfig {
  std::uint64_t seed = 1;
  int workers = 0;  // 0: hardware concurrency

  std::vector<Exponent> p{Exponent(2.0)};
  std::vector<int> n{1};
  std::vector<double> lambda{1.0};
  std::vector<std::string> operators{"scalar"};

  std::vector<CorpusSpec> corpus;
  Budget norm_budget{16, 100};
  int majorant_restarts = 8;
  int majorant_iterations = 100;
  double tol = 1e-9;

  bool arithmetic = true;
  ArithmeticOptions arithmetic_options;
  bool sandwich = true;

  // K_m: homogeneous random corpora of these degrees
  std::vector<int> km_degrees;
  int km_count = 4;
  Ensemble km_ensemble = Ensemble::unimodular;

  // cotype constants by space label ("l1^2"), for spaces without a known one
  std::map<std::string, double> cotype_constants;

  std::string out;

  /// Throws std::invalid_argument on unknown keys or an invalid grid.
  static ExperimentConfig from_json_text(const std::string& text);
  static ExperimentConfig load(const std::string& path);
  void validate() const;
};

/// "mobius:lo:hi:step[:truncation]", "mobius:a1,a2,...", "random:<ensemble>:<degrees>:<count>",
/// "coordinate", "file:<path>".
CorpusSpec parse_corpus_spec(const std::string& spec);

CsvTable radii_table();
CsvTable bounds_table();
CsvTable arithmetic_table();
CsvTable checks_table();

struct ExperimentResult {
  CsvTable radii = radii_table();
  CsvTable bounds = bounds_table();
  CsvTable arithmetic = arithmetic_table();
  CsvTable checks = checks_table();
  int failures = 0;

  /// Writes radii.csv, bounds.csv, arithmetic.csv and checks.csv into dir,
  /// creating it if needed.
  void write(const std::string& dir) const;
};

/// workers < 0 uses config.workers.
ExperimentResult run_experiment(const ExperimentConfig& config, int workers = -1);

/// Bound context for one point; cotype constants are looked up by space label.
BoundContext bound_context(Exponent p, int n, double lambda, const OperatorModel& V,
                           const std::map<std::string, double>& cotype_constants = {});

struct BestLower {
  double value = 0.0;
  std::string source = "none";
};
/// Largest entry of k_lower_bounds(ctx). At lambda = 1 outside the scalar
/// case the source is marked "no positivity guarantee".
BestLower best_k_lower(const BoundContext& ctx);

/// Seed for the (p, n, operator) group; shared by the CLI so single points
/// reproduce grid rows.
std::uint64_t group_seed(std::uint64_t root, Exponent p, int n, const std::string& op);

}  // namespace bohrlab
