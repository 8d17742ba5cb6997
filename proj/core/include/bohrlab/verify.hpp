#pragma once

// Invariant batteries. Each suite produces rows in the checks schema plus a
// summary; a suite passes when none of its rows failed.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "bohrlab/csv.hpp"
#include "bohrlab/harness.hpp"
#include "bohrlab/norm_search.hpp"

namespace bohrlab {

struct SuiteOptions {
  int instances = 0;  // 0: the suite default (lemma31 500, bombal 81, polarization 200)
  Budget budget{16, 100};
  std::uint64_t seed = 7;
  /// Grid for the sandwich and arithmetic_lemma suites; a small default grid
  /// is used when unset.
  std::optional<ExperimentConfig> grid;
};

struct SuiteReport {
  std::string suite;
  int checks = 0;
  int failures = 0;
  /// max over rows of (lhs - rhs) / max(1, |rhs|); negative means slack
  double worst = -std::numeric_limits<double>::infinity();
  CsvTable rows = checks_table();
  bool passed() const { return failures == 0; }
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite id.
SuiteReport run_suite(const std::string& suite, const SuiteOptions& options = {});

SuiteReport suite_combinatorics();
SuiteReport suite_lemma31(int instances, const Budget& budget, std::uint64_t seed);
/// Polarization diagonal identity, the polarization bound on ||A|| and the
/// coefficient inequality for multilinear forms into l_2^d at p = inf.
SuiteReport suite_bombal(int instances, const Budget& budget, std::uint64_t seed);
/// Rows of run_experiment(grid) whose check name starts with prefix.
SuiteReport suite_from_grid(const std::string& suite, const std::string& prefix, const ExperimentConfig& grid);

/// Small default grid for the grid-based suites.
ExperimentConfig default_suite_grid();

}  // namespace bohrlab
