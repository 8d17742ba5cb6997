#pragma once

// Deterministic random numbers. SplitMix64 is small, splittable, and
// produces identical streams on every platform; all distributions below are
// implemented here rather than taken from <random>, whose distributions are
// implementation-defined.

#include <complex>
#include <cstdint>
#include <string_view>

namespace bohrlab {

/// Child seed for a named task. Parallel workers derive their seeds from
/// (root, path) only, so results never depend on scheduling.
std::uint64_t derive_seed(std::uint64_t root, std::string_view path);
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next_u64() noexcept;
  /// Uniform in [0, 1).
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) noexcept;
  double normal() noexcept;
  std::complex<double> complex_normal() noexcept;
  std::complex<double> unit_phase() noexcept;
  double sign() noexcept { return (next_u64() >> 63) ? 1.0 : -1.0; }

 private:
  std::uint64_t state_;
};

}  // namespace bohrlab
