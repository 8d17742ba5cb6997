#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bohrlab/multiindex.hpp"

namespace bohrlab {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// An exponent in [1, inf]. Infinity is a distinct state, never a large
/// double, so every formula has to branch on it explicitly.
class Exponent {
 public:
  /// Throws std::invalid_argument unless 1 <= value (value may be +inf).
  explicit Exponent(double value);
  static Exponent infinity() noexcept { return Exponent(); }
  /// Accepts "inf", "infinity", "∞" or a decimal number.
  static Exponent parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  /// The exponent as a double; +inf when infinite.
  double value() const noexcept;
  /// 1/p, exactly 0 for p = inf.
  double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }
  /// Hoelder conjugate with 1' = inf and inf' = 1.
  Exponent dual() const;
  /// "inf" or the shortest round-trip decimal.
  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) noexcept {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(const Exponent& a, const Exponent& b) noexcept {
    if (a.infinite_) return false;
    return b.infinite_ || a.value_ < b.value_;
  }
  friend bool operator<=(const Exponent& a, const Exponent& b) noexcept { return !(b < a); }

 private:
  Exponent() noexcept : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

inline Exponent dual_exponent(Exponent p) { return p.dual(); }

enum class SpaceRole { domain, coefficient };

/// l_p^n, used both for polynomial domains and for coefficient spaces.
struct SpaceSpec {
  Exponent p{2.0};
  int dim = 1;
  SpaceRole role = SpaceRole::domain;

  SpaceSpec() = default;
  SpaceSpec(Exponent p_, int dim_, SpaceRole role_ = SpaceRole::domain);

  Exponent dual() const { return p.dual(); }
  /// Cot(l_q) = max(2, q); infinite for q = inf.
  Exponent cotype() const;
  bool is_hilbert() const { return dim == 1 || p == Exponent(2.0); }
  std::string label() const;
};

double lp_norm(std::span<const Complex> z, Exponent p);
double lp_norm(std::span<const double> x, Exponent p);

/// Exact maximum of |z^alpha| over the closed unit ball of l_p^n:
/// prod_i (alpha_i/m)^(alpha_i/p), and 1 for p = inf. Rejects degree 0.
double monomial_max(const MultiIndex& alpha, Exponent p);

/// Ratio (sum ||x_k||_q^q)^(1/q) / (E ||sum eps_k x_k||_q^2)^(1/2) for one
/// family. The Rademacher average is exact (all sign patterns) for families of
/// at most 12 vectors and a 4096-sample Monte Carlo average beyond.
double cotype_ratio(std::span<const CVector> family, Exponent q, std::uint64_t seed = 0);

struct CotypeEstimateOptions {
  int max_family = 8;
};

/// Best cotype ratio over `trials` random families in l_q^d. Always a lower
/// bound on C_q(l_q^d) for families of at most 12 vectors. Rejects q < 2 and
/// trials = 0.
double estimate_cotype_constant(Exponent q, int d, int trials, std::uint64_t seed,
                                const CotypeEstimateOptions& options = {});

/// Geometry constants of l_q^d. Only values that are known exactly are
/// filled in; everything else stays empty and has to be configured or
/// estimated (and is then labelled as such).
struct GeometryConstants {
  Exponent cotype{2.0};
  std::optional<double> cotype_constant;
  std::optional<double> concavity_constant;
  std::string source;
};

GeometryConstants geometry_constants(const SpaceSpec& space);

}  // namespace bohrlab
