#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohrlab/norm_search.hpp"
#include "bohrlab/spaces.hpp"

namespace bohrlab {

enum class OperatorKind { identity, inclusion, diagonal, general };

std::string to_string(OperatorKind kind);

/// A d' x d complex matrix read as a map l_r^d -> l_q^d'.
class OperatorModel {
 public:
  static OperatorModel identity(SpaceSpec space);
  /// The scalar field C with the identity map.
  static OperatorModel scalar();
  static OperatorModel inclusion(Exponent r, Exponent q, int d);
  static OperatorModel diagonal(std::vector<Complex> diag, Exponent r, Exponent q);
  /// rows[i][j], i < d' (target), j < d (source).
  static OperatorModel general(std::vector<CVector> rows, SpaceSpec source, SpaceSpec target);

  /// "scalar", "identity:<p>:<d>", "inclusion:<r>:<q>:<d>",
  /// "diagonal:<r>:<q>:<v1>,<v2>,..." or a JSON object
  /// {kind, source:{p,d}, target:{p,d}, diag?, matrix?: [[[re,im],...],...]}.
  static OperatorModel parse(const std::string& spec);
  static OperatorModel from_json(const std::string& json_text);

  OperatorKind kind() const noexcept { return kind_; }
  const SpaceSpec& source() const noexcept { return source_; }
  const SpaceSpec& target() const noexcept { return target_; }
  int rows() const noexcept { return target_.dim; }
  int cols() const noexcept { return source_.dim; }
  Complex entry(int i, int j) const { return matrix_[static_cast<std::size_t>(i * cols() + j)]; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  CVector apply(std::span<const Complex> x) const;
  /// ||V x||_q without materializing V x for identity-like kinds.
  double image_norm(std::span<const Complex> x) const;

 private:
  OperatorModel(OperatorKind kind, SpaceSpec source, SpaceSpec target, std::vector<Complex> matrix);
  OperatorKind kind_;
  SpaceSpec source_;
  SpaceSpec target_;
  std::vector<Complex> matrix_;  // row-major d' x d
  std::string label_;
};

struct NormBracket {
  double lower = 0.0;
  double upper = 0.0;
  std::string upper_source;
};

/// Closed-form upper bound: exact for identity, inclusion and diagonal; for
/// general matrices the better of the factorizations through l_1 and l_inf.
double operator_norm_upper(const OperatorModel& V, std::string* source = nullptr);

/// lower = ascent value of ||Vx||_q over ||x||_r <= 1, upper = closed form.
/// Throws std::logic_error if lower exceeds upper beyond rounding.
NormBracket operator_norm(const OperatorModel& V, const Budget& budget, std::uint64_t seed);

/// (sum ||V x_j||^r)^(1/r) / sup_{||x*|| <= 1} sum |x*(x_j)| for one family.
/// The denominator is bounded from above with certified slack, so the ratio
/// never overstates the true one.
double summing_ratio(const OperatorModel& V, std::span<const CVector> family, Exponent r);

/// Best summing_ratio over singletons of basis vectors and `trials` random
/// families. A lower bound on pi_{r,1}(V). Rejects r < 1 (through Exponent)
/// and trials < 0.
double summing_lower(const OperatorModel& V, Exponent r, int trials, std::uint64_t seed);

/// Random families shared across exponents (used to test monotonicity in r).
std::vector<std::vector<CVector>> sample_families(const OperatorModel& V, int trials, std::uint64_t seed);

/// 1/r = 1 - |1/q - 1/2|, defined for 1 <= q < inf.
Exponent kwapien_exponent(Exponent q);
/// 1/s = 1/2 + 1/r - max(1/q, 1/2), defined for 1 <= r < q < inf.
Exponent bennett_carl_exponent(Exponent r, Exponent q);

}  // namespace bohrlab
