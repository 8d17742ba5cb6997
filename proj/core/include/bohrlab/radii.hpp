#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bohrlab/corpus.hpp"
#include "bohrlab/majorant.hpp"
#include "bohrlab/operators.hpp"

namespace bohrlab {

enum class Quantity { K, Km, A };
std::string to_string(Quantity q);

/// A bracket [lower, upper] for one radius quantity. Each endpoint names its
/// source: a formula for the lower side, a corpus member and tolerance for
/// the upper side.
struct RadiusEstimate {
  Quantity quantity = Quantity::K;
  Exponent p{2.0};
  int n = 1;
  int m = 0;  // K_m only
  double lambda = 1.0;
  std::string op;
  double lower = 0.0;
  std::string lower_source;
  double upper = 1.0;
  std::string upper_source;
  double tol = 0.0;
  bool capped = false;
  std::uint64_t seed = 0;
};

struct RadiusOptions {
  double tol = 1e-9;
  int restarts = 16;    // inner majorant search
  int iterations = 200;
  std::uint64_t seed = 0;
};

struct FunctionRadius {
  double radius = 0.0;  // upper end of the final bisection bracket
  double lo = 0.0;      // last feasible scale
  double hi = 0.0;
  bool capped = false;
  double tail_slack = 0.0;  // truncated-tail majorant at the radius
  int iterations = 0;
};

/// Largest r in [0, 1] with sup_{||x||_p <= 1, x >= 0} M(r x) <= lambda ||f||,
/// where M is the majorant with weights ||V c_alpha|| and ||f|| is the
/// member's recorded lower norm. The inner sup is an ascent lower bound, so
/// the predicate is optimistic and the radius overestimates the true one.
/// Rejects tol <= 0, lambda <= 0 and members with zero recorded norm.
FunctionRadius function_bohr_radius(const CorpusMember& f, const OperatorModel& V, double lambda,
                                    const RadiusOptions& options);

struct CorpusRadius {
  double value = 1.0;
  std::string argmin;
  bool capped = false;
  double tol = 0.0;
  std::vector<FunctionRadius> members;
};

/// min over the corpus of function_bohr_radius.
CorpusRadius estimate_K_upper(const std::vector<CorpusMember>& corpus, const OperatorModel& V, double lambda,
                              const RadiusOptions& options);

struct KmEstimate {
  double raw = 0.0;     // lambda^(1/m) * min_P (||P||_upper / S_lower(P))^(1/m)
  double capped = 0.0;  // min(raw, 1)
  std::string argmin;
  int m = 0;
};

/// Upper estimate for K_m. Uses a certified upper bound for ||P|| and an
/// ascent lower bound for the majorant sup S(P), which is the pairing that
/// makes each ratio an upper bound. Exact lambda scaling: the lambda factor
/// is applied once to the lambda = 1 value.
KmEstimate estimate_Km_upper(const std::vector<CorpusMember>& corpus, const OperatorModel& V, double lambda,
                             const RadiusOptions& options);

struct SandwichReport {
  double k_upper = 0.0;
  double km_lower = 0.0;        // lower bound on inf_m K_m(., lambda)
  double km_lower_unit = 0.0;   // lower bound on inf_m K_m(., 1)
  double lower_main = 0.0;      // (lambda-||V||)/(2 lambda-||V||) km_lower
  double lower_unit = 0.0;      // (lambda-||V||)/(lambda-||V||+1) km_lower_unit
  double slack = 0.0;           // k_upper - max(lower_main, lower_unit)
  bool passed = false;
};

/// Checks the lower half of the K-vs-K_m sandwich against a corpus upper
/// estimate. Throws if ||V|| >= lambda.
SandwichReport sandwich_check(double k_upper, double km_lower, double km_lower_unit, double opnorm,
                              double lambda);

}  // namespace bohrlab
