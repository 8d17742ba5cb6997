#pragma once

// Test-function corpora. Each member carries the best information we have
// about its sup norm: exact for Moebius atoms, an ascent bracket otherwise.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohrlab/norm_search.hpp"
#include "bohrlab/polynomial.hpp"
#include "bohrlab/polynomial_io.hpp"

namespace bohrlab {

struct NormInfo {
  double lower = 0.0;  // value at a feasible point (or exact)
  double upper = 0.0;  // certified
  std::string source;  // "exact:moebius", "ascent", ...
};

/// Majorant of the dropped series tail, sum_{k > K} scale ratio^(k-1) r^k.
struct GeometricTail {
  double scale = 0.0;
  double ratio = 0.0;
  int first_degree = 0;  // K + 1
  double at(double r) const;
};

struct CorpusMember {
  std::string id;
  VectorPolynomial polynomial;
  NormInfo norm;
  std::optional<GeometricTail> tail;
};

/// f_a(z_v) = (a - z_v)/(1 - a z_v) = a - (1-a^2) sum_k a^(k-1) z_v^k truncated
/// at degree K, valued along e_1 of the codomain. Its sup norm over any l_p
/// ball is 1 (|z_v| <= 1 there), which is what the member records.
CorpusMember mobius_axis(Exponent p, int n, const SpaceSpec& codomain, double a, int truncation,
                         int variable = 0);

/// f(z) = z_1 e_1.
CorpusMember coordinate_member(Exponent p, int n, const SpaceSpec& codomain);

/// Wraps an arbitrary polynomial; its norm is bracketed by supnorm_refined
/// and supnorm_upper.
CorpusMember estimated_member(std::string id, VectorPolynomial P, const Budget& budget, std::uint64_t seed);

struct CorpusSpec {
  std::string family;          // mobius_axis | random | coordinate | file
  std::vector<double> a;       // mobius_axis
  int truncation = 60;         // mobius_axis
  Ensemble ensemble = Ensemble::unimodular;
  std::vector<int> degrees;    // random
  int count = 1;               // random, per degree
  double density = 0.5;        // random sparse
  std::string path;            // file
};

/// a in {lo, lo+step, ..., hi}, computed as lo + i*step rounded to 1e-12 so the
/// grid is reproducible.
std::vector<double> a_grid(double lo, double hi, double step);

/// Members for a domain l_p^n and coefficient space X. Norm estimates use
/// seeds derived from (seed, member id).
std::vector<CorpusMember> build_corpus(const std::vector<CorpusSpec>& specs, Exponent p, int n,
                                       const SpaceSpec& coefficient_space, const Budget& budget,
                                       std::uint64_t seed);

}  // namespace bohrlab
