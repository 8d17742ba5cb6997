#include "bohrlab/spaces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bohrlab/rng.hpp"

namespace bohrlab {

Exponent::Exponent(double value) : value_(value), infinite_(false) {
  if (std::isnan(value) || value < 1.0) {
    throw std::invalid_argument("exponent must lie in [1, inf]");
  }
  if (std::isinf(value)) {
    infinite_ = true;
    value_ = 0.0;
  }
}

Exponent Exponent::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "∞") {
    return infinity();
  }
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw std::invalid_argument("cannot parse exponent '" + std::string(text) + "'");
  }
  return Exponent(v);
}

double Exponent::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

Exponent Exponent::dual() const {
  if (infinite_) return Exponent(1.0);
  if (value_ == 1.0) return infinity();
  return Exponent(value_ / (value_ - 1.0));
}

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, res.ptr);
}

SpaceSpec::SpaceSpec(Exponent p_, int dim_, SpaceRole role_) : p(p_), dim(dim_), role(role_) {
  if (dim_ < 1) throw std::invalid_argument("space dimension must be >= 1");
}

Exponent SpaceSpec::cotype() const {
  if (p.is_infinite()) return Exponent::infinity();
  return Exponent(std::max(2.0, p.value()));
}

std::string SpaceSpec::label() const {
  return "l" + p.to_string() + "^" + std::to_string(dim);
}

namespace {

template <typename T>
double lp_norm_impl(std::span<const T> z, Exponent p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (const auto& v : z) m = std::max(m, std::abs(v));
    return m;
  }
  const double pv = p.value();
  if (pv == 1.0) {
    double s = 0.0;
    for (const auto& v : z) s += std::abs(v);
    return s;
  }
  // Scale by the largest entry so large p does not overflow.
  double scale = 0.0;
  for (const auto& v : z) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  if (pv == 2.0) {
    for (const auto& v : z) {
      const double t = std::abs(v) / scale;
      s += t * t;
    }
    return scale * std::sqrt(s);
  }
  for (const auto& v : z) s += std::pow(std::abs(v) / scale, pv);
  return scale * std::pow(s, 1.0 / pv);
}

}  // namespace

double lp_norm(std::span<const Complex> z, Exponent p) { return lp_norm_impl(z, p); }
double lp_norm(std::span<const double> x, Exponent p) { return lp_norm_impl(x, p); }

double monomial_max(const MultiIndex& alpha, Exponent p) {
  const int m = alpha.degree();
  if (m == 0) throw std::invalid_argument("monomial_max needs degree >= 1");
  if (p.is_infinite()) return 1.0;
  const double inv_p = p.reciprocal();
  double log_value = 0.0;
  for (int a : alpha.entries()) {
    if (a == 0) continue;
    log_value += a * inv_p * std::log(static_cast<double>(a) / m);
  }
  return std::exp(log_value);
}

double cotype_ratio(std::span<const CVector> family, Exponent q, std::uint64_t seed) {
  if (family.empty()) throw std::invalid_argument("cotype_ratio needs a nonempty family");
  const std::size_t d = family.front().size();
  for (const auto& x : family) {
    if (x.size() != d) throw std::invalid_argument("cotype_ratio: mixed vector lengths");
  }
  std::vector<double> norms;
  norms.reserve(family.size());
  for (const auto& x : family) norms.push_back(lp_norm(x, q));
  const double numerator = lp_norm(std::span<const double>(norms), q);
  if (numerator == 0.0) return 0.0;

  const std::size_t k = family.size();
  CVector acc(d);
  auto sum_for = [&](auto&& sign_of) {
    std::fill(acc.begin(), acc.end(), Complex{});
    for (std::size_t j = 0; j < k; ++j) {
      const double s = sign_of(j);
      for (std::size_t i = 0; i < d; ++i) acc[i] += s * family[j][i];
    }
    const double v = lp_norm(acc, q);
    return v * v;
  };

  double mean_sq = 0.0;
  if (k <= 12) {
    // ||-v|| = ||v||, so fixing the first sign halves the enumeration.
    const std::uint64_t patterns = std::uint64_t{1} << (k - 1);
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
      mean_sq += sum_for([&](std::size_t j) {
        return (j == 0 || !((mask >> (j - 1)) & 1U)) ? 1.0 : -1.0;
      });
    }
    mean_sq /= static_cast<double>(patterns);
  } else {
    Rng rng(seed);
    constexpr int samples = 4096;
    std::vector<double> signs(k);
    for (int s = 0; s < samples; ++s) {
      for (auto& v : signs) v = rng.sign();
      mean_sq += sum_for([&](std::size_t j) { return signs[j]; });
    }
    mean_sq /= samples;
  }
  return numerator / std::sqrt(mean_sq);
}

double estimate_cotype_constant(Exponent q, int d, int trials, std::uint64_t seed,
                                const CotypeEstimateOptions& options) {
  if (q < Exponent(2.0)) throw std::invalid_argument("cotype exponent must be >= 2");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  if (options.max_family < 1) throw std::invalid_argument("max_family must be >= 1");

  // A single unit vector has ratio exactly 1.
  double best = 1.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const auto k = 1 + static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(options.max_family)));
    std::vector<CVector> family(k, CVector(static_cast<std::size_t>(d)));
    const bool sparse = rng.uniform() < 0.5;
    for (auto& x : family) {
      if (sparse) {
        // Coordinate-aligned families are the extremal ones for l_q, q > 2.
        x[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(d)))] = rng.complex_normal();
      } else {
        for (auto& v : x) v = rng.complex_normal();
      }
    }
    best = std::max(best, cotype_ratio(family, q, rng.next_u64()));
  }
  return best;
}

GeometryConstants geometry_constants(const SpaceSpec& space) {
  GeometryConstants g;
  g.cotype = space.cotype();
  if (space.is_hilbert()) {
    g.cotype_constant = 1.0;
    g.source = "hilbert";
  } else {
    g.source = "unknown (configure or estimate)";
  }
  // l_q is q-concave with constant 1: both sides of the defining inequality agree.
  if (!space.p.is_infinite()) g.concavity_constant = 1.0;
  return g;
}

}  // namespace bohrlab
