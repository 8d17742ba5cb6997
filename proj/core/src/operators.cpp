#include "bohrlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bohrlab/polynomial.hpp"
#include "bohrlab/rng.hpp"
#include "json.hpp"

namespace bohrlab {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::identity: return "identity";
    case OperatorKind::inclusion: return "inclusion";
    case OperatorKind::diagonal: return "diagonal";
    case OperatorKind::general: return "general";
  }
  return "?";
}

OperatorModel::OperatorModel(OperatorKind kind, SpaceSpec source, SpaceSpec target,
                             std::vector<Complex> matrix)
    : kind_(kind), source_(source), target_(target), matrix_(std::move(matrix)) {
  source_.role = SpaceRole::coefficient;
  target_.role = SpaceRole::coefficient;
  if (matrix_.size() != static_cast<std::size_t>(source_.dim) * static_cast<std::size_t>(target_.dim)) {
    throw std::invalid_argument("operator matrix has the wrong size");
  }
}

namespace {

std::vector<Complex> eye(int d) {
  std::vector<Complex> m(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i * d + i)] = 1.0;
  return m;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

Exponent exponent_from(const nlohmann::json& j) {
  if (j.is_string()) return Exponent::parse(j.get<std::string>());
  return Exponent(j.get<double>());
}

}  // namespace

OperatorModel OperatorModel::identity(SpaceSpec space) {
  OperatorModel V(OperatorKind::identity, space, space, eye(space.dim));
  V.label_ = "identity:" + space.label();
  return V;
}

OperatorModel OperatorModel::scalar() {
  OperatorModel V = identity(SpaceSpec(Exponent(2.0), 1, SpaceRole::coefficient));
  V.label_ = "scalar";
  return V;
}

OperatorModel OperatorModel::inclusion(Exponent r, Exponent q, int d) {
  OperatorModel V(OperatorKind::inclusion, SpaceSpec(r, d), SpaceSpec(q, d), eye(d));
  V.label_ = "inclusion:" + V.source_.label() + "->" + V.target_.label();
  return V;
}

OperatorModel OperatorModel::diagonal(std::vector<Complex> diag, Exponent r, Exponent q) {
  const int d = static_cast<int>(diag.size());
  if (d < 1) throw std::invalid_argument("diagonal operator needs at least one entry");
  std::vector<Complex> m(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i * d + i)] = diag[static_cast<std::size_t>(i)];
  OperatorModel V(OperatorKind::diagonal, SpaceSpec(r, d), SpaceSpec(q, d), std::move(m));
  V.label_ = "diagonal:" + V.source_.label() + "->" + V.target_.label();
  return V;
}

OperatorModel OperatorModel::general(std::vector<CVector> rows, SpaceSpec source, SpaceSpec target) {
  if (static_cast<int>(rows.size()) != target.dim) throw std::invalid_argument("row count must equal target dimension");
  std::vector<Complex> m;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != source.dim) throw std::invalid_argument("row length must equal source dimension");
    m.insert(m.end(), row.begin(), row.end());
  }
  OperatorModel V(OperatorKind::general, source, target, std::move(m));
  V.label_ = "general:" + V.source_.label() + "->" + V.target_.label();
  return V;
}

OperatorModel OperatorModel::parse(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return from_json(spec);
  const auto parts = split(spec, ':');
  if (parts.empty()) throw std::invalid_argument("empty operator spec");
  const std::string& kind = parts[0];
  if (kind == "scalar" && parts.size() == 1) return scalar();
  if (kind == "identity" && parts.size() == 3) {
    return identity(SpaceSpec(Exponent::parse(parts[1]), std::stoi(parts[2]), SpaceRole::coefficient));
  }
  if (kind == "inclusion" && parts.size() == 4) {
    return inclusion(Exponent::parse(parts[1]), Exponent::parse(parts[2]), std::stoi(parts[3]));
  }
  if (kind == "diagonal" && parts.size() == 4) {
    std::vector<Complex> diag;
    for (const auto& v : split(parts[3], ',')) diag.emplace_back(std::stod(v));
    return diagonal(std::move(diag), Exponent::parse(parts[1]), Exponent::parse(parts[2]));
  }
  throw std::invalid_argument("cannot parse operator spec '" + spec + "'");
}

OperatorModel OperatorModel::from_json(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  const std::string kind = j.at("kind").get<std::string>();
  const SpaceSpec source(exponent_from(j.at("source").at("p")), j.at("source").at("d").get<int>());
  const SpaceSpec target(exponent_from(j.at("target").at("p")), j.at("target").at("d").get<int>());
  if (kind == "identity") {
    if (!(source.p == target.p) || source.dim != target.dim) {
      throw std::invalid_argument("identity needs equal source and target");
    }
    return identity(source);
  }
  if (kind == "inclusion") {
    if (source.dim != target.dim) throw std::invalid_argument("inclusion needs equal dimensions");
    return inclusion(source.p, target.p, source.dim);
  }
  if (kind == "diagonal") {
    std::vector<Complex> diag;
    for (const auto& v : j.at("diag")) diag.emplace_back(v.get<double>());
    if (static_cast<int>(diag.size()) != source.dim || source.dim != target.dim) {
      throw std::invalid_argument("diagonal length must match the dimensions");
    }
    return diagonal(std::move(diag), source.p, target.p);
  }
  if (kind == "general") {
    std::vector<CVector> rows;
    for (const auto& row : j.at("matrix")) {
      CVector r;
      for (const auto& e : row) r.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
      rows.push_back(std::move(r));
    }
    return general(std::move(rows), source, target);
  }
  throw std::invalid_argument("unknown operator kind '" + kind + "'");
}

CVector OperatorModel::apply(std::span<const Complex> x) const {
  if (static_cast<int>(x.size()) != cols()) throw std::invalid_argument("operator: dimension mismatch");
  if (kind_ == OperatorKind::identity || kind_ == OperatorKind::inclusion) return CVector(x.begin(), x.end());
  CVector y(static_cast<std::size_t>(rows()));
  for (int i = 0; i < rows(); ++i) {
    Complex s{};
    for (int j = 0; j < cols(); ++j) s += entry(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

double OperatorModel::image_norm(std::span<const Complex> x) const {
  if (kind_ == OperatorKind::identity || kind_ == OperatorKind::inclusion) {
    if (static_cast<int>(x.size()) != cols()) throw std::invalid_argument("operator: dimension mismatch");
    return lp_norm(x, target_.p);
  }
  return lp_norm(apply(x), target_.p);
}

double operator_norm_upper(const OperatorModel& V, std::string* source) {
  auto tag = [&](const char* s) {
    if (source) *source = s;
  };
  const Exponent r = V.source().p;
  const Exponent q = V.target().p;
  switch (V.kind()) {
    case OperatorKind::identity:
      tag("exact:identity");
      return 1.0;
    case OperatorKind::inclusion:
      tag("exact:inclusion");
      if (r <= q) return 1.0;
      return std::pow(static_cast<double>(V.cols()), q.reciprocal() - r.reciprocal());
    case OperatorKind::diagonal: {
      tag("exact:diagonal");
      std::vector<double> mags;
      for (int i = 0; i < V.cols(); ++i) mags.push_back(std::abs(V.entry(i, i)));
      if (r <= q) return *std::max_element(mags.begin(), mags.end());
      // q < r: Hoelder with 1/s = 1/q - 1/r.
      return lp_norm(std::span<const double>(mags), Exponent(1.0 / (q.reciprocal() - r.reciprocal())));
    }
    case OperatorKind::general: {
      tag("factorization:l1/linf");
      // through l_1: ||I: l_r -> l_1|| * max column norm in l_q
      double col_max = 0.0;
      for (int j = 0; j < V.cols(); ++j) {
        CVector col(static_cast<std::size_t>(V.rows()));
        for (int i = 0; i < V.rows(); ++i) col[static_cast<std::size_t>(i)] = V.entry(i, j);
        col_max = std::max(col_max, lp_norm(col, q));
      }
      const double via_l1 = std::pow(static_cast<double>(V.cols()), 1.0 - r.reciprocal()) * col_max;
      // through l_inf: max row norm in l_r' * ||I: l_inf -> l_q||
      double row_max = 0.0;
      for (int i = 0; i < V.rows(); ++i) {
        CVector row(static_cast<std::size_t>(V.cols()));
        for (int j = 0; j < V.cols(); ++j) row[static_cast<std::size_t>(j)] = V.entry(i, j);
        row_max = std::max(row_max, lp_norm(row, r.dual()));
      }
      const double via_linf = row_max * std::pow(static_cast<double>(V.rows()), q.reciprocal());
      return std::min(via_l1, via_linf);
    }
  }
  return 0.0;
}

NormBracket operator_norm(const OperatorModel& V, const Budget& budget, std::uint64_t seed) {
  NormBracket b;
  b.upper = operator_norm_upper(V, &b.upper_source);
  // ||V|| is the sup norm of the linear polynomial z -> sum_j z_j V e_j.
  std::vector<Term> terms;
  for (int j = 0; j < V.cols(); ++j) {
    CVector col(static_cast<std::size_t>(V.rows()));
    for (int i = 0; i < V.rows(); ++i) col[static_cast<std::size_t>(i)] = V.entry(i, j);
    terms.push_back({MultiIndex::unit(V.cols(), j), std::move(col)});
  }
  const VectorPolynomial P(SpaceSpec(V.source().p, V.cols()), V.target(), std::move(terms));
  b.lower = supnorm_lower(P, budget, seed).value;
  if (b.lower > b.upper * (1.0 + 1e-12)) {
    throw std::logic_error("operator norm bracket inverted for " + V.label());
  }
  b.lower = std::min(b.lower, b.upper);
  return b;
}

namespace {

// sup over unimodular eps of ||sum eps_j x_j||_source, from above.
double weak_l1_upper(std::span<const CVector> family, Exponent source) {
  const std::size_t k = family.size();
  if (k == 1) return lp_norm(family[0], source);
  const int N = k <= 3 ? 32 : 16;
  double slack = 0.0;
  for (const auto& x : family) slack += lp_norm(x, source);
  // Every phase is within pi/N of a grid phase, and |e^{it} - 1| <= |t|.
  slack *= std::numbers::pi / N;
  std::vector<Complex> grid(static_cast<std::size_t>(N));
  for (int t = 0; t < N; ++t) grid[static_cast<std::size_t>(t)] = std::polar(1.0, 2.0 * std::numbers::pi * t / N);
  const std::size_t d = family[0].size();
  std::vector<int> idx(k - 1, 0);
  CVector acc(d);
  double best = 0.0;
  while (true) {
    for (std::size_t i = 0; i < d; ++i) acc[i] = family[0][i];
    for (std::size_t j = 1; j < k; ++j) {
      const Complex e = grid[static_cast<std::size_t>(idx[j - 1])];
      for (std::size_t i = 0; i < d; ++i) acc[i] += e * family[j][i];
    }
    best = std::max(best, lp_norm(acc, source));
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == N) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return best + slack;
}

}  // namespace

double summing_ratio(const OperatorModel& V, std::span<const CVector> family, Exponent r) {
  if (family.empty()) throw std::invalid_argument("summing_ratio needs a nonempty family");
  if (family.size() > 6) throw std::invalid_argument("summing_ratio supports at most 6 vectors");
  std::vector<double> images;
  for (const auto& x : family) images.push_back(V.image_norm(x));
  const double num = lp_norm(std::span<const double>(images), r);
  const double den = weak_l1_upper(family, V.source().p);
  return den == 0.0 ? 0.0 : num / den;
}

std::vector<std::vector<CVector>> sample_families(const OperatorModel& V, int trials, std::uint64_t seed) {
  if (trials < 0) throw std::invalid_argument("trials must be >= 0");
  const auto d = static_cast<std::size_t>(V.cols());
  std::vector<std::vector<CVector>> out;
  for (std::size_t j = 0; j < d; ++j) {
    CVector e(d);
    e[j] = 1.0;
    out.push_back({e});
  }
  // All basis vectors together: the extremal family for inclusions.
  if (d > 1 && d <= 4) {
    std::vector<CVector> basis;
    for (std::size_t j = 0; j < d; ++j) {
      CVector e(d);
      e[j] = 1.0;
      basis.push_back(e);
    }
    out.push_back(std::move(basis));
  }
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const auto k = 1 + static_cast<std::size_t>(rng.below(4));
    std::vector<CVector> fam(k, CVector(d));
    for (auto& x : fam) {
      for (auto& v : x) v = rng.complex_normal();
    }
    out.push_back(std::move(fam));
  }
  return out;
}

double summing_lower(const OperatorModel& V, Exponent r, int trials, std::uint64_t seed) {
  double best = 0.0;
  for (const auto& fam : sample_families(V, trials, seed)) best = std::max(best, summing_ratio(V, fam, r));
  return best;
}

Exponent kwapien_exponent(Exponent q) {
  if (q.is_infinite()) throw std::invalid_argument("kwapien_exponent needs q < inf");
  return Exponent(1.0 / (1.0 - std::abs(q.reciprocal() - 0.5)));
}

Exponent bennett_carl_exponent(Exponent r, Exponent q) {
  if (q.is_infinite() || r.is_infinite()) throw std::invalid_argument("bennett_carl_exponent needs r < q < inf");
  if (!(r < q)) throw std::invalid_argument("bennett_carl_exponent needs r < q");
  const double inv = 0.5 + r.reciprocal() - std::max(q.reciprocal(), 0.5);
  return Exponent(1.0 / inv);
}

}  // namespace bohrlab
