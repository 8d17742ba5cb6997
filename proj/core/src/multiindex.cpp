#include "bohrlab/multiindex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bohrlab {

MultiIndex::MultiIndex(std::vector<int> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw std::invalid_argument("multi-index needs n >= 1 entries");
  for (int a : alpha_) {
    if (a < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
    degree_ += a;
  }
}

MultiIndex MultiIndex::zero(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0));
}

MultiIndex MultiIndex::unit(int n, int variable) {
  if (variable < 0 || variable >= n) throw std::out_of_range("variable index out of range");
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  a[static_cast<std::size_t>(variable)] = 1;
  return MultiIndex(std::move(a));
}

bool canonical_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Lex order on the nondecreasing tuple equals reverse lex order on alpha:
  // a tuple that starts with more small indices has larger leading entries.
  const auto ea = a.entries();
  const auto eb = b.entries();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

namespace {

__extension__ using u128 = unsigned __int128;

void check_dims(int m, int n) {
  if (m < 0) throw std::invalid_argument("degree m must be >= 0");
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
}

void check_sorted(std::span<const int> j) {
  for (std::size_t i = 1; i < j.size(); ++i) {
    if (j[i] < j[i - 1]) throw std::invalid_argument("index tuple is not nondecreasing");
  }
}

}  // namespace

std::vector<IndexTuple> enumerate_J(int m, int n) {
  check_dims(m, n);
  std::vector<IndexTuple> out;
  IndexTuple j(static_cast<std::size_t>(m), 1);
  while (true) {
    out.push_back(j);
    // Advance like an odometer, keeping the tuple nondecreasing.
    int pos = m - 1;
    while (pos >= 0 && j[static_cast<std::size_t>(pos)] == n) --pos;
    if (pos < 0) break;
    const int next = j[static_cast<std::size_t>(pos)] + 1;
    for (int i = pos; i < m; ++i) j[static_cast<std::size_t>(i)] = next;
  }
  return out;
}

std::vector<MultiIndex> enumerate_Lambda(int m, int n) {
  const auto js = enumerate_J(m, n);
  std::vector<MultiIndex> out;
  out.reserve(js.size());
  for (const auto& j : js) out.push_back(j_to_alpha(j, n));
  return out;
}

std::vector<MultiIndex> enumerate_up_to(int max_degree, int n) {
  check_dims(max_degree, n);
  std::vector<MultiIndex> out;
  for (int m = 0; m <= max_degree; ++m) {
    auto level = enumerate_Lambda(m, n);
    out.insert(out.end(), std::make_move_iterator(level.begin()),
               std::make_move_iterator(level.end()));
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k, const CountLimits& limits) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // c holds C(n-k+i-1, i-1); the product below is always divisible by i.
    c = c * (n - k + i) / i;
    if (c > limits.max_exact) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") exceeds the exact-count limit");
    }
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t multiplicity(std::span<const int> j) {
  check_sorted(j);
  // m!/alpha! as a product of binomials over runs of equal entries.
  std::uint64_t total = 1;
  std::uint64_t placed = 0;
  std::size_t i = 0;
  while (i < j.size()) {
    std::size_t run = 1;
    while (i + run < j.size() && j[i + run] == j[i]) ++run;
    placed += run;
    const std::uint64_t ways = binomial(placed, run);
    if (ways != 0 && total > std::numeric_limits<std::uint64_t>::max() / ways) {
      throw std::overflow_error("multiplicity exceeds 64 bits");
    }
    total *= ways;
    i += run;
  }
  return total;
}

std::uint64_t multiplicity(const MultiIndex& alpha) {
  const auto j = alpha_to_j(alpha);
  return multiplicity(j);
}

IndexTuple alpha_to_j(const MultiIndex& alpha) {
  IndexTuple j;
  j.reserve(static_cast<std::size_t>(alpha.degree()));
  for (int i = 0; i < alpha.dimension(); ++i) {
    for (int c = 0; c < alpha[i]; ++c) j.push_back(i + 1);
  }
  return j;
}

MultiIndex j_to_alpha(std::span<const int> j, int n) {
  if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
  check_sorted(j);
  std::vector<int> alpha(static_cast<std::size_t>(n), 0);
  for (int v : j) {
    if (v < 1 || v > n) {
      throw std::out_of_range("index " + std::to_string(v) + " outside {1,...," +
                              std::to_string(n) + "}");
    }
    ++alpha[static_cast<std::size_t>(v - 1)];
  }
  return MultiIndex(std::move(alpha));
}

std::vector<IndexTuple> reduced_star(std::span<const IndexTuple> J) {
  std::vector<IndexTuple> out;
  if (J.empty()) return out;
  const std::size_t m = J.front().size();
  if (m == 0) throw std::invalid_argument("reduced_star needs degree m >= 1");
  for (const auto& jk : J) {
    if (jk.size() != m) throw std::invalid_argument("reduced_star: mixed tuple lengths");
    check_sorted(jk);
    out.emplace_back(jk.begin(), jk.end() - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IndexCount count_Jm1(int m, int n, const CountLimits& limits) {
  if (m < 1) throw std::invalid_argument("count_Jm1 needs m >= 1");
  if (n < 1) throw std::invalid_argument("count_Jm1 needs n >= 1");
  const auto top = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(m) - 2;
  IndexCount c{};
  c.exact = binomial(top, static_cast<std::uint64_t>(m - 1), limits);
  const double md = m;
  c.envelope = std::exp(md) * std::pow(1.0 + n / md, md - 1.0);
  return c;
}

}  // namespace bohrlab
