#pragma once

// Index sets for homogeneous polynomials in n variables:
//   Lambda(m,n)  exponent vectors alpha with |alpha| = m
//   J(m,n)       nondecreasing tuples 1 <= j_1 <= ... <= j_m <= n
//   M(m,n)       all tuples {1..n}^m
// Every enumeration here is lexicographic on the nondecreasing tuple form.

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace bohrlab {

/// Nondecreasing index tuple (entries are 1-based variable indices).
using IndexTuple = std::vector<int>;

/// Exponent vector alpha in N_0^n.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> alpha);

  /// All-zero exponent (the constant monomial) in n variables.
  static MultiIndex zero(int n);
  static MultiIndex unit(int n, int variable);  // variable is 0-based

  int dimension() const noexcept { return static_cast<int>(alpha_.size()); }
  int degree() const noexcept { return degree_; }
  int operator[](int i) const { return alpha_[static_cast<std::size_t>(i)]; }
  std::span<const int> entries() const noexcept { return alpha_; }
  const std::vector<int>& vector() const noexcept { return alpha_; }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> alpha_;
  int degree_ = 0;
};

/// Degree first, then lexicographic on the nondecreasing tuple. This is the
/// canonical storage and output order for polynomial terms.
bool canonical_less(const MultiIndex& a, const MultiIndex& b);

struct CanonicalLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    return canonical_less(a, b);
  }
};

std::vector<IndexTuple> enumerate_J(int m, int n);
std::vector<MultiIndex> enumerate_Lambda(int m, int n);
/// Every alpha with |alpha| <= max_degree, canonical order.
std::vector<MultiIndex> enumerate_up_to(int max_degree, int n);

/// Number of distinct orderings of j, i.e. m!/alpha!. Throws on unsorted
/// input or if the value does not fit in 64 bits.
std::uint64_t multiplicity(std::span<const int> j);
std::uint64_t multiplicity(const MultiIndex& alpha);

IndexTuple alpha_to_j(const MultiIndex& alpha);
MultiIndex j_to_alpha(std::span<const int> j, int n);

/// { j in J(m-1,n) : (j,k) in J for some k }. All members of J must be
/// nondecreasing tuples of one common length m >= 1.
std::vector<IndexTuple> reduced_star(std::span<const IndexTuple> J);

struct CountLimits {
  /// Exact counts above this value are reported as overflow.
  std::uint64_t max_exact = std::numeric_limits<std::uint64_t>::max();
};

/// Exact binomial coefficient with 128-bit intermediates.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k,
                       const CountLimits& limits = {});

struct IndexCount {
  std::uint64_t exact;  ///< card J(m-1, n)
  double envelope;      ///< e^m (1 + n/m)^(m-1)
};

/// card J(m-1,n) = (n+m-2)! / ((n-1)! (m-1)!) together with its exponential
/// envelope. Throws std::overflow_error past limits.max_exact.
IndexCount count_Jm1(int m, int n, const CountLimits& limits = {});

}  // namespace bohrlab
