#pragma once

#include <cstdint>
#include <vector>

#include "pathsum/big_count.hpp"
#include "pathsum/core.hpp"
#include "pathsum/kernel.hpp"

namespace pathsum {

struct ProbabilityEntry {
  std::int64_t j = 0;
  std::int64_t k = 0;  // always 0 in 1D
  BigCount multiplicity = BigCount::from_exact(1);
  double weight = 0.0;       // 1 / multiplicity
  double probability = 0.0;  // weight / normalization
};

/// Inverse-multiplicity distribution over path classes at fixed m (or m1).
///
/// Entries cover every index summed into `normalization`. `tail_bound`
/// bounds the omitted weight sum_{beyond} 1/W; since normalization >= 1 it
/// also bounds the relative error of every reported probability.
struct ProbabilityTable {
  int dimension = 1;
  std::int64_t m = 0;
  std::vector<ProbabilityEntry> entries;
  double normalization = 0.0;
  std::int64_t truncated_at = 0;  ///< last j (1D) or last j + k (2D) summed
  double tail_bound = 0.0;

  /// Probability of class (j, k); 0 when outside the table.
  double probability(std::int64_t j, std::int64_t k = 0) const;
};

/// P(j, m) = (1/W(j,m)) / sum_j 1/W(j,m). Covers at least j = 0..j_max and
/// continues until the rigorous tail bound is below tol.
ProbabilityTable probability_1d(std::int64_t m, std::int64_t j_max, double tol,
                                std::uint64_t max_terms = kDefaultMaxTerms);

/// Rotated-frame 2D analogue over (j, k), listed by diagonal n = j + k.
/// Covers at least n = 0..max_index.
ProbabilityTable probability_2d(std::int64_t m1, std::int64_t max_index,
                                double tol,
                                std::uint64_t max_terms = kDefaultMaxTerms);

/// W p^(m+j) q^j with p = (m+j)/N, q = j/N; exactly 1 for j = 0.
double probability_1d_alt(std::int64_t m, std::int64_t j);

struct DivergenceProbe {
  bool crossed = false;
  std::int64_t at_j = 0;  ///< index whose term pushed the sum past target
  double partial_sum = 0.0;
};

/// Accumulates probability_1d_alt(m, 0..j_cap) until the partial sum exceeds
/// target.
DivergenceProbe alt_divergence_probe(std::int64_t m, double target,
                                     std::int64_t j_cap);

template <typename T>
struct Moments {
  T mean;
  T mean_square;
  T variance;
};

/// <x> = m dx, <x^2> = N^2 dx^2, var = 4 j (m+j) / m^2 <x>^2.
Moments<double> moments_1d(const PathClass1D& cls, double dx);

/// moments_1d in units of dx, in exact rational arithmetic.
Moments<BigRational> moments_1d_exact(const PathClass1D& cls);

}  // namespace pathsum
