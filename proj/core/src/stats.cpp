#include "pathsum/stats.hpp"

#include <cmath>
#include <string>

#include "pathsum/combinatorics.hpp"
#include "pathsum/errors.hpp"
#include "pathsum/summation.hpp"

namespace pathsum {

namespace {

// Upper bound on W(j)/W(j+1) for every later 1D class once the step count
// has reached n: (j+1)(m+j+1) / ((N+1)(N+2)) <= (1 + 1/(N+1)) / 4.
double ratio_bound_1d(double n) { return 0.25 * (1.0 + 1.0 / (n + 1.0)); }

// Upper bound on D_{i+1}/D_i for the 2D diagonal sums D_i = sum_{j+k=i} 1/W,
// valid for every diagonal whose step count is >= n.
double ratio_bound_2d(double n) {
  return (n + 4.0) * (n + 4.0) / (4.0 * (n + 1.0) * (n + 2.0));
}

void normalize(ProbabilityTable& table, const CompensatedSum& z) {
  table.normalization = z.value();
  for (auto& e : table.entries) {
    e.probability = e.weight / table.normalization;
  }
}

[[noreturn]] void throw_capped(std::uint64_t max_terms) {
  throw DivergenceError("normalizer did not reach tolerance within " +
                        std::to_string(max_terms) + " terms");
}

}  // namespace

double ProbabilityTable::probability(std::int64_t j, std::int64_t k) const {
  if (j < 0 || k < 0) {
    return 0.0;
  }
  if (dimension == 1) {
    if (k != 0 || j >= static_cast<std::int64_t>(entries.size())) {
      return 0.0;
    }
    return entries[static_cast<std::size_t>(j)].probability;
  }
  const std::int64_t n = j + k;
  const auto index = static_cast<std::size_t>(n * (n + 1) / 2 + j);
  if (n > truncated_at || index >= entries.size()) {
    return 0.0;
  }
  return entries[index].probability;
}

ProbabilityTable probability_1d(std::int64_t m, std::int64_t j_max, double tol,
                                std::uint64_t max_terms) {
  detail::require_index("m", m, 1);
  detail::require_index("j_max", j_max, 0);
  detail::require_positive("tol", tol);

  ProbabilityTable table;
  table.dimension = 1;
  table.m = m;
  CompensatedSum z;
  for (std::int64_t j = 0;; ++j) {
    const PathClass1D cls(m, j);
    auto count = multiplicity_1d(cls);
    const double w = count.reciprocal();
    table.entries.push_back({j, 0, std::move(count), w, 0.0});
    z.add(w);

    const auto n = static_cast<double>(cls.steps());
    const double next_ratio = static_cast<double>(j + 1) *
                              static_cast<double>(m + j + 1) /
                              ((n + 1.0) * (n + 2.0));
    const double tail = w * next_ratio / (1.0 - ratio_bound_1d(n + 2.0));
    if (j >= j_max && tail < tol) {
      table.truncated_at = j;
      table.tail_bound = tail;
      break;
    }
    if (table.entries.size() >= max_terms) {
      throw_capped(max_terms);
    }
  }
  normalize(table, z);
  return table;
}

ProbabilityTable probability_2d(std::int64_t m1, std::int64_t max_index,
                                double tol, std::uint64_t max_terms) {
  detail::require_index("m1", m1, 1);
  detail::require_index("max_index", max_index, 0);
  detail::require_positive("tol", tol);

  ProbabilityTable table;
  table.dimension = 2;
  table.m = m1;
  CompensatedSum z;
  for (std::int64_t n = 0;; ++n) {
    CompensatedSum diagonal;
    for (std::int64_t j = 0; j <= n; ++j) {
      auto count = multiplicity_2d_rotated(PathClassND(m1, j, n - j));
      const double w = count.reciprocal();
      table.entries.push_back({j, n - j, std::move(count), w, 0.0});
      diagonal.add(w);
      z.add(w);
    }
    const double r = ratio_bound_2d(static_cast<double>(m1 + 2 * n));
    if (n >= max_index && r < 1.0) {
      const double tail = diagonal.value() * r / (1.0 - r);
      if (tail < tol) {
        table.truncated_at = n;
        table.tail_bound = tail;
        break;
      }
    }
    if (table.entries.size() >= max_terms) {
      throw_capped(max_terms);
    }
  }
  normalize(table, z);
  return table;
}

double probability_1d_alt(std::int64_t m, std::int64_t j) {
  const PathClass1D cls(m, j);
  if (cls.is_classical()) {
    return 1.0;  // p = 1, q = 0, 0^0 = 1
  }
  const auto n = static_cast<double>(cls.steps());
  const auto up = static_cast<double>(cls.forward());
  const auto down = static_cast<double>(cls.backward());
  const double log_term = log_multiplicity_1d(cls) + up * std::log(up / n) +
                          down * std::log(down / n);
  return std::exp(log_term);
}

DivergenceProbe alt_divergence_probe(std::int64_t m, double target,
                                     std::int64_t j_cap) {
  detail::require_index("m", m, 1);
  detail::require_index("j_cap", j_cap, 0);
  if (!(target > 1.0) || !std::isfinite(target)) {
    throw ValidationError("target", "must be finite and > 1");
  }
  CompensatedSum partial;
  for (std::int64_t j = 0; j <= j_cap; ++j) {
    partial.add(probability_1d_alt(m, j));
    if (partial.value() > target) {
      return {true, j, partial.value()};
    }
  }
  return {false, j_cap, partial.value()};
}

Moments<double> moments_1d(const PathClass1D& cls, double dx) {
  detail::require_positive("dx", dx);
  const auto m = static_cast<double>(cls.m());
  const auto j = static_cast<double>(cls.j());
  const auto n = static_cast<double>(cls.steps());
  const double mean = m * dx;
  const double coefficient = 4.0 * j * (m + j) / (m * m);
  return {mean, n * n * dx * dx, coefficient * mean * mean};
}

Moments<BigRational> moments_1d_exact(const PathClass1D& cls) {
  const BigInt m = cls.m();
  const BigInt j = cls.j();
  const BigInt n = cls.steps();
  const BigRational mean(m);
  const BigRational coefficient(4 * j * (m + j), m * m);
  return {mean, BigRational(n * n), coefficient * mean * mean};
}

}  // namespace pathsum
