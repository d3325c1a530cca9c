#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pathsum/core.hpp"

namespace pathsum {

/// Default cap on terms for any series evaluation.
inline constexpr std::uint64_t kDefaultMaxTerms = 1'000'000;

/// A truncated positive-term series.
///
/// When `diverged` is false the true sum lies in
/// [value, value + truncation_bound] (up to rounding). When it is true the
/// term cap was hit first; `value` is the last partial sum and
/// `truncation_bound` is NaN.
struct SumResult {
  double value = 0.0;
  std::uint64_t terms_used = 0;
  double truncation_bound = 0.0;
  bool diverged = false;
};

/// c N^2 with c = M dx^2 / (2 dt).
double action_1d(const PhysicalParams& params, const PathClass1D& cls);

/// (1/2) M v^2 dt with v = N dx / dt. Same quantity as action_1d by a
/// different evaluation order.
double action_1d_kinetic(const PhysicalParams& params, const PathClass1D& cls);

/// c (N_j + 2k)^2 for a rotated 2D class. Requires dx == dy.
double action_2d(const PhysicalParams& params, const PathClassND& cls);

/// sum_{j>=0} exp(-b (m + 2j)^2), summed in ascending j with compensated
/// accumulation. Stops once the geometric tail bound t_{j+1}/(1 - r_j) drops
/// below tol times the partial sum. Throws DivergenceError for b <= 0.
SumResult kernel_sum_1d(double b, std::int64_t m, double tol,
                        std::uint64_t max_terms = kDefaultMaxTerms);

/// sum_{j,k>=0} exp(-b (m1 + 2j + 2k)^2), evaluated as
/// sum_{n>=0} (n+1) exp(-b (m1 + 2n)^2).
SumResult kernel_sum_2d(double b, std::int64_t m1, double tol,
                        std::uint64_t max_terms = kDefaultMaxTerms);

struct KernelScanRow {
  double b = 0.0;
  std::int64_t m = 0;
  double bm = 0.0;
  double sum_value = 0.0;
  double limit_value = 0.0;  ///< exp(-b m^2)
  /// sum_value / limit_value, accumulated directly in scaled form
  /// (sum_j exp(-4 b j (m + j))) so it survives underflow of limit_value.
  double ratio = 0.0;
  std::uint64_t terms_used = 0;
  bool diverged = false;
};

/// n evenly spaced points on [lo, hi], endpoints included.
std::vector<double> linear_grid(double lo, double hi, std::size_t n);

/// One row per (m, b), ordered by m (input order) then b (grid order).
std::vector<KernelScanRow> threshold_scan(
    std::span<const std::int64_t> m_list, std::span<const double> b_grid,
    double tol = 1e-15, std::uint64_t max_terms = kDefaultMaxTerms);

std::vector<KernelScanRow> threshold_scan(
    std::span<const std::int64_t> m_list, double b_min, double b_max,
    std::size_t n_points, double tol = 1e-15,
    std::uint64_t max_terms = kDefaultMaxTerms);

/// K(x, t) = sqrt(M / (2 pi hbar t)) exp(-M x^2 / (2 hbar t)).
double propagator_closed(const PhysicalParams& params, double x, double t);

/// |dK/dt - (hbar / 2M) d2K/dx2| by central differences of spacing h.
/// Requires t > 2h > 0.
double heat_residual(const PhysicalParams& params, double x, double t,
                     double h);

/// Composite Simpson integral of K(., t) over [lo, hi] with `intervals`
/// (rounded up to even) subintervals.
double propagator_integral(const PhysicalParams& params, double t, double lo,
                           double hi, std::size_t intervals);

}  // namespace pathsum
