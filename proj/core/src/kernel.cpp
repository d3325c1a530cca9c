#include "pathsum/kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pathsum/errors.hpp"
#include "pathsum/summation.hpp"

namespace pathsum {

namespace {

struct ScaledSeries {
  double sum;    // sum of u_n with u_0 = 1
  double bound;  // bound on sum_{n > last} u_n, NaN when capped
  std::uint64_t terms;
  bool capped;
};

// sum_{n>=0} weight(n) exp(-4 b n (m + n)), i.e. a Gaussian series in
// (m + 2n) divided by its leading factor exp(-b m^2). weight(0) must be 1
// and the term ratio must be non-increasing in n.
template <typename Weight>
ScaledSeries scaled_gaussian_series(double b, std::int64_t m, double tol,
                                    std::uint64_t max_terms, Weight weight) {
  const auto md = static_cast<double>(m);
  CompensatedSum acc(1.0);
  double prev = 1.0;
  std::uint64_t terms = 1;
  for (std::int64_t n = 0;; ++n) {
    const auto nd = static_cast<double>(n + 1);
    const double next = weight(n + 1) * std::exp(-4.0 * b * nd * (md + nd));
    const double ratio = next / prev;
    if (ratio < 1.0) {
      const double tail = next / (1.0 - ratio);
      if (tail < tol * acc.value()) {
        return {acc.value(), tail, terms, false};
      }
    }
    if (terms >= max_terms) {
      return {acc.value(), std::numeric_limits<double>::quiet_NaN(), terms,
              true};
    }
    acc.add(next);
    prev = next;
    ++terms;
  }
}

void require_convergent(double b) {
  if (std::isnan(b)) {
    throw ValidationError("b", "is NaN");
  }
  if (b <= 0.0 || !std::isfinite(b)) {
    throw DivergenceError("kernel sum diverges for b = " + std::to_string(b) +
                          " (requires 0 < b < inf)");
  }
}

SumResult unscale(double b, std::int64_t m, const ScaledSeries& s) {
  const auto md = static_cast<double>(m);
  const double leading = std::exp(-b * md * md);
  return {leading * s.sum, s.terms, leading * s.bound, s.capped};
}

double unit_weight(std::int64_t) { return 1.0; }

double diagonal_weight(std::int64_t n) { return static_cast<double>(n + 1); }

}  // namespace

double action_1d(const PhysicalParams& params, const PathClass1D& cls) {
  const auto n = static_cast<double>(cls.steps());
  return params.action_coefficient() * n * n;
}

double action_1d_kinetic(const PhysicalParams& params, const PathClass1D& cls) {
  const double v = static_cast<double>(cls.steps()) * params.dx() / params.dt();
  return 0.5 * params.mass() * v * v * params.dt();
}

double action_2d(const PhysicalParams& params, const PathClassND& cls) {
  if (cls.dimension() != 2) {
    throw ValidationError("l", "must be absent for a 2D action");
  }
  if (!params.isotropic()) {
    throw ValidationError("dy", "2D action requires dy == dx");
  }
  const auto n = static_cast<double>(cls.steps());
  return params.action_coefficient() * n * n;
}

SumResult kernel_sum_1d(double b, std::int64_t m, double tol,
                        std::uint64_t max_terms) {
  require_convergent(b);
  detail::require_index("m", m, 1);
  detail::require_positive("tol", tol);
  return unscale(b, m,
                 scaled_gaussian_series(b, m, tol, max_terms, unit_weight));
}

SumResult kernel_sum_2d(double b, std::int64_t m1, double tol,
                        std::uint64_t max_terms) {
  require_convergent(b);
  detail::require_index("m1", m1, 1);
  detail::require_positive("tol", tol);
  return unscale(b, m1,
                 scaled_gaussian_series(b, m1, tol, max_terms, diagonal_weight));
}

std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
  if (n == 0) {
    throw ValidationError("n_points", "must be >= 1");
  }
  if (!(lo <= hi)) {
    throw ValidationError("b_max", "must be >= b_min");
  }
  std::vector<double> grid(n);
  if (n == 1) {
    grid[0] = lo;
    return grid;
  }
  const double step = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    grid[i] = lo + step * static_cast<double>(i);
  }
  grid.back() = hi;
  return grid;
}

std::vector<KernelScanRow> threshold_scan(std::span<const std::int64_t> m_list,
                                          std::span<const double> b_grid,
                                          double tol,
                                          std::uint64_t max_terms) {
  detail::require_positive("tol", tol);
  std::vector<KernelScanRow> rows;
  rows.reserve(m_list.size() * b_grid.size());
  for (const auto m : m_list) {
    detail::require_index("m", m, 1);
    const auto md = static_cast<double>(m);
    for (const double b : b_grid) {
      require_convergent(b);
      const auto s =
          scaled_gaussian_series(b, m, tol, max_terms, unit_weight);
      const double limit = std::exp(-b * md * md);
      rows.push_back({b, m, b * md, limit * s.sum, limit, s.sum, s.terms,
                      s.capped});
    }
  }
  return rows;
}

std::vector<KernelScanRow> threshold_scan(std::span<const std::int64_t> m_list,
                                          double b_min, double b_max,
                                          std::size_t n_points, double tol,
                                          std::uint64_t max_terms) {
  require_convergent(b_min);
  if (!(b_min < b_max) && n_points > 1) {
    throw ValidationError("b_max", "must exceed b_min");
  }
  const auto grid = linear_grid(b_min, b_max, n_points);
  return threshold_scan(m_list, grid, tol, max_terms);
}

double propagator_closed(const PhysicalParams& params, double x, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw DomainError("propagator requires t > 0, got " + std::to_string(t));
  }
  const double spread = params.hbar() * t / params.mass();
  return std::exp(-x * x / (2.0 * spread)) /
         std::sqrt(2.0 * std::numbers::pi * spread);
}

double heat_residual(const PhysicalParams& params, double x, double t,
                     double h) {
  if (!(h > 0.0) || !(t > 2.0 * h)) {
    throw DomainError("heat_residual requires t > 2h > 0");
  }
  const double diffusivity = params.hbar() / (2.0 * params.mass());
  const auto k = [&](double xx, double tt) {
    return propagator_closed(params, xx, tt);
  };
  const double dk_dt = (k(x, t + h) - k(x, t - h)) / (2.0 * h);
  const double d2k_dx2 = (k(x + h, t) - 2.0 * k(x, t) + k(x - h, t)) / (h * h);
  return std::fabs(dk_dt - diffusivity * d2k_dx2);
}

double propagator_integral(const PhysicalParams& params, double t, double lo,
                           double hi, std::size_t intervals) {
  if (intervals < 2) {
    intervals = 2;
  }
  if (intervals % 2 != 0) {
    ++intervals;
  }
  const double h = (hi - lo) / static_cast<double>(intervals);
  CompensatedSum acc;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc.add(w * propagator_closed(params, lo + h * static_cast<double>(i), t));
  }
  return acc.value() * h / 3.0;
}

}  // namespace pathsum
