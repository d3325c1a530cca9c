#include "validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pathsum/pathsum.hpp"

namespace pathsum::cli {
namespace {

class Suite {
 public:
  Suite(std::string scope, std::vector<Check>& out)
      : scope_(std::move(scope)), out_(out) {}

  /// Passes when error <= tolerance.
  void bound(std::string name, double error, double tolerance) {
    out_.push_back({scope_, std::move(name), error <= tolerance, error, tolerance});
  }

  /// Counts mismatches; passes on zero.
  void exact(std::string name, std::int64_t mismatches) {
    bound(std::move(name), static_cast<double>(mismatches), 0.0);
  }

 private:
  std::string scope_;
  std::vector<Check>& out_;
};

double rel(double got, double want) {
  return std::fabs(got - want) / std::fabs(want);
}

void combinatorics(Suite& s) {
  s.exact("figure1_count", multiplicity_1d(PathClass1D(2, 1)).exact() != 4);
  s.exact("figure4_count", multiplicity_2d_full(2, 2, 0, 0).exact() != 6);
  s.exact("figure5_count",
          multiplicity_2d_rotated(PathClassND(2, 0, 1)).exact() != 12);

  std::int64_t bad = 0;
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t j = 0; j <= 4; ++j) {
      const std::vector<std::int64_t> net{m};
      const auto groups = count_paths_by_flips(net, m + 2 * j);
      const auto it = groups.find({j, 0, 0});
      bad += groups.size() != 1 || it == groups.end() ||
             BigInt(it->second) != multiplicity_1d(PathClass1D(m, j)).exact();
    }
  }
  s.exact("enumeration_1d", bad);

  bad = 0;
  for (std::int64_t m1 = 1; m1 <= 3; ++m1) {
    for (std::int64_t m2 = 0; m2 <= 2; ++m2) {
      for (std::int64_t pairs = 0; pairs <= 2; ++pairs) {
        const std::vector<std::int64_t> net{m1, m2};
        const auto groups = count_paths_by_flips(net, m1 + m2 + 2 * pairs);
        for (std::int64_t j = 0; j <= pairs; ++j) {
          const auto it = groups.find({j, pairs - j, 0});
          const BigInt got = it == groups.end() ? 0 : it->second;
          bad += got != multiplicity_2d_full(m1, m2, j, pairs - j).exact();
        }
      }
    }
  }
  s.exact("enumeration_2d", bad);

  bad = 0;
  for (std::int64_t m1 = 1; m1 <= 2; ++m1) {
    for (std::int64_t pairs = 0; pairs <= 2; ++pairs) {
      const std::vector<std::int64_t> net{m1, 0, 0};
      const auto groups = count_paths_by_flips(net, m1 + 2 * pairs);
      for (const auto& [f, count] : groups) {
        bad += BigInt(count) !=
               multiplicity_3d(PathClassND(m1, f[0], f[1], f[2])).exact();
      }
    }
  }
  s.exact("enumeration_3d", bad);

  double worst = 0.0;
  for (const auto& [m, j] : {std::pair{50, 700}, {1, 999}, {300, 10}}) {
    const PathClass1D cls(m, j);
    worst = std::max(worst, rel(log_multiplicity_1d(cls),
                                log_of(multiplicity_1d(cls).exact())));
  }
  s.bound("log_gamma_vs_exact", worst, 1e-12);
}

void kernel(Suite& s, std::uint64_t max_terms) {
  double worst = 0.0;
  for (const double b : {0.1, 0.25, 0.5, 1.0, 2.0}) {
    for (const std::int64_t m1 : {1, 2, 3, 5}) {
      const auto reindexed = kernel_sum_2d(b, m1, 1e-16, max_terms).value;
      const auto terms = static_cast<std::int64_t>(std::sqrt(40.0 / b)) + 2;
      CompensatedSum direct;
      for (std::int64_t j = 0; j < terms; ++j) {
        for (std::int64_t k = 0; k < terms; ++k) {
          const auto n = static_cast<double>(m1 + 2 * j + 2 * k);
          direct.add(std::exp(-b * n * n));
        }
      }
      worst = std::max(worst, rel(reindexed, direct.value()));
    }
  }
  s.bound("reindexing_2d", worst, 1e-12);

  const std::vector<std::int64_t> ms{1, 2, 3};
  double worst_05 = 0.0;
  double worst_06 = 0.0;
  std::int64_t rises = 0;
  for (const auto m : ms) {
    const auto md = static_cast<double>(m);
    const double r05 = threshold_scan(std::vector{m}, std::vector{0.5 / md}, 1e-15,
                                      max_terms)[0].ratio;
    const double r06 = threshold_scan(std::vector{m}, std::vector{0.6 / md}, 1e-15,
                                      max_terms)[0].ratio;
    worst_05 = std::max(worst_05, r05);
    worst_06 = std::max(worst_06, r06);
    const auto rows =
        threshold_scan(std::vector{m}, 0.01, 2.0, 200, 1e-15, max_terms);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      rises += rows[i].ratio > rows[i - 1].ratio;
    }
  }
  s.bound("max_ratio_at_bm_0.5", worst_05, 1.08);
  s.bound("max_ratio_at_bm_0.6", worst_06, 1.05);
  s.exact("ratio_monotone", rises);

  const PhysicalParams natural(PhysicalParamsInit{1.0, 1.0, {}, 1.0, 1.0});
  const double r1 = heat_residual(natural, 0.5, 1.0, 1e-3);
  s.bound("heat_residual", r1, 1e-6);
  const double order =
      std::log2(heat_residual(natural, 0.5, 1.0, 2e-2) /
                heat_residual(natural, 0.5, 1.0, 1e-2));
  s.bound("heat_residual_order", std::fabs(order - 2.0), 0.5);
  s.bound("propagator_normalization",
          std::fabs(propagator_integral(natural, 1.0, -40.0, 40.0, 4000) - 1.0),
          1e-9);
}

void stats(Suite& s, std::uint64_t max_terms) {
  std::int64_t bad = 0;
  for (std::int64_t m = 1; m <= 20; ++m) {
    for (std::int64_t j = 0; j <= 20; ++j) {
      const auto mo = moments_1d_exact(PathClass1D(m, j));
      const BigRational coefficient(BigInt(4 * j) * (m + j), BigInt(m) * m);
      bad += mo.variance != mo.mean_square - mo.mean * mo.mean ||
             mo.variance != coefficient * mo.mean * mo.mean;
    }
  }
  s.exact("moment_identity", bad);

  double worst = 0.0;
  std::vector<double> p0;
  for (const std::int64_t m : {2, 5, 10, 50, 100}) {
    const auto t = probability_1d(m, 0, 1e-15, max_terms);
    CompensatedSum total;
    for (const auto& e : t.entries) {
      total.add(e.probability);
    }
    worst = std::max(worst, std::fabs(total.value() - 1.0));
    p0.push_back(t.probability(0));
  }
  s.bound("normalization_1d", worst, 1e-10);
  std::int64_t not_increasing = 0;
  for (std::size_t i = 1; i < p0.size(); ++i) {
    not_increasing += !(p0[i] > p0[i - 1]);
  }
  s.exact("classical_probability_increasing", not_increasing);
  s.bound("classical_probability_m100", std::max(0.0, 0.989 - p0.back()), 0.0);

  worst = 0.0;
  for (const std::int64_t m1 : {1, 2, 3}) {
    const auto t = probability_2d(m1, 0, 1e-15, max_terms);
    CompensatedSum total;
    for (const auto& e : t.entries) {
      total.add(e.probability);
    }
    worst = std::max(worst, std::fabs(total.value() - 1.0));
  }
  s.bound("normalization_2d", worst, 1e-10);

  const auto probe = alt_divergence_probe(2, 1.5, 10000);
  s.exact("alternative_sum_exceeds_1.5", !probe.crossed);
}

void ensemble(Suite& s) {
  double worst_identity = 0.0;
  double worst_forms = 0.0;
  for (std::int64_t m = 1; m <= 60; m += 3) {
    for (std::int64_t j = 1; j <= 60; j += 3) {
      const auto ens = SpinEnsemble1D::from_path(m, j, 1.0);
      const double x = *ens.beta();
      const auto n = static_cast<double>(ens.spins());
      const auto md = static_cast<double>(m);
      const auto jd = static_cast<double>(j);
      worst_identity = std::max(
          {worst_identity, rel(std::tanh(x), md / n),
           rel(std::cosh(x), n / (2.0 * std::sqrt(jd * (md + jd))))});
      worst_forms = std::max(worst_forms,
                             rel(ensemble_entropy_two_level(ens, 1.0),
                                 ensemble_entropy_large_n(ens, 1.0)));
    }
  }
  s.bound("hyperbolic_identities", worst_identity, 1e-12);
  s.bound("closed_form_vs_two_level", worst_forms, 1e-12);

  double previous = 1.0;
  std::int64_t not_decreasing = 0;
  double worst = 0.0;
  for (const std::int64_t n : {10'000, 100'000, 1'000'000}) {
    const auto ens = SpinEnsemble1D::from_path(n / 2, n / 4, 1.0);
    const double gap = std::fabs(ensemble_entropy_large_n(ens, 1.0) /
                                     log_multiplicity_1d(PathClass1D(n / 2, n / 4)) -
                                 1.0);
    not_decreasing += !(gap < previous);
    previous = gap;
    worst = std::max(worst, gap);
  }
  s.bound("stirling_large_n", worst, 0.01);
  s.exact("stirling_error_decreasing", not_decreasing);

  const double rate = entropy_rate(PathClass1D(2, 1'000'000), 1.0);
  s.bound("entropy_rate_ln2", std::fabs(rate - std::numbers::ln2), 1e-4);

  const SpinEnsemble2D sym(2, 0, 1, 1.0, 1.0, 0.3, 0.3);
  s.bound("combined_partition_symmetric",
          rel(combined_partition_2d(sym),
              4.0 * log_partition_1d(0.3, 1.0) + 4.0 * std::numbers::ln2),
          1e-13);
}

}  // namespace

std::vector<Check> run_validation(const std::string& scope,
                                  std::uint64_t max_terms) {
  const bool all = scope == "all";
  if (!all && scope != "combinatorics" && scope != "kernel" &&
      scope != "stats" && scope != "ensemble") {
    throw ValidationError("scope", "unknown scope '" + scope + "'");
  }
  std::vector<Check> out;
  if (all || scope == "combinatorics") {
    Suite s("combinatorics", out);
    combinatorics(s);
  }
  if (all || scope == "kernel") {
    Suite s("kernel", out);
    kernel(s, max_terms);
  }
  if (all || scope == "stats") {
    Suite s("stats", out);
    stats(s, max_terms);
  }
  if (all || scope == "ensemble") {
    Suite s("ensemble", out);
    ensemble(s);
  }
  return out;
}

}  // namespace pathsum::cli
