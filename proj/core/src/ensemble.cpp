#include "pathsum/ensemble.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pathsum/errors.hpp"

namespace pathsum {

namespace {

double require_energy(const char* field, double E) {
  if (!std::isfinite(E) || E == 0.0) {
    throw DomainError(std::string(field) + " must be finite and non-zero");
  }
  return E;
}

std::optional<double> require_beta(const char* field,
                                   std::optional<double> beta) {
  if (beta && !std::isfinite(*beta)) {
    throw ValidationError(field, "must be finite (use nullopt for T = 0)");
  }
  return beta;
}

// kB N [ln(N / sqrt(j(m+j))) - (m / 2N) ln((m+j)/j)], j >= 1.
double closed_form_entropy(std::int64_t m, std::int64_t j, double kB) {
  const auto md = static_cast<double>(m);
  const auto jd = static_cast<double>(j);
  const double n = md + 2.0 * jd;
  return kB * n *
         (std::log(n / std::sqrt(jd * (md + jd))) -
          md / (2.0 * n) * std::log1p(md / jd));
}

}  // namespace

std::optional<double> beta_for_path(std::int64_t m, std::int64_t j, double E) {
  detail::require_index("m", m, 1);
  detail::require_index("j", j, 0);
  require_energy("E", E);
  if (j == 0) {
    return std::nullopt;
  }
  return std::log1p(static_cast<double>(m) / static_cast<double>(j)) /
         (2.0 * E);
}

double partition_1d(double beta, double E) {
  const double x = beta * E;
  return std::exp(x) + std::exp(-x);
}

double log_partition_1d(double beta, double E) {
  const double ax = std::fabs(beta * E);
  return ax + std::log1p(std::exp(-2.0 * ax));
}

SpinEnsemble1D SpinEnsemble1D::from_path(std::int64_t m, std::int64_t j,
                                         double E) {
  return SpinEnsemble1D(m, j, E, beta_for_path(m, j, E));
}

SpinEnsemble1D::SpinEnsemble1D(std::int64_t m, std::int64_t j, double E,
                               std::optional<double> beta)
    : m_(detail::require_index("m", m, 1)),
      j_(detail::require_index("j", j, 0)),
      energy_(require_energy("E", E)),
      beta_(require_beta("beta", beta)) {}

double ensemble_entropy_large_n(const SpinEnsemble1D& ens, double kB) {
  if (ens.j() == 0) {
    return 0.0;
  }
  return closed_form_entropy(ens.m(), ens.j(), kB);
}

double ensemble_entropy_two_level(const SpinEnsemble1D& ens, double kB) {
  if (ens.is_classical()) {
    return 0.0;
  }
  const double x = *ens.beta() * ens.energy();
  const auto n = static_cast<double>(ens.spins());
  return kB * n * (log_partition_1d(*ens.beta(), ens.energy()) -
                   x * std::tanh(x));
}

double ensemble_entropy_cosh_form(const SpinEnsemble1D& ens, double kB) {
  const auto n = static_cast<double>(ens.spins());
  if (ens.is_classical()) {
    return -kB * n * std::numbers::ln2;
  }
  const double x = *ens.beta() * ens.energy();
  const double log_cosh =
      log_partition_1d(*ens.beta(), ens.energy()) - std::numbers::ln2;
  return kB * n * (log_cosh - x * std::tanh(x));
}

Moments<double> energy_moments(const SpinEnsemble1D& ens) {
  const auto m = static_cast<double>(ens.m());
  const auto j = static_cast<double>(ens.j());
  const auto n = static_cast<double>(ens.spins());
  const double e = ens.energy();
  const double mean = m * e;
  const double coefficient = 4.0 * j * (m + j) / (m * m);
  return {mean, n * n * e * e, coefficient * mean * mean};
}

double partition_2d(double beta1, double E1, double beta2, double E2) {
  return partition_1d(beta1, E1) + partition_1d(beta2, E2);
}

SpinEnsemble2D SpinEnsemble2D::from_path(std::int64_t m1, std::int64_t j,
                                         std::int64_t k, double E1,
                                         double E2) {
  return SpinEnsemble2D(m1, j, k, E1, E2, beta_for_path(m1, j, E1), 0.0);
}

SpinEnsemble2D::SpinEnsemble2D(std::int64_t m1, std::int64_t j,
                               std::int64_t k, double E1, double E2,
                               std::optional<double> beta1, double beta2)
    : m1_(detail::require_index("m1", m1, 1)),
      j_(detail::require_index("j", j, 0)),
      k_(detail::require_index("k", k, 0)),
      energy1_(require_energy("E1", E1)),
      energy2_(require_energy("E2", E2)),
      beta1_(require_beta("beta1", beta1)),
      beta2_(*require_beta("beta2", beta2)) {}

double SpinEnsemble2D::z1() const {
  if (!beta1_) {
    return std::numeric_limits<double>::infinity();
  }
  return partition_1d(*beta1_, energy1_);
}

double SpinEnsemble2D::z2() const { return partition_1d(beta2_, energy2_); }

double SpinEnsemble2D::log_z1() const {
  if (!beta1_) {
    return std::numeric_limits<double>::infinity();
  }
  return log_partition_1d(*beta1_, energy1_);
}

double SpinEnsemble2D::log_z2() const {
  return log_partition_1d(beta2_, energy2_);
}

bool restriction_check(const SpinEnsemble2D& ens, double tol) {
  if (ens.k() == 0) {
    throw ValidationError("k", "restriction needs N2 = 2k >= 1");
  }
  if (std::isnan(tol) || tol < 0.0) {
    throw ValidationError("tol", "must be >= 0");
  }
  const double target =
      static_cast<double>(ens.n1()) / static_cast<double>(ens.n2());
  const double ratio = std::exp(ens.log_z1() - ens.log_z2());
  return std::fabs(ratio - target) <= tol * target;
}

double combined_partition_2d(const SpinEnsemble2D& ens) {
  const auto n1 = static_cast<double>(ens.n1());
  const auto n2 = static_cast<double>(ens.n2());
  if (ens.k() == 0) {
    return n1 * ens.log_z1();
  }
  return n1 * ens.log_z1() + n2 * ens.log_z2() + n2 * std::log1p(n1 / n2) +
         n1 * std::log1p(n2 / n1);
}

double ensemble_entropy_2d(const SpinEnsemble2D& ens, double kB) {
  const double s1 = ens.j() == 0 ? 0.0 : closed_form_entropy(ens.m1(), ens.j(), kB);
  if (ens.k() == 0) {
    return s1;
  }
  const auto n1 = static_cast<double>(ens.n1());
  const auto n2 = static_cast<double>(ens.n2());
  const double s2 = kB * n2 * std::numbers::ln2;
  const double mixing =
      kB * (n2 * std::log1p(n1 / n2) + n1 * std::log1p(n2 / n1));
  return s1 + s2 + mixing;
}

}  // namespace pathsum
