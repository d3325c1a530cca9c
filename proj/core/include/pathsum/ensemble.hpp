#pragma once

#include <cstdint>
#include <optional>

#include "pathsum/stats.hpp"

namespace pathsum {

/// Inverse temperature that makes the j-th ensemble's spin populations match
/// its path class: exp(2 beta E) = (m + j) / j. std::nullopt marks the
/// classical limit (j = 0, zero temperature). Throws DomainError for E = 0.
std::optional<double> beta_for_path(std::int64_t m, std::int64_t j, double E);

/// exp(beta E) + exp(-beta E).
double partition_1d(double beta, double E);

/// ln(2 cosh(beta E)) without overflow.
double log_partition_1d(double beta, double E);

/// N = m + 2j spins with energies +-E; m + j up, j down.
class SpinEnsemble1D {
 public:
  /// beta from beta_for_path.
  static SpinEnsemble1D from_path(std::int64_t m, std::int64_t j, double E);

  SpinEnsemble1D(std::int64_t m, std::int64_t j, double E,
                 std::optional<double> beta);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t j() const noexcept { return j_; }
  double energy() const noexcept { return energy_; }
  std::optional<double> beta() const noexcept { return beta_; }
  bool is_classical() const noexcept { return !beta_.has_value(); }

  std::int64_t spins() const noexcept { return m_ + 2 * j_; }
  std::int64_t up() const noexcept { return m_ + j_; }
  std::int64_t down() const noexcept { return j_; }
  double p_up() const noexcept {
    return static_cast<double>(up()) / static_cast<double>(spins());
  }
  double p_down() const noexcept {
    return static_cast<double>(down()) / static_cast<double>(spins());
  }

 private:
  std::int64_t m_;
  std::int64_t j_;
  double energy_;
  std::optional<double> beta_;
};

/// Large-N entropy in closed form:
/// kB N [ln(N / sqrt(j(m+j))) - (m / 2N) ln((m+j)/j)]; 0 when j = 0.
double ensemble_entropy_large_n(const SpinEnsemble1D& ens, double kB);

/// Standard two-level entropy kB N (ln(2 cosh x) - x tanh x), x = beta E.
/// Agrees with ensemble_entropy_large_n when beta comes from beta_for_path.
double ensemble_entropy_two_level(const SpinEnsemble1D& ens, double kB);

/// kB N (ln cosh x - x tanh x), the large-N expression without the factor 2
/// inside the logarithm. Equals ensemble_entropy_two_level - kB N ln 2 and is
/// negative for the path temperatures; exposed for comparison only.
double ensemble_entropy_cosh_form(const SpinEnsemble1D& ens, double kB);

Moments<double> energy_moments(const SpinEnsemble1D& ens);

/// exp(b1 E1) + exp(-b1 E1) + exp(b2 E2) + exp(-b2 E2).
double partition_2d(double beta1, double E1, double beta2, double E2);

/// Two spin species: N1 = m1 + 2j of type 1, N2 = 2k of type 2 (rotated
/// frame, no net type-2 moment).
class SpinEnsemble2D {
 public:
  /// beta1 from beta_for_path(m1, j, E1); beta2 = 0 (equal up/down counts).
  static SpinEnsemble2D from_path(std::int64_t m1, std::int64_t j,
                                  std::int64_t k, double E1, double E2);

  SpinEnsemble2D(std::int64_t m1, std::int64_t j, std::int64_t k, double E1,
                 double E2, std::optional<double> beta1, double beta2);

  std::int64_t m1() const noexcept { return m1_; }
  std::int64_t j() const noexcept { return j_; }
  std::int64_t k() const noexcept { return k_; }
  double energy1() const noexcept { return energy1_; }
  double energy2() const noexcept { return energy2_; }
  std::optional<double> beta1() const noexcept { return beta1_; }
  double beta2() const noexcept { return beta2_; }
  std::int64_t n1() const noexcept { return m1_ + 2 * j_; }
  std::int64_t n2() const noexcept { return 2 * k_; }

  /// Per-species partition functions 2 cosh(beta_i E_i); Z1 is +inf in the
  /// classical limit.
  double z1() const;
  double z2() const;
  double log_z1() const;
  double log_z2() const;

 private:
  std::int64_t m1_;
  std::int64_t j_;
  std::int64_t k_;
  double energy1_;
  double energy2_;
  std::optional<double> beta1_;
  double beta2_;
};

/// |Z1/Z2 - N1/N2| <= tol (N1/N2). Throws ValidationError when k = 0.
bool restriction_check(const SpinEnsemble2D& ens, double tol);

/// ln Z^{N_jk} = N1 ln Z1 + N2 ln Z2 + N2 ln(1 + N1/N2) + N1 ln(1 + N2/N1).
/// Reduces to N1 ln Z1 when k = 0.
double combined_partition_2d(const SpinEnsemble2D& ens);

/// s1 (closed form, species 1) + kB 2k ln 2 (species 2) + mixing terms
/// kB [N2 ln(1 + N1/N2) + N1 ln(1 + N2/N1)].
double ensemble_entropy_2d(const SpinEnsemble2D& ens, double kB);

}  // namespace pathsum
