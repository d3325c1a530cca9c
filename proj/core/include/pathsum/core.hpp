#pragma once

#include <cstdint>
#include <optional>

namespace pathsum {

/// Upper bound accepted for any step or flip index. Keeps m + 2j (and the
/// 3D analogue) exactly representable as a double.
inline constexpr std::int64_t kMaxIndex = std::int64_t{1} << 40;

/// A 1D path class: m net forward steps, j flips.
///
/// Every member sequence has N = m + 2j steps, of which m + j are forward and
/// j are backward.
class PathClass1D {
 public:
  PathClass1D(std::int64_t m, std::int64_t j);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t j() const noexcept { return j_; }
  std::int64_t steps() const noexcept { return m_ + 2 * j_; }
  std::int64_t forward() const noexcept { return m_ + j_; }
  std::int64_t backward() const noexcept { return j_; }
  bool is_classical() const noexcept { return j_ == 0; }

  friend bool operator==(const PathClass1D&, const PathClass1D&) = default;

 private:
  std::int64_t m_;
  std::int64_t j_;
};

/// A path class in the rotated frame, where the displacement lies along the
/// first axis (m2 = m3 = 0). `l` is present only in 3D.
class PathClassND {
 public:
  PathClassND(std::int64_t m1, std::int64_t j, std::int64_t k,
              std::optional<std::int64_t> l = std::nullopt);

  std::int64_t m1() const noexcept { return m1_; }
  std::int64_t j() const noexcept { return j_; }
  std::int64_t k() const noexcept { return k_; }
  std::optional<std::int64_t> l() const noexcept { return l_; }
  int dimension() const noexcept { return l_ ? 3 : 2; }

  /// m1 + 2j + 2k (+ 2l in 3D).
  std::int64_t steps() const noexcept {
    return m1_ + 2 * j_ + 2 * k_ + 2 * l_.value_or(0);
  }

  friend bool operator==(const PathClassND&, const PathClassND&) = default;

 private:
  std::int64_t m1_;
  std::int64_t j_;
  std::int64_t k_;
  std::optional<std::int64_t> l_;
};

/// Designated-initializer input for PhysicalParams. `dy` defaults to `dx`.
struct PhysicalParamsInit {
  double mass = 0.0;
  double dx = 0.0;
  std::optional<double> dy;
  double dt = 0.0;
  double hbar = 0.0;
  double kB = 1.0;
};

/// Mass, step sizes, transit time and the two constants, in any single
/// consistent unit system. All fields are finite and strictly positive.
class PhysicalParams {
 public:
  explicit PhysicalParams(const PhysicalParamsInit& init);

  double mass() const noexcept { return mass_; }
  double dx() const noexcept { return dx_; }
  double dy() const noexcept { return dy_; }
  double dt() const noexcept { return dt_; }
  double hbar() const noexcept { return hbar_; }
  double kB() const noexcept { return kB_; }

  /// c = M dx^2 / (2 dt), the action per squared step count.
  double action_coefficient() const noexcept {
    return mass_ * dx_ * dx_ / (2.0 * dt_);
  }

  bool isotropic() const noexcept { return dx_ == dy_; }

 private:
  double mass_;
  double dx_;
  double dy_;
  double dt_;
  double hbar_;
  double kB_;
};

/// b = M dx^2 / (2 dt hbar).
double dimensionless_b(const PhysicalParams& params);

struct DeBroglieCheck {
  double lambda;  ///< hbar / (M v), v = distance / dt
  bool dx_ok;     ///< dx >= lambda
  bool range_ok;  ///< lambda <= dx <= distance
};

/// Admissibility of the step size against the de Broglie wavelength for a
/// transit of `distance` in time dt.
DeBroglieCheck debroglie_limit(const PhysicalParams& params, double distance);

namespace detail {
std::int64_t require_index(const char* field, std::int64_t value,
                           std::int64_t min_value);
double require_positive(const char* field, double value);
}  // namespace detail

}  // namespace pathsum
