#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pathsum/big_count.hpp"
#include "pathsum/core.hpp"

namespace pathsum {

/// Counts whose total step number is at most this are computed exactly;
/// larger ones carry only their log-gamma logarithm.
inline constexpr std::int64_t kExactStepLimit = 2000;

/// Default bound on the number of sequences enumerate_paths may return.
inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// (sum parts)! / prod(parts!). Exact when the sum is <= kExactStepLimit.
BigCount multinomial(std::span<const std::int64_t> parts);

/// ln of (sum parts)! / prod(parts!) through log-gamma, independent of the
/// exact route.
double log_multinomial(std::span<const std::int64_t> parts);

/// W_1d = N! / ((m+j)! j!).
BigCount multiplicity_1d(const PathClass1D& cls);
double log_multiplicity_1d(const PathClass1D& cls);

/// kB ln W_1d; exactly 0 for the classical class.
double entropy_1d(const PathClass1D& cls, double kB);

/// entropy_1d / N. Tends to kB ln 2 as j grows; 0 when j = 0.
double entropy_rate(const PathClass1D& cls, double kB);

/// Unrotated 2D count (m1+m2+2j+2k)! / ((m1+j)! j! (m2+k)! k!).
BigCount multiplicity_2d_full(std::int64_t m1, std::int64_t m2, std::int64_t j,
                              std::int64_t k);

/// Rotated-frame 2D count (m1+2j+2k)! / ((m1+j)! j! (k!)^2). `cls` must be 2D.
BigCount multiplicity_2d_rotated(const PathClassND& cls);

/// Rotated-frame 3D count (m1+2j+2k+2l)! / ((m1+j)! j! (k!)^2 (l!)^2).
BigCount multiplicity_3d(const PathClassND& cls);

/// kB ln of multiplicity_2d_full.
double entropy_2d(std::int64_t m1, std::int64_t m2, std::int64_t j,
                  std::int64_t k, double kB);

// ---------------------------------------------------------------------------
// Brute-force enumeration

enum class Axis : std::uint8_t { x = 0, y = 1, z = 2 };

struct Step {
  Axis axis;
  std::int8_t sign;  // +1 or -1

  friend bool operator==(const Step&, const Step&) = default;
};

/// One concrete member of a path class.
struct StepSequence {
  std::vector<Step> steps;

  /// Per-axis net displacement.
  std::array<std::int64_t, 3> displacement() const;
  /// Compact rendering, e.g. "+x +x -x +x" or "+x +y -y +x".
  std::string to_string() const;

  friend bool operator==(const StepSequence&, const StepSequence&) = default;
};

using FlipCounts = std::array<std::int64_t, 3>;

/// Number of steps along each axis taken against the net direction on that
/// axis (backward steps when the net is >= 0).
FlipCounts flip_counts(std::span<const Step> steps,
                       std::span<const std::int64_t> net);

using PathVisitor = std::function<void(std::span<const Step>)>;

/// Visits every sequence of `total_steps` unit moves in `net.size()`
/// dimensions (1..3) ending at `net`, in lexicographic move order
/// (+x, -x, +y, -y, +z, -z). Throws ValidationError when the length cannot
/// reach `net`.
void for_each_path(std::span<const std::int64_t> net, std::int64_t total_steps,
                   const PathVisitor& visit);

/// Materialises every sequence; throws CapExceededError as soon as more than
/// `cap` sequences exist.
std::vector<StepSequence> enumerate_paths(
    std::span<const std::int64_t> net, std::int64_t total_steps,
    std::size_t cap = kDefaultEnumerationCap);

/// Brute-force sequence counts grouped by per-axis flip counts.
std::map<FlipCounts, std::uint64_t> count_paths_by_flips(
    std::span<const std::int64_t> net, std::int64_t total_steps);

}  // namespace pathsum
