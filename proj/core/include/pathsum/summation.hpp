#pragma once

#ifdef __FAST_MATH__
#error "-ffast-math removes the error-free transformations CompensatedSum relies on"
#endif

#include <cmath>

namespace pathsum {

/// Kahan-Babuska-Neumaier accumulator. Order-dependent but deterministic:
/// the same sequence of add() calls yields bit-identical results.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace pathsum
