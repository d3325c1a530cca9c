#pragma once

#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pathsum {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// A path count held as an exact integer (when it was computed) together with
/// its natural logarithm.
class BigCount {
 public:
  static BigCount from_exact(BigInt exact);
  static BigCount from_log(double log_value);

  bool has_exact() const noexcept { return exact_.has_value(); }
  /// Throws std::logic_error when only the logarithm is available.
  const BigInt& exact() const;
  double log_value() const noexcept { return log_value_; }

  /// 1 / count as a double; underflows to 0 for astronomically large counts.
  double reciprocal() const;

  /// Decimal digits of the exact value, or "exp(<log>)" when absent.
  std::string to_string() const;

 private:
  BigCount(std::optional<BigInt> exact, double log_value)
      : exact_(std::move(exact)), log_value_(log_value) {}

  std::optional<BigInt> exact_;
  double log_value_;
};

/// Natural log of a non-negative big integer, accurate to a few ulps;
/// -infinity for zero.
double log_of(const BigInt& value);

}  // namespace pathsum
