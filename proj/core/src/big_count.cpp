#include "pathsum/big_count.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pathsum {

double log_of(const BigInt& value) {
  if (value < 0) {
    throw std::domain_error("log_of: negative argument");
  }
  if (value == 0) {
    return -std::numeric_limits<double>::infinity();
  }
  const auto msb = static_cast<long>(boost::multiprecision::msb(value));
  if (msb < 64) {
    return std::log(static_cast<double>(value.convert_to<std::uint64_t>()));
  }
  // Keep the top 64 bits; uint64 -> double rounds once.
  const long shift = msb - 63;
  const BigInt top = value >> shift;
  return std::log(static_cast<double>(top.convert_to<std::uint64_t>())) +
         static_cast<double>(shift) * std::numbers::ln2;
}

BigCount BigCount::from_exact(BigInt exact) {
  if (exact < 0) {
    throw std::domain_error("BigCount: negative count");
  }
  const double log_value = log_of(exact);
  return BigCount(std::move(exact), log_value);
}

BigCount BigCount::from_log(double log_value) {
  return BigCount(std::nullopt, log_value);
}

const BigInt& BigCount::exact() const {
  if (!exact_) {
    throw std::logic_error("BigCount: exact value not computed (log only)");
  }
  return *exact_;
}

double BigCount::reciprocal() const {
  if (exact_ && boost::multiprecision::msb(*exact_) < 64) {
    return 1.0 / static_cast<double>(exact_->convert_to<std::uint64_t>());
  }
  return std::exp(-log_value_);
}

std::string BigCount::to_string() const {
  if (exact_) {
    return exact_->str();
  }
  return "exp(" + std::to_string(log_value_) + ")";
}

}  // namespace pathsum
