#include "pathsum/core.hpp"

#include <cmath>
#include <string>

#include "pathsum/errors.hpp"

namespace pathsum {

namespace detail {

std::int64_t require_index(const char* field, std::int64_t value,
                           std::int64_t min_value) {
  if (value < min_value) {
    throw ValidationError(field, "must be >= " + std::to_string(min_value) +
                                     ", got " + std::to_string(value));
  }
  if (value > kMaxIndex) {
    throw ValidationError(field, "must be <= 2^40, got " +
                                     std::to_string(value));
  }
  return value;
}

double require_positive(const char* field, double value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ValidationError(field, "must be finite and > 0, got " +
                                     std::to_string(value));
  }
  return value;
}

}  // namespace detail

PathClass1D::PathClass1D(std::int64_t m, std::int64_t j)
    : m_(detail::require_index("m", m, 1)),
      j_(detail::require_index("j", j, 0)) {}

PathClassND::PathClassND(std::int64_t m1, std::int64_t j, std::int64_t k,
                         std::optional<std::int64_t> l)
    : m1_(detail::require_index("m1", m1, 1)),
      j_(detail::require_index("j", j, 0)),
      k_(detail::require_index("k", k, 0)),
      l_(l ? std::optional(detail::require_index("l", *l, 0)) : std::nullopt) {}

PhysicalParams::PhysicalParams(const PhysicalParamsInit& init)
    : mass_(detail::require_positive("mass", init.mass)),
      dx_(detail::require_positive("dx", init.dx)),
      dy_(detail::require_positive("dy", init.dy.value_or(init.dx))),
      dt_(detail::require_positive("dt", init.dt)),
      hbar_(detail::require_positive("hbar", init.hbar)),
      kB_(detail::require_positive("kB", init.kB)) {}

double dimensionless_b(const PhysicalParams& params) {
  return params.action_coefficient() / params.hbar();
}

DeBroglieCheck debroglie_limit(const PhysicalParams& params, double distance) {
  detail::require_positive("distance", distance);
  const double v = distance / params.dt();
  const double lambda = params.hbar() / (params.mass() * v);
  const double dx = params.dx();
  return {lambda, dx >= lambda, lambda <= dx && dx <= distance};
}

}  // namespace pathsum
