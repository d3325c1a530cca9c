#include "pathsum/combinatorics.hpp"

#include <array>

#include <boost/math/special_functions/gamma.hpp>

#include "pathsum/errors.hpp"

namespace pathsum {

namespace {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k > n - k) {
    k = n - k;
  }
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // Exact at every step: result holds C(n - k + i - 1, i - 1) here.
    result *= n - k + i;
    result /= i;
  }
  return result;
}

double log_factorial(std::int64_t n) {
  if (n < 2) {
    return 0.0;
  }
  return boost::math::lgamma(static_cast<double>(n) + 1.0);
}

std::int64_t checked_total(std::span<const std::int64_t> parts) {
  std::int64_t total = 0;
  for (const auto p : parts) {
    detail::require_index("part", p, 0);
    total += p;
  }
  return total;
}

}  // namespace

BigCount multinomial(std::span<const std::int64_t> parts) {
  const std::int64_t total = checked_total(parts);
  if (total > kExactStepLimit) {
    return BigCount::from_log(log_multinomial(parts));
  }
  // prod_i C(p_1 + ... + p_i, p_i)
  BigInt exact = 1;
  std::int64_t running = 0;
  for (const auto p : parts) {
    running += p;
    exact *= binomial(running, p);
  }
  return BigCount::from_exact(std::move(exact));
}

double log_multinomial(std::span<const std::int64_t> parts) {
  const std::int64_t total = checked_total(parts);
  double result = log_factorial(total);
  for (const auto p : parts) {
    result -= log_factorial(p);
  }
  // Classes with a single non-zero part have W = 1 exactly.
  return result < 0.0 ? 0.0 : result;
}

BigCount multiplicity_1d(const PathClass1D& cls) {
  const std::array parts{cls.forward(), cls.backward()};
  return multinomial(parts);
}

double log_multiplicity_1d(const PathClass1D& cls) {
  const std::array parts{cls.forward(), cls.backward()};
  return log_multinomial(parts);
}

double entropy_1d(const PathClass1D& cls, double kB) {
  if (cls.is_classical()) {
    return 0.0;
  }
  return kB * multiplicity_1d(cls).log_value();
}

double entropy_rate(const PathClass1D& cls, double kB) {
  if (cls.is_classical()) {
    return 0.0;
  }
  return entropy_1d(cls, kB) / static_cast<double>(cls.steps());
}

BigCount multiplicity_2d_full(std::int64_t m1, std::int64_t m2, std::int64_t j,
                              std::int64_t k) {
  detail::require_index("m1", m1, 1);
  detail::require_index("m2", m2, 0);
  detail::require_index("j", j, 0);
  detail::require_index("k", k, 0);
  const std::array parts{m1 + j, j, m2 + k, k};
  return multinomial(parts);
}

BigCount multiplicity_2d_rotated(const PathClassND& cls) {
  if (cls.dimension() != 2) {
    throw ValidationError("l", "must be absent for a 2D class");
  }
  const std::array parts{cls.m1() + cls.j(), cls.j(), cls.k(), cls.k()};
  return multinomial(parts);
}

BigCount multiplicity_3d(const PathClassND& cls) {
  if (cls.dimension() != 3) {
    throw ValidationError("l", "required for a 3D class");
  }
  const std::int64_t l = *cls.l();
  const std::array parts{cls.m1() + cls.j(), cls.j(), cls.k(), cls.k(), l, l};
  return multinomial(parts);
}

double entropy_2d(std::int64_t m1, std::int64_t m2, std::int64_t j,
                  std::int64_t k, double kB) {
  return kB * multiplicity_2d_full(m1, m2, j, k).log_value();
}

}  // namespace pathsum
