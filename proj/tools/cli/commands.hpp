#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "output.hpp"

namespace pathsum::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitCapExceeded = 3;

struct Common {
  std::optional<Format> format;
  std::optional<std::filesystem::path> out;
  double tol = 1e-12;
  int digits = 15;
  std::uint64_t max_terms = 0;
};

struct Result {
  std::string content;
  int exit_code = kExitOk;
  std::string message{};  ///< stderr line, empty when none
};

/// Reads PATHSUM_MAX_TERMS; falls back to 10^6 when unset.
std::uint64_t max_terms_from_env();

struct MultiplicityArgs {
  int dim = 1;
  std::optional<std::int64_t> m, m1, m2, j, k, l;
  double kB = 1.0;
};
Result cmd_multiplicity(const MultiplicityArgs& a, const Common& c);

struct ParamsArgs {
  double mass = 9.1093837015e-31;
  double hbar = 1.054571817e-34;
  double kB = 1.380649e-23;
  double dx = 0.0;
  std::optional<double> dy;
  double dt = 0.0;
  std::optional<double> distance;
};
Result cmd_params(const ParamsArgs& a, const Common& c);

struct KernelArgs {
  int dim = 1;
  double b = 0.0;
  std::int64_t m = 1;
};
Result cmd_kernel(const KernelArgs& a, const Common& c);

struct Fig2Args {
  std::vector<std::int64_t> m_list{1, 2, 3};
  double b_min = 0.01;
  double b_max = 2.0;
  std::size_t n_points = 200;
};
Result cmd_fig2(const Fig2Args& a, const Common& c);

struct Fig3Args {
  std::vector<std::int64_t> m_list{1, 2, 5, 10, 100};
  std::int64_t j_max = 20;
};
Result cmd_fig3(const Fig3Args& a, const Common& c);

/// Probability quoted in the source text for (m1, j, k) = (1, 1, 1), percent.
inline constexpr double kQuotedProb2dPercent = 0.03;

struct Prob2dArgs {
  std::int64_t m1 = 1;
  std::int64_t j = 1;
  std::int64_t k = 1;
};
Result cmd_prob2d(const Prob2dArgs& a, const Common& c);

struct AltArgs {
  std::int64_t m = 2;
  std::optional<std::int64_t> j;
  double target = 1.5;
  std::int64_t j_cap = 10000;
};
Result cmd_alt(const AltArgs& a, const Common& c);

struct MomentsArgs {
  std::int64_t m = 1;
  std::int64_t j = 0;
  double dx = 1.0;
};
Result cmd_moments(const MomentsArgs& a, const Common& c);

struct PathsArgs {
  std::vector<std::int64_t> net;
  std::int64_t total = 0;
  std::optional<std::vector<std::int64_t>> flips;
  std::size_t cap = 1'000'000;
};
Result cmd_paths(const PathsArgs& a, const Common& c);

struct EnsembleArgs {
  std::int64_t m = 1;
  std::int64_t j = 0;
  double E = 1.0;
  double kB = 1.0;
  std::optional<std::int64_t> k;
  double E2 = 1.0;
};
Result cmd_ensemble(const EnsembleArgs& a, const Common& c);

struct ValidateArgs {
  std::string scope = "all";
};
Result cmd_validate(const ValidateArgs& a, const Common& c);

}  // namespace pathsum::cli
