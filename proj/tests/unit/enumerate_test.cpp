#include <gtest/gtest.h>

#include <array>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "pathsum/combinatorics.hpp"
#include "pathsum/errors.hpp"

namespace pathsum {
namespace {

// The odometer keys on negative-move counts; a flip is a move against the net
// direction, so on axes with negative net the flip count is q + net.
std::map<FlipCounts, std::uint64_t> as_flip_map(
    const std::map<std::array<std::int64_t, 3>, std::uint64_t>& m,
    const std::array<std::int64_t, 3>& net) {
  std::map<FlipCounts, std::uint64_t> out;
  for (const auto& [negatives, count] : m) {
    FlipCounts flips{};
    for (std::size_t a = 0; a < 3; ++a) {
      flips[a] = net[a] < 0 ? negatives[a] + net[a] : negatives[a];
    }
    out[flips] += count;
  }
  return out;
}

TEST(EnumeratePaths, FigureOneHasFourSequences) {
  const std::vector<std::int64_t> net{2};
  const auto paths = enumerate_paths(net, 4);
  ASSERT_EQ(paths.size(), 4u);
  std::set<std::string> rendered;
  for (const auto& p : paths) {
    EXPECT_EQ(p.steps.size(), 4u);
    EXPECT_EQ(p.displacement()[0], 2);
    EXPECT_EQ(flip_counts(p.steps, net)[0], 1);
    rendered.insert(p.to_string());
  }
  EXPECT_EQ(rendered, (std::set<std::string>{"+x +x +x -x", "+x +x -x +x",
                                             "+x -x +x +x", "-x +x +x +x"}));
}

TEST(EnumeratePaths, ClassicalPathIsUnique) {
  const std::vector<std::int64_t> net{5};
  const auto paths = enumerate_paths(net, 5);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].to_string(), "+x +x +x +x +x");
}

TEST(EnumeratePaths, FigureFourHasSixMinimumDistancePaths) {
  const std::vector<std::int64_t> net{2, 2};
  const auto paths = enumerate_paths(net, 4);
  EXPECT_EQ(paths.size(), 6u);
  for (const auto& p : paths) {
    EXPECT_EQ(flip_counts(p.steps, net), (FlipCounts{0, 0, 0}));
  }
}

TEST(EnumeratePaths, FigureFiveHasTwelveTransverseFlips) {
  const std::vector<std::int64_t> net{2, 0};
  const auto counts = count_paths_by_flips(net, 4);
  EXPECT_EQ(counts.at({0, 1, 0}), 12u);
  EXPECT_EQ(counts.at({1, 0, 0}), 4u);
}

TEST(EnumeratePaths, AllSequencesDistinctAndValid) {
  const std::vector<std::int64_t> net{1, -1, 0};
  const auto paths = enumerate_paths(net, 4);
  std::set<std::string> unique;
  for (const auto& p : paths) {
    EXPECT_EQ(p.displacement(), (std::array<std::int64_t, 3>{1, -1, 0}));
    unique.insert(p.to_string());
  }
  EXPECT_EQ(unique.size(), paths.size());
}

TEST(EnumeratePaths, AgreesWithExhaustiveOdometer) {
  struct Case {
    int dim;
    std::array<std::int64_t, 3> net;
    int total;
  };
  for (const Case c : {Case{1, {3, 0, 0}, 9}, Case{2, {1, 1, 0}, 4},
                       Case{2, {1, 0, 0}, 5}, Case{2, {2, -1, 0}, 7},
                       Case{3, {1, 0, 0}, 5}, Case{3, {0, 1, -1}, 4}}) {
    const std::vector<std::int64_t> net(c.net.begin(), c.net.begin() + c.dim);
    EXPECT_EQ(count_paths_by_flips(net, c.total),
              as_flip_map(oracle::exhaustive_walks(c.dim, c.net, c.total), c.net))
        << "dim=" << c.dim << " total=" << c.total;
  }
}

TEST(EnumeratePaths, CountsMatchClosedForms1D) {
  for (std::int64_t m = 1; m <= 6; ++m) {
    for (std::int64_t j = 0; j <= 4; ++j) {
      const std::vector<std::int64_t> net{m};
      const auto counts = count_paths_by_flips(net, m + 2 * j);
      ASSERT_EQ(counts.size(), 1u);
      EXPECT_EQ(BigInt(counts.begin()->second),
                multiplicity_1d(PathClass1D(m, j)).exact());
    }
  }
}

TEST(EnumeratePaths, CountsMatchClosedForms3D) {
  for (std::int64_t m1 = 1; m1 <= 2; ++m1) {
    for (std::int64_t flips = 0; flips <= 2; ++flips) {
      const std::vector<std::int64_t> net{m1, 0, 0};
      for (const auto& [f, n] : count_paths_by_flips(net, m1 + 2 * flips)) {
        EXPECT_EQ(BigInt(n),
                  multiplicity_3d(PathClassND(m1, f[0], f[1], f[2])).exact());
      }
    }
  }
}

TEST(EnumeratePaths, CapExceededIsAnError) {
  const std::vector<std::int64_t> net{2, 2};
  EXPECT_THROW(enumerate_paths(net, 4, 5), CapExceededError);
  EXPECT_EQ(enumerate_paths(net, 4, 6).size(), 6u);
  try {
    enumerate_paths(net, 8, 10);
  } catch (const CapExceededError& e) {
    EXPECT_EQ(e.cap(), 10u);
  }
}

TEST(EnumeratePaths, RejectsUnreachableLengths) {
  const std::vector<std::int64_t> net{3};
  EXPECT_THROW(enumerate_paths(net, 2), ValidationError);
  EXPECT_THROW(enumerate_paths(net, 4), ValidationError);  // parity
  const std::vector<std::int64_t> none;
  EXPECT_THROW(enumerate_paths(none, 2), ValidationError);
  const std::vector<std::int64_t> four{1, 0, 0, 0};
  EXPECT_THROW(enumerate_paths(four, 1), ValidationError);
}

TEST(FlipCounts, NegativeNetCountsForwardSteps) {
  const std::vector<Step> steps{{Axis::x, -1}, {Axis::x, +1}, {Axis::x, -1},
                                {Axis::x, -1}};
  const std::vector<std::int64_t> net{-2};
  EXPECT_EQ(flip_counts(steps, net)[0], 1);
}

}  // namespace
}  // namespace pathsum
