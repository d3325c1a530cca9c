#include <array>
#include <cstdlib>
#include <string>

#include "pathsum/combinatorics.hpp"
#include "pathsum/errors.hpp"

namespace pathsum {

namespace {

constexpr std::array<char, 3> kAxisNames{'x', 'y', 'z'};

class Walker {
 public:
  Walker(std::span<const std::int64_t> net, std::int64_t total,
         const PathVisitor& visit)
      : dimension_(static_cast<int>(net.size())),
        total_(total),
        visit_(visit) {
    for (int a = 0; a < dimension_; ++a) {
      remaining_[a] = net[a];
    }
    path_.reserve(static_cast<std::size_t>(total));
  }

  void run() { descend(); }

 private:
  std::int64_t distance() const {
    std::int64_t d = 0;
    for (int a = 0; a < dimension_; ++a) {
      d += std::llabs(remaining_[a]);
    }
    return d;
  }

  void descend() {
    const auto depth = static_cast<std::int64_t>(path_.size());
    if (depth == total_) {
      visit_(path_);
      return;
    }
    const std::int64_t left_after = total_ - depth - 1;
    for (int a = 0; a < dimension_; ++a) {
      for (const std::int8_t sign : {std::int8_t{1}, std::int8_t{-1}}) {
        remaining_[a] -= sign;
        if (distance() <= left_after) {
          path_.push_back({static_cast<Axis>(a), sign});
          descend();
          path_.pop_back();
        }
        remaining_[a] += sign;
      }
    }
  }

  int dimension_;
  std::int64_t total_;
  const PathVisitor& visit_;
  std::array<std::int64_t, 3> remaining_{};
  std::vector<Step> path_;
};

void validate_walk(std::span<const std::int64_t> net,
                   std::int64_t total_steps) {
  if (net.empty() || net.size() > 3) {
    throw ValidationError("dimension", "must be 1, 2 or 3, got " +
                                           std::to_string(net.size()));
  }
  detail::require_index("total_steps", total_steps, 0);
  std::int64_t reach = 0;
  for (const auto n : net) {
    if (std::llabs(n) > kMaxIndex) {
      throw ValidationError("net", "component out of range");
    }
    reach += std::llabs(n);
  }
  if (reach > total_steps) {
    throw ValidationError("total_steps",
                          "shorter than the net displacement " +
                              std::to_string(reach));
  }
  if ((total_steps - reach) % 2 != 0) {
    throw ValidationError("total_steps",
                          "parity differs from the net displacement");
  }
}

}  // namespace

std::array<std::int64_t, 3> StepSequence::displacement() const {
  std::array<std::int64_t, 3> d{};
  for (const auto& s : steps) {
    d[static_cast<std::size_t>(s.axis)] += s.sign;
  }
  return d;
}

std::string StepSequence::to_string() const {
  std::string out;
  for (const auto& s : steps) {
    if (!out.empty()) {
      out += ' ';
    }
    out += s.sign > 0 ? '+' : '-';
    out += kAxisNames[static_cast<std::size_t>(s.axis)];
  }
  return out;
}

FlipCounts flip_counts(std::span<const Step> steps,
                       std::span<const std::int64_t> net) {
  FlipCounts flips{};
  for (const auto& s : steps) {
    const auto a = static_cast<std::size_t>(s.axis);
    const std::int64_t direction = (a < net.size() && net[a] < 0) ? -1 : 1;
    if (s.sign != direction) {
      ++flips[a];
    }
  }
  return flips;
}

void for_each_path(std::span<const std::int64_t> net, std::int64_t total_steps,
                   const PathVisitor& visit) {
  validate_walk(net, total_steps);
  Walker(net, total_steps, visit).run();
}

std::vector<StepSequence> enumerate_paths(std::span<const std::int64_t> net,
                                          std::int64_t total_steps,
                                          std::size_t cap) {
  std::vector<StepSequence> out;
  for_each_path(net, total_steps, [&](std::span<const Step> steps) {
    if (out.size() == cap) {
      throw CapExceededError(
          cap, "enumerate_paths: more than " + std::to_string(cap) +
                   " sequences");
    }
    out.push_back({std::vector<Step>(steps.begin(), steps.end())});
  });
  return out;
}

std::map<FlipCounts, std::uint64_t> count_paths_by_flips(
    std::span<const std::int64_t> net, std::int64_t total_steps) {
  std::map<FlipCounts, std::uint64_t> counts;
  for_each_path(net, total_steps, [&](std::span<const Step> steps) {
    ++counts[flip_counts(steps, net)];
  });
  return counts;
}

}  // namespace pathsum
