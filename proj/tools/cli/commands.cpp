#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "pathsum/pathsum.hpp"
#include "validate.hpp"

namespace pathsum::cli {
namespace {

std::int64_t need(const char* field, const std::optional<std::int64_t>& v) {
  if (!v) {
    throw ValidationError(field, "is required");
  }
  return *v;
}

void require_convergent_b(const char* field, double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw ValidationError(field, "must be a positive finite number");
  }
}

std::string join(const std::vector<std::int64_t>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
  }
  return s;
}

Result finish(const Table& t, const Common& c, Format fallback) {
  return {render(t, c.format.value_or(fallback), c.digits)};
}

Result finish(const Report& r, const Common& c) {
  return {render(r, c.format.value_or(Format::text), c.digits)};
}

// Count of sequences in the class with per-axis flips `f` on net `net`.
BigCount class_count(const std::vector<std::int64_t>& net,
                     const std::vector<std::int64_t>& f) {
  std::vector<std::int64_t> parts;
  for (std::size_t a = 0; a < net.size(); ++a) {
    parts.push_back(std::llabs(net[a]) + f[a]);
    parts.push_back(f[a]);
  }
  return multinomial(parts);
}

// Visits every flip tuple with the given number of extra step pairs.
void for_each_flip_tuple(std::size_t dim, std::int64_t pairs,
                         const std::function<void(std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> f(dim, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t a,
                                                          std::int64_t left) {
    if (a + 1 == dim) {
      f[a] = left;
      fn(f);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      f[a] = v;
      rec(a + 1, left - v);
    }
  };
  rec(0, pairs);
}

}  // namespace

std::uint64_t max_terms_from_env() {
  const char* raw = std::getenv("PATHSUM_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultMaxTerms;
  }
  std::uint64_t value = 0;
  const std::string_view text(raw);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ValidationError("PATHSUM_MAX_TERMS", "must be a positive integer");
  }
  return value;
}

Result cmd_multiplicity(const MultiplicityArgs& a, const Common& c) {
  Report r{"multiplicity"};
  const std::int64_t j = a.j.value_or(0);
  const std::int64_t k = a.k.value_or(0);
  std::optional<BigCount> w;
  double entropy = 0.0;
  std::int64_t steps = 0;
  if (a.dim == 1) {
    const PathClass1D cls(need("m", a.m), j);
    w = multiplicity_1d(cls);
    entropy = entropy_1d(cls, a.kB);
    steps = cls.steps();
  } else if (a.dim == 2 && a.m2) {
    const std::int64_t m1 = need("m1", a.m1);
    w = multiplicity_2d_full(m1, *a.m2, j, k);
    entropy = entropy_2d(m1, *a.m2, j, k, a.kB);
    steps = m1 + *a.m2 + 2 * (j + k);
  } else if (a.dim == 2 || a.dim == 3) {
    std::optional<std::int64_t> l;
    if (a.dim == 3) {
      l = a.l.value_or(0);
    }
    const PathClassND cls(need("m1", a.m1), j, k, l);
    w = a.dim == 2 ? multiplicity_2d_rotated(cls) : multiplicity_3d(cls);
    entropy = a.kB * w->log_value();
    steps = cls.steps();
  } else {
    throw ValidationError("dim", "must be 1, 2 or 3");
  }
  r.add("W", w->to_string());
  r.add("log_W", w->log_value());
  r.add("entropy", entropy);
  r.add("dim", static_cast<std::int64_t>(a.dim));
  r.add("steps", steps);
  r.add("exact", w->has_exact());
  return finish(r, c);
}

Result cmd_params(const ParamsArgs& a, const Common& c) {
  const PhysicalParams p(PhysicalParamsInit{a.mass, a.dx, a.dy, a.dt, a.hbar, a.kB});
  Report r{"params"};
  r.add("b", dimensionless_b(p));
  r.add("action_coefficient", p.action_coefficient());
  r.add("mass", p.mass());
  r.add("dx", p.dx());
  r.add("dt", p.dt());
  r.add("hbar", p.hbar());
  if (a.distance) {
    const auto check = debroglie_limit(p, *a.distance);
    r.add("velocity", *a.distance / p.dt());
    r.add("lambda", check.lambda);
    r.add("dx_ok", check.dx_ok);
    r.add("range_ok", check.range_ok);
  }
  return finish(r, c);
}

Result cmd_kernel(const KernelArgs& a, const Common& c) {
  require_convergent_b("b", a.b);
  SumResult s;
  if (a.dim == 1) {
    s = kernel_sum_1d(a.b, a.m, c.tol, c.max_terms);
  } else if (a.dim == 2) {
    s = kernel_sum_2d(a.b, a.m, c.tol, c.max_terms);
  } else {
    throw ValidationError("dim", "must be 1 or 2");
  }
  const auto md = static_cast<double>(a.m);
  const double limit = std::exp(-a.b * md * md);
  Report r{"kernel"};
  r.add("dim", static_cast<std::int64_t>(a.dim));
  r.add("b", a.b);
  r.add("m", a.m);
  r.add("bm", a.b * md);
  r.add("sum", s.value);
  r.add("limit", limit);
  r.add("ratio", s.value / limit);
  r.add("terms_used", static_cast<std::int64_t>(s.terms_used));
  r.add("truncation_bound", s.truncation_bound);
  r.add("diverged", s.diverged);
  Result out = finish(r, c);
  if (s.diverged) {
    out.exit_code = kExitCapExceeded;
    out.message = "series reached the term cap of " + std::to_string(c.max_terms);
  }
  return out;
}

Result cmd_fig2(const Fig2Args& a, const Common& c) {
  require_convergent_b("b_min", a.b_min);
  if (!std::isfinite(a.b_max) || (a.n_points > 1 && !(a.b_max > a.b_min))) {
    throw ValidationError("b_max", "must be finite and exceed b_min");
  }
  if (a.n_points == 0) {
    throw ValidationError("n_points", "must be >= 1");
  }
  if (a.m_list.empty()) {
    throw ValidationError("m", "needs at least one value");
  }
  auto grid = linear_grid(a.b_min, a.b_max, a.n_points);
  for (auto& b : grid) {
    b = canonical(b, c.digits);
  }
  const auto rows = threshold_scan(a.m_list, grid, c.tol, c.max_terms);
  Table t;
  t.meta = {{"command", "fig2"},
            {"m", join(a.m_list, ';')},
            {"b_min", format_number(a.b_min, c.digits)},
            {"b_max", format_number(a.b_max, c.digits)},
            {"n_points", std::to_string(a.n_points)},
            {"tol", format_number(c.tol, c.digits)},
            {"max_terms", std::to_string(c.max_terms)}};
  t.columns = {"m", "b", "bm", "sum", "limit", "ratio"};
  for (const auto& row : rows) {
    if (row.diverged) {
      throw CapExceededError(c.max_terms,
                             "series reached the term cap at b=" +
                                 format_number(row.b, c.digits));
    }
    t.rows.push_back({row.m, row.b, row.bm, row.sum_value, row.limit_value,
                      row.ratio});
  }
  return finish(t, c, Format::csv);
}

Result cmd_fig3(const Fig3Args& a, const Common& c) {
  if (a.m_list.empty()) {
    throw ValidationError("m", "needs at least one value");
  }
  Table t;
  t.meta = {{"command", "fig3"},
            {"m", join(a.m_list, ';')},
            {"j_max", std::to_string(a.j_max)},
            {"tol", format_number(c.tol, c.digits)}};
  t.columns = {"m", "j", "probability"};
  for (const auto m : a.m_list) {
    const auto table = probability_1d(m, a.j_max, c.tol, c.max_terms);
    const auto tag = std::to_string(m);
    t.meta.emplace_back("normalization_m" + tag,
                        format_number(table.normalization, c.digits));
    t.meta.emplace_back("tail_bound_m" + tag,
                        format_number(table.tail_bound, c.digits));
    t.meta.emplace_back("truncated_at_m" + tag,
                        std::to_string(table.truncated_at));
    for (const auto& e : table.entries) {
      if (e.j > a.j_max) {
        break;
      }
      t.rows.push_back({m, e.j, e.probability});
    }
  }
  return finish(t, c, Format::csv);
}

Result cmd_prob2d(const Prob2dArgs& a, const Common& c) {
  detail::require_index("j", a.j, 0);
  detail::require_index("k", a.k, 0);
  const auto table = probability_2d(a.m1, a.j + a.k, c.tol, c.max_terms);
  const double p = table.probability(a.j, a.k);
  const double percent = 100.0 * p;
  Report r{"prob2d"};
  r.add("m1", a.m1);
  r.add("j", a.j);
  r.add("k", a.k);
  r.add("probability", p);
  r.add("probability_percent", percent);
  r.add("normalization", table.normalization);
  r.add("tail_bound", table.tail_bound);
  r.add("truncated_at", table.truncated_at);
  if (a.m1 == 1 && a.j == 1 && a.k == 1) {
    const bool agrees = std::fabs(percent - kQuotedProb2dPercent) < 0.005;
    r.add("quoted_percent", kQuotedProb2dPercent);
    r.add("ratio_to_quoted", percent / kQuotedProb2dPercent);
    r.add("agrees_with_quoted", agrees);
    r.lines.push_back("comparison: computed " + format_number(percent, 4) +
                      "% vs quoted " + format_number(kQuotedProb2dPercent, 4) +
                      "% (" + (agrees ? "agree" : "disagree") + ")");
  }
  return finish(r, c);
}

Result cmd_alt(const AltArgs& a, const Common& c) {
  Report r{"alt"};
  r.add("m", a.m);
  if (a.j) {
    r.add("j", *a.j);
    r.add("probability_alt", probability_1d_alt(a.m, *a.j));
  }
  const auto probe = alt_divergence_probe(a.m, a.target, a.j_cap);
  r.add("target", a.target);
  r.add("j_cap", a.j_cap);
  r.add("crossed", probe.crossed);
  r.add("at_j", probe.at_j);
  r.add("partial_sum", probe.partial_sum);
  return finish(r, c);
}

Result cmd_moments(const MomentsArgs& a, const Common& c) {
  const PathClass1D cls(a.m, a.j);
  const auto exact = moments_1d_exact(cls);
  const auto approx = moments_1d(cls, a.dx);
  const BigRational coefficient(BigInt(4 * a.j) * (a.m + a.j), BigInt(a.m) * a.m);
  Report r{"moments"};
  r.add("m", a.m);
  r.add("j", a.j);
  r.add("mean_exact", exact.mean.str());
  r.add("mean_square_exact", exact.mean_square.str());
  r.add("variance_exact", exact.variance.str());
  r.add("variance_coefficient", coefficient.str());
  r.add("identity_holds",
        exact.variance == exact.mean_square - exact.mean * exact.mean);
  r.add("dx", a.dx);
  r.add("mean", approx.mean);
  r.add("mean_square", approx.mean_square);
  r.add("variance", approx.variance);
  return finish(r, c);
}

Result cmd_paths(const PathsArgs& a, const Common& c) {
  if (a.net.empty() || a.net.size() > 3) {
    throw ValidationError("net", "needs 1 to 3 components");
  }
  if (a.flips && a.flips->size() != a.net.size()) {
    throw ValidationError("flips", "needs one count per net component");
  }
  if (a.flips) {
    for (const auto f : *a.flips) {
      detail::require_index("flips", f, 0);
    }
  }
  std::map<FlipCounts, std::uint64_t> groups;
  std::vector<std::pair<FlipCounts, StepSequence>> kept;
  for_each_path(a.net, a.total, [&](std::span<const Step> steps) {
    const auto f = flip_counts(steps, a.net);
    ++groups[f];
    if (a.flips) {
      for (std::size_t ax = 0; ax < a.net.size(); ++ax) {
        if (f[ax] != (*a.flips)[ax]) {
          return;
        }
      }
    }
    if (kept.size() == a.cap) {
      throw CapExceededError(a.cap, "more than " + std::to_string(a.cap) +
                                        " sequences; raise --cap");
    }
    kept.push_back({f, StepSequence{{steps.begin(), steps.end()}}});
  });

  std::int64_t reach = 0;
  for (const auto n : a.net) {
    reach += std::llabs(n);
  }
  const std::int64_t pairs = (a.total - reach) / 2;
  BigInt formula = 0;
  bool groups_match = true;
  for_each_flip_tuple(a.net.size(), pairs, [&](std::vector<std::int64_t>& f) {
    const BigInt expected = class_count(a.net, f).exact();
    FlipCounts key{};
    std::copy(f.begin(), f.end(), key.begin());
    const auto it = groups.find(key);
    const std::uint64_t got = it == groups.end() ? 0 : it->second;
    groups_match = groups_match && BigInt(got) == expected;
    if (!a.flips || f == *a.flips) {
      formula += expected;
    }
  });
  const bool ok = groups_match && BigInt(kept.size()) == formula;

  Result out;
  const Format format = c.format.value_or(Format::text);
  if (format == Format::text) {
    Report r{"paths"};
    r.add("count", static_cast<std::int64_t>(kept.size()));
    r.add("formula", formula.str());
    r.add("check", ok);
    for (const auto& [f, seq] : kept) {
      r.lines.push_back(seq.to_string());
    }
    out = finish(r, c);
  } else {
    Table t;
    t.meta = {{"command", "paths"},
              {"net", join(a.net, ';')},
              {"total", std::to_string(a.total)},
              {"count", std::to_string(kept.size())},
              {"formula", formula.str()},
              {"check", ok ? "true" : "false"}};
    t.columns = {"index"};
    const char* names[] = {"flips_x", "flips_y", "flips_z"};
    for (std::size_t ax = 0; ax < a.net.size(); ++ax) {
      t.columns.emplace_back(names[ax]);
    }
    t.columns.emplace_back("sequence");
    std::int64_t index = 0;
    for (const auto& [f, seq] : kept) {
      std::vector<Cell> row{index++};
      for (std::size_t ax = 0; ax < a.net.size(); ++ax) {
        row.emplace_back(f[ax]);
      }
      row.emplace_back(seq.to_string());
      t.rows.push_back(std::move(row));
    }
    out = finish(t, c, Format::csv);
  }
  if (!ok) {
    out.exit_code = kExitCheckFailed;
    out.message = "enumerated count disagrees with the multinomial formula";
  }
  return out;
}

Result cmd_ensemble(const EnsembleArgs& a, const Common& c) {
  const auto ens = SpinEnsemble1D::from_path(a.m, a.j, a.E);
  Report r{"ensemble"};
  r.add("m", a.m);
  r.add("j", a.j);
  r.add("spins", ens.spins());
  r.add("up", ens.up());
  r.add("down", ens.down());
  r.add("classical", ens.is_classical());
  const double ln_w = log_multiplicity_1d(PathClass1D(a.m, a.j));
  if (ens.is_classical()) {
    r.add("beta", std::numeric_limits<double>::infinity());
    r.add("entropy", 0.0);
    r.add("ln_W", ln_w);
  } else {
    const double beta = *ens.beta();
    const double closed = ensemble_entropy_large_n(ens, a.kB);
    const double cosh_form = ensemble_entropy_cosh_form(ens, a.kB);
    const auto e = energy_moments(ens);
    const double stirling = closed / (a.kB * ln_w) - 1.0;
    r.add("beta", beta);
    r.add("Z", partition_1d(beta, a.E));
    r.add("log_Z", log_partition_1d(beta, a.E));
    r.add("p_up", ens.p_up());
    r.add("p_down", ens.p_down());
    r.add("entropy", closed);
    r.add("entropy_two_level", ensemble_entropy_two_level(ens, a.kB));
    r.add("entropy_cosh_form", cosh_form);
    r.add("entropy_sign_discrepancy", std::signbit(closed) != std::signbit(cosh_form));
    r.add("energy_mean", e.mean);
    r.add("energy_mean_square", e.mean_square);
    r.add("energy_variance", e.variance);
    r.add("ln_W", ln_w);
    r.add("stirling_rel_error", stirling);
    r.add("stirling_within_1pct", std::fabs(stirling) <= 0.01);
  }
  if (a.k) {
    const auto ens2 = SpinEnsemble2D::from_path(a.m, a.j, *a.k, a.E, a.E2);
    r.add("k", *a.k);
    r.add("n1", ens2.n1());
    r.add("n2", ens2.n2());
    r.add("z1", ens2.z1());
    r.add("z2", ens2.z2());
    r.add("combined_log_Z", combined_partition_2d(ens2));
    r.add("entropy_2d", ensemble_entropy_2d(ens2, a.kB));
    if (*a.k > 0) {
      const auto n1 = static_cast<double>(ens2.n1());
      const auto n2 = static_cast<double>(ens2.n2());
      r.add("z_ratio", std::exp(ens2.log_z1() - ens2.log_z2()));
      r.add("n_ratio", n1 / n2);
      r.add("restriction_holds", restriction_check(ens2, c.tol));
      r.add("restriction_satisfiable", n1 >= n2);
      if (n1 >= n2) {
        r.add("beta1_for_restriction", std::acosh(n1 / n2) / std::fabs(a.E));
      }
    }
  }
  return finish(r, c);
}

Result cmd_validate(const ValidateArgs& a, const Common& c) {
  const auto checks = run_validation(a.scope, c.max_terms);
  Table t;
  bool all = true;
  std::string failed;
  t.columns = {"scope", "name", "passed", "measured_error", "tolerance"};
  for (const auto& ch : checks) {
    t.rows.push_back({ch.scope, ch.name, ch.passed, ch.measured_error,
                      ch.tolerance});
    if (!ch.passed) {
      all = false;
      failed += (failed.empty() ? "" : ", ") + ch.name;
    }
  }
  t.meta = {{"command", "validate"},
            {"scope", a.scope},
            {"checks", std::to_string(checks.size())},
            {"passed", all ? "true" : "false"}};
  Result out = finish(t, c, Format::json);
  if (!all) {
    out.exit_code = kExitCheckFailed;
    out.message = "validation failed: " + failed;
  }
  return out;
}

}  // namespace pathsum::cli
