#include "cli.hpp"

#include <functional>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"
#include "pathsum/errors.hpp"

namespace pathsum::cli {
namespace {

struct CommonFlags {
  std::string format;
  std::string out;
  double tol = 1e-12;
  int digits = 15;

  void attach(CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out, "Output file (default: stdout)");
    sub->add_option("--tol", tol, "Series tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--digits", digits, "Significant digits in output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
  }

  Common resolve() const {
    Common c;
    if (format == "csv") {
      c.format = Format::csv;
    } else if (format == "json") {
      c.format = Format::json;
    }
    if (!out.empty()) {
      c.out = out;
    }
    c.tol = tol;
    c.digits = digits;
    c.max_terms = max_terms_from_env();
    return c;
  }
};

template <typename T>
void optional_option(CLI::App* sub, const std::string& name,
                     std::optional<T>& target, const std::string& help) {
  sub->add_option_function<T>(
      name, [&target](const T& v) { target = v; }, help);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Lattice path sums: multiplicities, kernel series, "
               "probabilities and spin ensembles"};
  app.name("pathsum");
  app.require_subcommand(1);

  CommonFlags flags;
  std::function<Result(const Common&)> action;

  MultiplicityArgs mult;
  auto* sub = app.add_subcommand("multiplicity", "Exact path-class count W");
  sub->add_option("--dim", mult.dim, "Dimension")->check(CLI::Range(1, 3));
  optional_option(sub, "--m", mult.m, "Net steps (1D)");
  optional_option(sub, "--m1", mult.m1, "Net steps along x");
  optional_option(sub, "--m2", mult.m2, "Net steps along y (full 2D form)");
  optional_option(sub, "--j", mult.j, "Flips along x");
  optional_option(sub, "--k", mult.k, "Flips along y");
  optional_option(sub, "--l", mult.l, "Flips along z");
  sub->add_option("--kB", mult.kB, "Boltzmann constant");
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_multiplicity(mult, c); }; });

  ParamsArgs params;
  sub = app.add_subcommand("params", "Dimensionless b and de Broglie check (SI)");
  sub->add_option("--mass", params.mass, "Particle mass [kg]")->capture_default_str();
  sub->add_option("--hbar", params.hbar, "Reduced Planck constant [J s]")
      ->capture_default_str();
  sub->add_option("--kB", params.kB, "Boltzmann constant [J/K]")->capture_default_str();
  sub->add_option("--dx", params.dx, "Spatial step [m]")->required();
  optional_option(sub, "--dy", params.dy, "Spatial step along y [m]");
  sub->add_option("--dt", params.dt, "Time step [s]")->required();
  optional_option(sub, "--distance", params.distance, "Distance covered in dt [m]");
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_params(params, c); }; });

  KernelArgs kern;
  sub = app.add_subcommand("kernel", "Gaussian path-sum series");
  sub->add_option("--dim", kern.dim, "Dimension")->check(CLI::Range(1, 2));
  sub->add_option("--b", kern.b, "Dimensionless b")->required();
  sub->add_option("--m,--m1", kern.m, "Net steps")->required();
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_kernel(kern, c); }; });

  Fig2Args fig2;
  sub = app.add_subcommand("fig2", "Kernel sum against exp(-b m^2) over a b grid");
  sub->add_option("--m", fig2.m_list, "Net step values")->delimiter(',')
      ->capture_default_str();
  sub->add_option("--b-min", fig2.b_min, "Smallest b")->capture_default_str();
  sub->add_option("--b-max", fig2.b_max, "Largest b")->capture_default_str();
  sub->add_option("--n-points", fig2.n_points, "Grid points per m")
      ->capture_default_str();
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_fig2(fig2, c); }; });

  Fig3Args fig3;
  sub = app.add_subcommand("fig3", "1D class probabilities P(j, m)");
  sub->add_option("--m", fig3.m_list, "Net step values")->delimiter(',')
      ->capture_default_str();
  sub->add_option("--j-max", fig3.j_max, "Largest j listed")->capture_default_str();
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_fig3(fig3, c); }; });

  Prob2dArgs prob2d;
  sub = app.add_subcommand("prob2d", "Rotated-frame 2D class probability");
  sub->add_option("--m1", prob2d.m1, "Net steps along x")->capture_default_str();
  sub->add_option("--j", prob2d.j, "Flips along x")->capture_default_str();
  sub->add_option("--k", prob2d.k, "Flips along y")->capture_default_str();
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_prob2d(prob2d, c); }; });

  AltArgs alt;
  sub = app.add_subcommand("alt", "Alternative (binomial) probability and its partial sums");
  sub->add_option("--m", alt.m, "Net steps")->capture_default_str();
  optional_option(sub, "--j", alt.j, "Single class to evaluate");
  sub->add_option("--target", alt.target, "Partial-sum threshold (> 1)")
      ->capture_default_str();
  sub->add_option("--j-cap", alt.j_cap, "Largest j summed")->capture_default_str();
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_alt(alt, c); }; });

  MomentsArgs moments;
  sub = app.add_subcommand("moments", "Distance moments of a 1D class");
  sub->add_option("--m", moments.m, "Net steps")->required();
  sub->add_option("--j", moments.j, "Flips")->required();
  sub->add_option("--dx", moments.dx, "Step length")->capture_default_str();
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_moments(moments, c); }; });

  PathsArgs paths;
  sub = app.add_subcommand("paths", "Enumerate step sequences");
  sub->add_option("--net", paths.net, "Net displacement per axis, e.g. 2,0")
      ->delimiter(',')
      ->required();
  sub->add_option("--total", paths.total, "Total number of steps")->required();
  sub->add_option_function<std::vector<std::int64_t>>(
         "--flips", [&paths](const std::vector<std::int64_t>& v) { paths.flips = v; },
         "Keep only this flip class, one count per axis")
      ->delimiter(',');
  sub->add_option("--cap", paths.cap, "Largest listing allowed")->capture_default_str();
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_paths(paths, c); }; });

  EnsembleArgs ens;
  sub = app.add_subcommand("ensemble", "Two-level spin ensemble matched to a path class");
  sub->add_option("--m", ens.m, "Net steps (x)")->required();
  sub->add_option("--j", ens.j, "Flips (x)")->required();
  sub->add_option("--E", ens.E, "Level energy")->capture_default_str();
  sub->add_option("--kB", ens.kB, "Boltzmann constant")->capture_default_str();
  optional_option(sub, "--k", ens.k, "Flips along y (adds the 2D report)");
  sub->add_option("--E2", ens.E2, "Level energy of type-2 spins")->capture_default_str();
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_ensemble(ens, c); }; });

  ValidateArgs val;
  sub = app.add_subcommand("validate", "Run oracle-vs-formula checks");
  sub->add_option("--scope", val.scope, "Suite to run")
      ->check(CLI::IsMember({"combinatorics", "kernel", "stats", "ensemble", "all"}))
      ->capture_default_str();
  flags.attach(sub);
  sub->callback([&] { action = [&](const Common& c) { return cmd_validate(val, c); }; });

  std::vector<std::string> storage{"pathsum"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) {
    argv.push_back(s.data());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }

  try {
    const Common common = flags.resolve();
    const Result r = action(common);
    emit(r.content, common.out, out);
    if (!r.message.empty()) {
      err << "error: " << r.message << '\n';
    }
    return r.exit_code;
  } catch (const ValidationError& e) {
    err << "error: invalid " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArgs;
  } catch (const CapExceededError& e) {
    err << "error: cap " << e.cap() << " exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArgs;
  }
}

}  // namespace pathsum::cli
