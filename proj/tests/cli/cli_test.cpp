#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/output.hpp"
#include "json.hpp"
#include "pathsum/kernel.hpp"

namespace pathsum::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string field(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + "=", 0) == 0) {
      return line.substr(key.size() + 1);
    }
  }
  return "<missing>";
}

double number(const std::string& text) {
  double v = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), v);
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string part;
  while (std::getline(ss, part, sep)) {
    parts.push_back(part);
  }
  return parts;
}

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) {
      csv.comments.push_back(line);
    } else if (csv.header.empty()) {
      csv.header = split(line, ',');
    } else {
      csv.rows.push_back(split(line, ','));
    }
  }
  return csv;
}

class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) {
      old_ = old;
    }
    ::setenv(name, value, 1);
  }
  ~EnvGuard() {
    if (old_) {
      ::setenv(name_, old_->c_str(), 1);
    } else {
      ::unsetenv(name_);
    }
  }

 private:
  const char* name_;
  std::optional<std::string> old_;
};

TEST(NumberFormat, ShortestWhenItFits) {
  EXPECT_EQ(format_number(0.1, 15), "0.1");
  EXPECT_EQ(format_number(2.0, 15), "2");
  EXPECT_EQ(format_number(1e-12, 15), "1e-12");
  EXPECT_EQ(format_number(1.0 / 3.0, 15), "0.333333333333333");
  EXPECT_EQ(format_number(1.0 / 3.0, 4), "0.3333");
  EXPECT_EQ(format_number(-2.5e300, 15), "-2.5e+300");
  EXPECT_EQ(format_number(std::nan(""), 15), "nan");
  EXPECT_EQ(format_number(-INFINITY, 15), "-inf");
}

TEST(NumberFormat, CanonicalValuesRoundTrip) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> mantissa(-10.0, 10.0);
  std::uniform_int_distribution<int> exponent(-30, 30);
  for (int digits : {6, 12, 15, 17}) {
    for (int i = 0; i < 2000; ++i) {
      const double v = std::ldexp(mantissa(rng), exponent(rng));
      const double c = canonical(v, digits);
      EXPECT_EQ(canonical(c, digits), c);
      EXPECT_EQ(number(format_number(c, digits)), c);
    }
  }
  EXPECT_EQ(canonical(0.1 + 0.2, 17), 0.1 + 0.2);
}

TEST(Multiplicity, PrintsExactCounts) {
  EXPECT_EQ(field(run({"multiplicity", "--dim", "1", "--m", "2", "--j", "1"}).out, "W"), "4");
  EXPECT_EQ(field(run({"multiplicity", "--dim", "2", "--m1", "2", "--m2", "2", "--j", "0",
                       "--k", "0"}).out, "W"),
            "6");
  EXPECT_EQ(field(run({"multiplicity", "--dim", "1", "--m", "1", "--j", "0"}).out, "W"), "1");
  EXPECT_EQ(field(run({"multiplicity", "--dim", "2", "--m1", "2", "--k", "1"}).out, "W"), "12");
  EXPECT_EQ(field(run({"multiplicity", "--dim", "3", "--m1", "1", "--j", "0", "--k", "1",
                       "--l", "1"}).out, "W"),
            "120");
}

TEST(Multiplicity, ExactIntegerPrintedInFull) {
  const auto r = run({"multiplicity", "--m", "10", "--j", "100"});
  EXPECT_EQ(r.code, 0);
  // C(210, 100) has 62 digits.
  EXPECT_EQ(field(r.out, "W").size(), 62u);
}

TEST(Multiplicity, BadArgumentsExitTwoAndNameTheParameter) {
  auto r = run({"multiplicity", "--dim", "1", "--m", "0", "--j", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("m"), std::string::npos);
  EXPECT_TRUE(r.out.empty());

  r = run({"multiplicity", "--dim", "1", "--m", "2", "--j", "-1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("invalid j"), std::string::npos);

  r = run({"multiplicity", "--dim", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("invalid m"), std::string::npos);

  EXPECT_EQ(run({"multiplicity", "--dim", "4", "--m", "1"}).code, 2);
  EXPECT_EQ(run({"multiplicity", "--bogus"}).code, 2);
  EXPECT_EQ(run({"multiplicity", "--m", "two"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"kernel", "--b", "0.5", "--m", "1", "--format", "xml"}).code, 2);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fig2"), std::string::npos);
}

TEST(Params, ElectronDefaults) {
  const auto r = run({"params", "--mass", "9.109e-31", "--hbar", "1.0546e-34", "--dx",
                      "1e-10", "--dt", "1e-16"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(number(field(r.out, "b")), 0.43186990328086477, 1e-14);
  EXPECT_EQ(run({"params", "--dx", "-1e-10", "--dt", "1e-16"}).code, 2);
  EXPECT_EQ(run({"params", "--dt", "1e-16"}).code, 2);
}

TEST(Kernel, ReportsSumAndRatio) {
  const auto r = run({"kernel", "--b", "0.25", "--m", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(number(field(r.out, "sum")), 0.38631860241332607, 1e-14);
  EXPECT_NEAR(number(field(r.out, "ratio")), 1.0501228369358389, 1e-13);
  EXPECT_EQ(field(r.out, "diverged"), "false");
  EXPECT_EQ(run({"kernel", "--b", "0", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"kernel", "--b", "-1", "--m", "2"}).code, 2);
}

TEST(Kernel, TermCapFromEnvironmentExitsThree) {
  EnvGuard guard("PATHSUM_MAX_TERMS", "10");
  const auto r = run({"kernel", "--b", "0.0001", "--m", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(field(r.out, "diverged"), "true");
  EXPECT_EQ(field(r.out, "terms_used"), "10");
}

TEST(Kernel, MalformedEnvironmentCapIsBadArgument) {
  EnvGuard guard("PATHSUM_MAX_TERMS", "lots");
  const auto r = run({"kernel", "--b", "0.5", "--m", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("PATHSUM_MAX_TERMS"), std::string::npos);
}

TEST(Fig2, DefaultGridShape) {
  const auto r = run({"fig2", "--n-points", "40"});
  ASSERT_EQ(r.code, 0);
  const auto csv = parse_csv(r.out);
  EXPECT_EQ(csv.header,
            (std::vector<std::string>{"m", "b", "bm", "sum", "limit", "ratio"}));
  ASSERT_EQ(csv.rows.size(), 120u);
  EXPECT_EQ(csv.rows.front()[0], "1");
  EXPECT_EQ(csv.rows.front()[1], "0.01");
  EXPECT_EQ(csv.rows.back()[0], "3");
  EXPECT_EQ(csv.rows.back()[1], "2");
  for (std::size_t i = 0; i + 1 < csv.rows.size(); ++i) {
    if (csv.rows[i][0] == csv.rows[i + 1][0]) {
      EXPECT_LT(number(csv.rows[i][1]), number(csv.rows[i + 1][1]));
      EXPECT_LE(number(csv.rows[i + 1][5]), number(csv.rows[i][5]));
    }
  }
  EXPECT_NEAR(number(csv.rows[39][5]), 1.0, 1e-6);
}

TEST(Fig2, ThresholdRowMatchesOracle) {
  const auto r = run({"fig2", "--m", "2", "--b-min", "0.25", "--b-max", "1", "--n-points",
                      "4"});
  ASSERT_EQ(r.code, 0);
  const auto csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows[0][1], "0.25");
  EXPECT_NEAR(number(csv.rows[0][5]), 1.0501228369358389, 1e-9);
}

TEST(Fig2, InvalidRangeExitsTwo) {
  EXPECT_EQ(run({"fig2", "--b-min", "0"}).code, 2);
  EXPECT_EQ(run({"fig2", "--b-min", "1", "--b-max", "0.5"}).code, 2);
  EXPECT_EQ(run({"fig2", "--m", "0"}).code, 2);
}

// Re-evaluates every formula column from the parsed (m, b) inputs and
// rebuilds the file.
std::string regenerate_fig2(const std::string& text, int digits, double tol) {
  const auto csv = parse_csv(text);
  std::ostringstream os;
  for (const auto& c : csv.comments) {
    os << c << '\n';
  }
  os << "m,b,bm,sum,limit,ratio\n";
  for (const auto& row : csv.rows) {
    std::int64_t m = 0;
    std::from_chars(row[0].data(), row[0].data() + row[0].size(), m);
    const double b = number(row[1]);
    const auto eval = threshold_scan(std::vector{m}, std::vector{b}, tol)[0];
    os << m << ',' << format_number(b, digits) << ',' << format_number(eval.bm, digits)
       << ',' << format_number(eval.sum_value, digits) << ','
       << format_number(eval.limit_value, digits) << ','
       << format_number(eval.ratio, digits) << '\n';
  }
  return os.str();
}

TEST(Fig2, CsvRoundTripIsBitIdentical) {
  for (const int digits : {15, 9, 17}) {
    const auto r = run({"fig2", "--n-points", "37", "--b-min", "0.013", "--digits",
                        std::to_string(digits)});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(regenerate_fig2(r.out, digits, 1e-12), r.out) << "digits=" << digits;
  }
}

TEST(Fig2, RepeatedRunsAreIdentical) {
  const std::vector<std::string> args{"fig2", "--n-points", "50"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Fig2, JsonRowsUseColumnNames) {
  const auto r = run({"fig2", "--n-points", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 9u);
  EXPECT_EQ(doc["rows"][0]["m"], 1);
  EXPECT_EQ(doc["rows"][0]["b"], 0.01);
  EXPECT_EQ(doc["meta"]["command"], "fig2");
  const auto csv = parse_csv(run({"fig2", "--n-points", "3"}).out);
  for (std::size_t i = 0; i < 9; ++i) {
    EXPECT_EQ(doc["rows"][i]["ratio"].get<double>(), number(csv.rows[i][5]));
  }
}

TEST(Fig3, ColumnsSumToOneAndDecrease) {
  const auto r = run({"fig3", "--m", "1,2,100", "--j-max", "80"});
  ASSERT_EQ(r.code, 0);
  const auto csv = parse_csv(r.out);
  EXPECT_EQ(csv.header, (std::vector<std::string>{"m", "j", "probability"}));
  std::map<std::string, double> totals;
  std::map<std::string, double> last;
  for (const auto& row : csv.rows) {
    const double p = number(row[2]);
    if (last.count(row[0])) {
      EXPECT_LT(p, last[row[0]]);
    }
    last[row[0]] = p;
    totals[row[0]] += p;
  }
  for (const auto& [m, total] : totals) {
    EXPECT_NEAR(total, 1.0, 1e-12) << "m=" << m;
  }
  EXPECT_GE(number(csv.rows[162][2]), 0.989);
  EXPECT_EQ(csv.rows[162][0], "100");
  EXPECT_EQ(csv.rows[162][1], "0");
  bool has_norm = false;
  for (const auto& c : csv.comments) {
    has_norm = has_norm || c.rfind("# normalization_m2=1.34099964679", 0) == 0;
  }
  EXPECT_TRUE(has_norm);
}

TEST(Prob2d, ReportsComputedAndQuotedValues) {
  const auto a = run({"prob2d", "--m1", "1", "--j", "1", "--k", "1"});
  ASSERT_EQ(a.code, 0);
  EXPECT_NEAR(number(field(a.out, "probability")), 0.0097836901546735137, 1e-12);
  EXPECT_EQ(field(a.out, "quoted_percent"), "0.03");
  EXPECT_EQ(field(a.out, "agrees_with_quoted"), "false");
  EXPECT_NE(a.out.find("comparison: computed"), std::string::npos);
  EXPECT_EQ(a.out, run({"prob2d"}).out);
}

TEST(Alt, CrossesTarget) {
  const auto r = run({"alt", "--m", "2", "--target", "1.5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(field(r.out, "crossed"), "true");
  EXPECT_EQ(field(r.out, "at_j"), "2");
  EXPECT_EQ(run({"alt", "--m", "2", "--target", "0.5"}).code, 2);
}

TEST(Moments, ExactRationalIdentity) {
  const auto r = run({"moments", "--m", "3", "--j", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(field(r.out, "mean_exact"), "3");
  EXPECT_EQ(field(r.out, "mean_square_exact"), "49");
  EXPECT_EQ(field(r.out, "variance_exact"), "40");
  EXPECT_EQ(field(r.out, "variance_coefficient"), "40/9");
  EXPECT_EQ(field(r.out, "identity_holds"), "true");
}

TEST(Paths, FigureCounts) {
  auto r = run({"paths", "--net", "2", "--total", "4"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(field(r.out, "count"), "4");
  EXPECT_EQ(field(r.out, "check"), "true");
  EXPECT_NE(r.out.find("\n-x +x +x +x\n"), std::string::npos);

  r = run({"paths", "--net", "2,2", "--total", "4"});
  EXPECT_EQ(field(r.out, "count"), "6");

  r = run({"paths", "--net", "2,0", "--total", "4", "--flips", "0,1"});
  EXPECT_EQ(field(r.out, "count"), "12");
  EXPECT_EQ(field(r.out, "formula"), "12");
}

TEST(Paths, JsonListing) {
  const auto r = run({"paths", "--net", "2,2", "--total", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["rows"].size(), 6u);
  EXPECT_EQ(doc["meta"]["formula"], "6");
  EXPECT_EQ(doc["rows"][0]["sequence"], "+x +x +y +y");
}

TEST(Paths, CapAndParityErrors) {
  EXPECT_EQ(run({"paths", "--net", "1,0,0", "--total", "9", "--cap", "100"}).code, 3);
  EXPECT_EQ(run({"paths", "--net", "2", "--total", "5"}).code, 2);
  EXPECT_EQ(run({"paths", "--net", "2,0", "--total", "4", "--flips", "1"}).code, 2);
}

TEST(Ensemble, PathTemperature) {
  const auto r = run({"ensemble", "--m", "2", "--j", "1", "--E", "1", "--kB", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(number(field(r.out, "beta")), 0.54930614433405485, 1e-14);
  EXPECT_EQ(field(r.out, "entropy_sign_discrepancy"), "true");
  EXPECT_NEAR(number(field(r.out, "entropy")), 2.2493405784752334, 1e-13);
}

TEST(Ensemble, ClassicalReport) {
  const auto r = run({"ensemble", "--m", "2", "--j", "0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(field(r.out, "classical"), "true");
  EXPECT_EQ(field(r.out, "beta"), "inf");
  EXPECT_EQ(field(r.out, "entropy"), "0");
}

TEST(Ensemble, StirlingLine) {
  auto r = run({"ensemble", "--m", "200", "--j", "100"});
  EXPECT_NEAR(number(field(r.out, "stirling_rel_error")), 0.013876535613313500, 1e-9);
  r = run({"ensemble", "--m", "5000", "--j", "2500"});
  EXPECT_EQ(field(r.out, "stirling_within_1pct"), "true");
}

TEST(Ensemble, TwoDimensionalRestriction) {
  const auto r = run({"ensemble", "--m", "2", "--j", "1", "--k", "1"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(field(r.out, "restriction_holds"), "false");
  EXPECT_EQ(field(r.out, "restriction_satisfiable"), "true");
  EXPECT_NEAR(number(field(r.out, "combined_log_Z")), 8.5533322380321106, 1e-12);
}

TEST(Validate, EveryScopePasses) {
  for (const std::string scope : {"combinatorics", "kernel", "stats", "ensemble", "all"}) {
    const auto r = run({"validate", "--scope", scope});
    EXPECT_EQ(r.code, 0) << scope << "\n" << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["meta"]["passed"], "true");
    for (const auto& row : doc["rows"]) {
      EXPECT_TRUE(row["passed"].get<bool>()) << row["name"];
      EXPECT_TRUE(row.contains("measured_error"));
    }
  }
  EXPECT_EQ(run({"validate", "--scope", "physics"}).code, 2);
}

TEST(Output, AtomicFileWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "pathsum_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto path = dir / "fig2.csv";
  const auto r = run({"fig2", "--n-points", "5", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  EXPECT_EQ(content.str(), run({"fig2", "--n-points", "5"}).out);
  EXPECT_EQ(std::distance(std::filesystem::directory_iterator(dir),
                          std::filesystem::directory_iterator{}),
            1);
  EXPECT_EQ(run({"fig2", "--out", (dir / "missing" / "x.csv").string()}).code, 2);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace pathsum::cli
