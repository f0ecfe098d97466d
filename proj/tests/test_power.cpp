#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "copula_transport/error.hpp"
#include "copula_transport/power.hpp"

using namespace copula_transport;

namespace {

PowerOptions quick(std::size_t trials = 200, std::size_t n = 200) {
  PowerOptions opts;
  opts.trials = trials;
  opts.sample_size = n;
  opts.seed = 3;
  return opts;
}

}  // namespace

TEST(NullThreshold, PearsonMatchesNormalApproximation) {
  // |r| under independence is approximately |N(0, 1/n)|; its 95% quantile is
  // 1.96 / sqrt(n).
  PowerOptions opts = quick(500, 500);
  const double threshold =
      null_threshold(parse_estimator("pearson"), PatternKind::kLinear, 0.0, opts);
  EXPECT_NEAR(threshold, 1.96 / std::sqrt(500.0), 0.2 * 1.96 / std::sqrt(500.0));
}

TEST(NullThreshold, AlphaOneGivesTheMinimum) {
  PowerOptions opts = quick();
  opts.alpha = 1.0;
  const NullCalibration cal =
      calibrate_null(parse_estimator("spearman"), PatternKind::kCircle, 0.0, 0, opts);
  ASSERT_EQ(cal.statistics.size(), opts.trials);
  EXPECT_EQ(cal.threshold, *std::min_element(cal.statistics.begin(), cal.statistics.end()));
}

TEST(NullThreshold, OrderStatisticDefinition) {
  const PowerOptions opts = quick();
  NullCalibration cal =
      calibrate_null(parse_estimator("pearson"), PatternKind::kStep, 1.0, 3, opts);
  std::sort(cal.statistics.begin(), cal.statistics.end());
  // ceil(0.95 * 200) = 190th smallest.
  EXPECT_EQ(cal.threshold, cal.statistics[189]);
}

TEST(NullThreshold, SameSeedSameThreshold) {
  const PowerOptions opts = quick();
  const auto est = parse_estimator("dcor");
  EXPECT_EQ(null_threshold(est, PatternKind::kSineLow, 1.0, opts),
            null_threshold(est, PatternKind::kSineLow, 1.0, opts));
  PowerOptions other = opts;
  other.seed = 4;
  EXPECT_NE(null_threshold(est, PatternKind::kSineLow, 1.0, opts),
            null_threshold(est, PatternKind::kSineLow, 1.0, other));
}

TEST(NullThreshold, RejectsBadOptions) {
  PowerOptions opts = quick();
  opts.trials = 10;
  EXPECT_THROW(null_threshold(parse_estimator("pearson"), PatternKind::kLinear, 0.0, opts),
               InvalidArgument);
  opts = quick();
  opts.alpha = 0.0;
  EXPECT_THROW(null_threshold(parse_estimator("pearson"), PatternKind::kLinear, 0.0, opts),
               InvalidArgument);
}

TEST(PowerCurve, PowersAreExactFractions) {
  const std::vector<PatternKind> patterns{PatternKind::kLinear, PatternKind::kIndependence};
  const std::vector<double> levels{0.0, 3.0};
  const PowerCurve curve = power_curve(parse_estimator("pearson"), patterns, levels, quick());
  ASSERT_EQ(curve.rows.size(), 4u);
  for (const auto& row : curve.rows) {
    EXPECT_EQ(row.trials, 200u);
    EXPECT_GE(row.power, 0.0);
    EXPECT_LE(row.power, 1.0);
    const double count = row.power * 200.0;
    EXPECT_EQ(count, std::round(count));
  }
  EXPECT_EQ(curve.rows[0].power, 1.0);
  EXPECT_LT(curve.rows[3].power, 0.15);
}

TEST(PowerCurve, IdenticalAcrossJobCounts) {
  const std::vector<PatternKind> patterns{PatternKind::kCircle, PatternKind::kSineHigh};
  const std::vector<double> levels{0.5, 2.0};
  PowerOptions serial = quick(100, 100);
  PowerOptions threaded = serial;
  threaded.jobs = 4;
  for (const char* name : {"rdc", "tdc"}) {
    const auto est = parse_estimator(name);
    const PowerCurve a = power_curve(est, patterns, levels, serial);
    const PowerCurve b = power_curve(est, patterns, levels, threaded);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      EXPECT_EQ(a.rows[i].power, b.rows[i].power) << name;
      EXPECT_EQ(a.rows[i].threshold, b.rows[i].threshold) << name;
    }
  }
}

TEST(PowerCurve, PermutationNullAlsoControlsSize) {
  PowerOptions opts = quick(300, 200);
  opts.null_mode = NullMode::kPermute;
  const std::vector<PatternKind> patterns{PatternKind::kIndependence};
  const std::vector<double> levels{0.0};
  const PowerCurve curve = power_curve(parse_estimator("spearman"), patterns, levels, opts);
  EXPECT_NEAR(curve.rows[0].power, 0.05, 3.0 * std::sqrt(0.05 * 0.95 / 300.0));
}

TEST(PowerCurve, CsvLongFormat) {
  const std::vector<PatternKind> patterns{PatternKind::kLinear};
  const std::vector<double> levels{0.0, 1.0};
  std::vector<PowerCurve> curves{
      power_curve(parse_estimator("pearson"), patterns, levels, quick(100, 50)),
      power_curve(parse_estimator("spearman"), patterns, levels, quick(100, 50))};
  std::ostringstream out;
  write_power_csv(out, curves);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "estimator,pattern,noise_level,power,trials,threshold");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("pearson,linear,0,1,100,", 0), 0u) << line;
  int rows = 1;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

TEST(NoiseLevels, DefaultGrid) {
  const auto levels = default_noise_levels();
  ASSERT_EQ(levels.size(), 10u);
  EXPECT_EQ(levels.front(), 0.0);
  EXPECT_EQ(levels.back(), 3.0);
  EXPECT_EQ(levels[1], 1.0 / 3.0);
}
