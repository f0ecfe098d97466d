#include <gtest/gtest.h>

#include <cmath>

#include "copula_transport/copula.hpp"
#include "copula_transport/dependence.hpp"
#include "copula_transport/error.hpp"
#include "copula_transport/synth.hpp"

using namespace copula_transport;

namespace {

// One observation per cell of the m x m grid: the binned copula is exactly
// the independence signature.
std::pair<Panel, Panel> grid_filling_pair(std::size_t m) {
  std::vector<double> x, y;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      x.push_back(static_cast<double>(a * m + b));
      y.push_back(static_cast<double>(b * m + a));
    }
  }
  return {Panel::from_columns({x}), Panel::from_columns({y})};
}

TargetSet monotone_targets(std::size_t m) {
  const auto specs = monotone_target_specs();
  return build_target_set(specs, m, 0);
}

}  // namespace

TEST(Intra, ZeroOnSelfAndSymmetric) {
  const Panel a = generate_gaussian_panel(400, 2, 0.6, 1, 0);
  const Panel b = generate_gaussian_panel(400, 2, -0.2, 2, 0);
  EXPECT_EQ(intra_distance(a, a, 16), 0.0);
  EXPECT_EQ(intra_distance(a, b, 16), intra_distance(b, a, 16));
  EXPECT_GT(intra_distance(a, b, 16), 0.0);
}

TEST(Intra, RejectsUnivariateAndMismatchedDimension) {
  const Panel a = generate_gaussian_panel(100, 2, 0.6, 1, 0);
  const Panel b = generate_gaussian_panel(100, 3, 0.6, 1, 0);
  EXPECT_THROW(intra_distance(a.columns(0, 1), a.columns(1, 1), 8), DataError);
  EXPECT_THROW(intra_distance(a, b, 8), DataError);
}

TEST(Intra, LengthsMayDiffer) {
  const Panel a = generate_gaussian_panel(400, 2, 0.6, 1, 0);
  const Panel b = generate_gaussian_panel(250, 2, 0.6, 2, 0);
  EXPECT_LT(intra_distance(a, b, 8), 0.1);
}

TEST(Tdc, IndependenceInputGivesExactlyZero) {
  const auto [x, y] = grid_filling_pair(16);
  const TdcResult r = tdc(x, y, monotone_targets(16), 16);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.independence_distance, 0.0);
}

TEST(Tdc, TargetInputGivesExactlyOne) {
  const Panel x = generate_uniform_panel(512, 1, 3, 0);
  std::vector<double> neg(x.values().begin(), x.values().end());
  for (double& v : neg) v = -v;
  const TargetSet targets = monotone_targets(16);
  const TdcResult up = tdc(x, x, targets, 16);
  EXPECT_EQ(up.value, 1.0);
  EXPECT_EQ(up.activated_target, "comonotone");
  const TdcResult down = tdc(x, Panel(512, 1, neg), targets, 16);
  EXPECT_EQ(down.value, 1.0);
  EXPECT_EQ(down.activated_target, "countermonotone");
}

TEST(Tdc, LiesInUnitIntervalAndMatchesFormula) {
  const TargetSet targets = monotone_targets(8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Panel p = generate_gaussian_panel(300, 2, 0.3, seed, 0);
    const TdcResult r = tdc(p.columns(0, 1), p.columns(1, 1), targets, 8);
    ASSERT_GE(r.value, 0.0);
    ASSERT_LE(r.value, 1.0);
    const double nearest = std::min(r.target_distances[0], r.target_distances[1]);
    EXPECT_DOUBLE_EQ(r.value, r.independence_distance / (r.independence_distance + nearest));
    EXPECT_EQ(r.activated_target,
              r.target_distances[0] <= r.target_distances[1] ? "comonotone" : "countermonotone");
  }
}

TEST(Tdc, StrongerDependenceScoresHigher) {
  const TargetSet targets = monotone_targets(16);
  auto score = [&](double rho) {
    const Panel p = generate_gaussian_panel(2000, 2, rho, 4, 0);
    return tdc(p.columns(0, 1), p.columns(1, 1), targets, 16).value;
  };
  EXPECT_LT(score(0.0), score(0.5));
  EXPECT_LT(score(0.5), score(0.95));
}

TEST(TargetSets, Validation) {
  const Signature ind = independence_signature(2, 4);
  const std::vector<int> up{1, 1};
  const Signature diag = monotone_signature(4, up);
  EXPECT_THROW(TargetSet({}, ind), InvalidArgument);
  EXPECT_THROW(TargetSet({{"a", diag}, {"a", diag}}, ind), InvalidArgument);
  EXPECT_THROW(TargetSet({{"a", ind}}, ind), InvalidArgument);
  EXPECT_THROW(TargetSet({{"a", monotone_signature(8, up)}}, ind), InvalidArgument);
  EXPECT_NO_THROW(TargetSet({{"a", diag}}, ind));
}

TEST(TargetSets, BuiltFromSpecs) {
  std::vector<TargetSpec> specs{{"circle", PatternTarget{PatternKind::kCircle, {}, {}}},
                                {"diag", MonotoneTarget{{1, 1}}}};
  const TargetSet set = build_target_set(specs, 8, 5);
  EXPECT_EQ(set.targets().size(), 2u);
  EXPECT_EQ(set.targets()[0].signature,
            signature_from_pattern(PatternKind::kCircle, 8, default_pattern_sample_size(8), 5));
  std::vector<TargetSpec> wrong_dim{{"diag3", MonotoneTarget{{1, 1, 1}}}, {"diag", MonotoneTarget{{1, 1}}}};
  EXPECT_THROW(build_target_set(wrong_dim, 8, 5), InvalidArgument);
}

TEST(TargetSets, SampledIndependenceBeyondBudget) {
  const Signature dense = independence_copula(2, 8, 1);
  EXPECT_EQ(dense, independence_signature(2, 8));
  const Signature sampled = independence_copula(4, 32, 1);
  EXPECT_LE(sampled.size(), default_pattern_sample_size(32));
}

TEST(Matrix, SymmetricZeroDiagonalAndJobIndependent) {
  std::vector<Panel> panels;
  for (std::uint64_t s = 0; s < 6; ++s) {
    panels.push_back(generate_gaussian_panel(200, 2, 0.15 * static_cast<double>(s), s, 0));
  }
  const DistanceMatrix serial = distance_matrix(panels, IntraMode{}, 8, {}, 1);
  const DistanceMatrix threaded = distance_matrix(panels, IntraMode{}, 8, {}, 4);
  EXPECT_TRUE(std::ranges::equal(serial.entries(), threaded.entries()));
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(serial(i, i), 0.0);
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(serial(i, j), serial(j, i));
  }
  EXPECT_EQ(serial(0, 3), intra_distance(panels[0], panels[3], 8));
}

TEST(Matrix, TdcModeUsesOneMinusTdc) {
  std::vector<Panel> panels;
  for (std::uint64_t s = 0; s < 3; ++s) panels.push_back(generate_uniform_panel(256, 1, s, 0));
  const TargetSet targets = monotone_targets(16);
  const DistanceMatrix dm = distance_matrix(panels, TdcMode{&targets}, 16);
  EXPECT_DOUBLE_EQ(dm(0, 1), 1.0 - tdc(panels[0], panels[1], targets, 16).value);
}

TEST(Matrix, ValidatesEntries) {
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 2, 0}), DataError);
  EXPECT_THROW(DistanceMatrix(2, {0, -1, -1, 0}), DataError);
  EXPECT_THROW(DistanceMatrix(2, {1, 1, 1, 0}), DataError);
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 1}), DataError);
  const DistanceMatrix ok(2, {0, 1, 1, 0});
  EXPECT_EQ(ok.labels()[1], "1");
  EXPECT_EQ(ok.scaled(2.0)(0, 1), 2.0);
}

TEST(Intra, ComonotoneAgainstCountermonotoneOnTwoBins) {
  const Panel co = Panel::from_columns({{1, 2, 3, 4}, {1, 2, 3, 4}});
  const Panel counter = Panel::from_columns({{1, 2, 3, 4}, {4, 3, 2, 1}});
  EXPECT_DOUBLE_EQ(intra_distance(co, counter, 2), 0.5);
}

TEST(Tdc, StrongGaussianActivatesComonotone) {
  const Panel p = generate_gaussian_panel(1000, 2, 0.9, 12, 0);
  const TdcResult r = tdc(p.columns(0, 1), p.columns(1, 1), monotone_targets(16), 16);
  EXPECT_EQ(r.activated_target, "comonotone");
  EXPECT_GT(r.value, 0.5);
  EXPECT_LT(r.value, 1.0);
}
