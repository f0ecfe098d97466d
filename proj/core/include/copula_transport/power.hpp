#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "copula_transport/baselines.hpp"
#include "copula_transport/synth.hpp"

namespace copula_transport {

enum class NullMode : std::uint8_t {
  // x and y drawn from two independent pattern samples.
  kRegenerate,
  // y of the dependent sample randomly permuted.
  kPermute,
};

std::string_view to_string(NullMode mode) noexcept;
NullMode parse_null_mode(std::string_view name);

struct PowerOptions {
  std::size_t trials = 500;
  double alpha = 0.05;
  std::size_t sample_size = 500;
  std::uint64_t seed = 7;
  NullMode null_mode = NullMode::kRegenerate;
  std::size_t jobs = 1;
};

// 0, 1/3, ..., 3.
std::vector<double> default_noise_levels();

struct NullCalibration {
  double threshold = 0.0;
  std::vector<double> statistics;  // valid trials, trial order
  std::size_t failures = 0;
};

// (1 - alpha) empirical quantile, taken as order statistic
// ceil((1 - alpha) B) of the B null statistics (clamped to >= 1, so
// alpha = 1 yields the minimum). `level_index` selects the random streams.
NullCalibration calibrate_null(const EstimatorId& estimator, PatternKind pattern,
                               double noise_level, std::uint32_t level_index,
                               const PowerOptions& options);

double null_threshold(const EstimatorId& estimator, PatternKind pattern,
                      double noise_level, const PowerOptions& options);

struct PowerRow {
  PatternKind pattern;
  double noise_level;
  double power;
  std::size_t trials;  // valid alternative trials
  double threshold;
};

struct PowerCurve {
  EstimatorId estimator;
  std::vector<PowerRow> rows;
};

// For each (pattern, level): fraction of dependent-sample statistics that
// exceed the null threshold. TDC uses targets built from the noiseless
// pattern (monotone targets for the independence pattern).
PowerCurve power_curve(const EstimatorId& estimator,
                       std::span<const PatternKind> patterns,
                       std::span<const double> noise_levels,
                       const PowerOptions& options);

// Long format: estimator,pattern,noise_level,power,trials,threshold
void write_power_csv(std::ostream& out, std::span<const PowerCurve> curves);

}  // namespace copula_transport
