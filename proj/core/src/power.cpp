#include "copula_transport/power.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>

#include "copula_transport/error.hpp"
#include "copula_transport/io.hpp"
#include "copula_transport/parallel.hpp"
#include "copula_transport/rng.hpp"

namespace copula_transport {
namespace {

constexpr std::uint32_t kNullTrialBit = 0x80000000u;

struct Pair {
  Panel x;
  Panel y;
};

void validate(const PowerOptions& options) {
  if (options.trials < 100) {
    throw InvalidArgument("power harness needs at least 100 trials, got " +
                          std::to_string(options.trials));
  }
  if (!(options.alpha > 0.0 && options.alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1]");
  }
  if (options.sample_size < 2) throw InvalidArgument("sample size must be at least 2");
}

Panel draw_pattern(PatternKind pattern, double noise, const PowerOptions& options,
                   StreamPurpose purpose, std::uint32_t level, std::uint32_t trial) {
  PatternSpec spec;
  spec.kind = pattern;
  spec.noise_level = noise;
  spec.sample_size = options.sample_size;
  spec.seed = options.seed;
  spec.stream = stream_id(purpose, static_cast<std::uint32_t>(pattern), level, trial);
  return generate_pattern(spec);
}

Pair dependent_pair(PatternKind pattern, double noise, const PowerOptions& options,
                    std::uint32_t level, std::uint32_t trial) {
  const Panel p = draw_pattern(pattern, noise, options, StreamPurpose::kAlternative, level, trial);
  return {p.columns(0, 1), p.columns(1, 1)};
}

Pair null_pair(PatternKind pattern, double noise, const PowerOptions& options,
               std::uint32_t level, std::uint32_t trial) {
  const Panel first = draw_pattern(pattern, noise, options, StreamPurpose::kNullFirst, level, trial);
  if (options.null_mode == NullMode::kRegenerate) {
    const Panel second =
        draw_pattern(pattern, noise, options, StreamPurpose::kNullSecond, level, trial);
    return {first.columns(0, 1), second.columns(1, 1)};
  }
  // Fisher-Yates on y.
  const std::size_t n = first.length();
  std::vector<double> y(first.column(1).begin(), first.column(1).end());
  Philox4x32 rng(options.seed, stream_id(StreamPurpose::kPermutation,
                                         static_cast<std::uint32_t>(pattern), level, trial));
  for (std::size_t i = n - 1; i > 0; --i) std::swap(y[i], y[rng.below(i + 1)]);
  return {first.columns(0, 1), Panel(n, 1, std::move(y))};
}

std::uint64_t estimator_seed(const PowerOptions& options, PatternKind pattern,
                             std::uint32_t level, std::uint32_t trial) {
  return mix64(options.seed ^ mix64(stream_id(StreamPurpose::kEstimator,
                                              static_cast<std::uint32_t>(pattern), level,
                                              trial)));
}

std::optional<TargetSet> targets_for(const EstimatorId& estimator, PatternKind pattern,
                                     const PowerOptions& options) {
  if (estimator.kind != EstimatorKind::kTdc) return std::nullopt;
  const auto specs = pattern == PatternKind::kIndependence ? monotone_target_specs()
                                                           : pattern_target_specs(pattern);
  return build_target_set(specs, estimator.tdc_resolution, options.seed);
}

// Statistics for trials [0, B); failed trials stay empty.
template <typename Draw>
std::vector<std::optional<double>> run_trials(const EstimatorId& estimator,
                                              const TargetSet* targets,
                                              const PowerOptions& options, Draw&& draw,
                                              std::uint32_t trial_tag, PatternKind pattern,
                                              std::uint32_t level) {
  std::vector<std::optional<double>> stats(options.trials);
  parallel_for(options.trials, options.jobs, [&](std::size_t t) {
    const auto trial = static_cast<std::uint32_t>(t);
    try {
      const Pair pair = draw(trial);
      stats[t] = dependence_statistic(estimator, pair.x, pair.y, targets,
                                      estimator_seed(options, pattern, level,
                                                     trial | trial_tag));
    } catch (const Error&) {
      stats[t].reset();
    }
  });
  return stats;
}

std::size_t count_failures(const std::vector<std::optional<double>>& stats) {
  return static_cast<std::size_t>(
      std::count_if(stats.begin(), stats.end(), [](const auto& s) { return !s.has_value(); }));
}

void check_failures(std::size_t failures, std::size_t trials, std::string_view what) {
  if (failures * 20 > trials) {
    throw NumericalError(std::string(what) + ": estimator failed on " +
                         std::to_string(failures) + " of " + std::to_string(trials) +
                         " trials (more than 5%)");
  }
}

NullCalibration calibrate(const EstimatorId& estimator, const TargetSet* targets,
                          PatternKind pattern, double noise, std::uint32_t level,
                          const PowerOptions& options) {
  const auto stats = run_trials(
      estimator, targets, options,
      [&](std::uint32_t trial) { return null_pair(pattern, noise, options, level, trial); },
      kNullTrialBit, pattern, level);
  NullCalibration calibration;
  calibration.failures = count_failures(stats);
  check_failures(calibration.failures, options.trials, "null calibration");
  for (const auto& s : stats) {
    if (s) calibration.statistics.push_back(*s);
  }
  std::vector<double> sorted = calibration.statistics;
  std::sort(sorted.begin(), sorted.end());
  const double position = (1.0 - options.alpha) * static_cast<double>(sorted.size());
  std::size_t rank = static_cast<std::size_t>(std::ceil(position - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  calibration.threshold = sorted[rank - 1];
  return calibration;
}

}  // namespace

std::string_view to_string(NullMode mode) noexcept {
  return mode == NullMode::kRegenerate ? "regenerate" : "permute";
}

NullMode parse_null_mode(std::string_view name) {
  if (name == "regenerate") return NullMode::kRegenerate;
  if (name == "permute") return NullMode::kPermute;
  throw InvalidArgument("unknown null mode '" + std::string(name) + "'");
}

std::vector<double> default_noise_levels() {
  std::vector<double> levels;
  for (int i = 0; i < 10; ++i) levels.push_back(static_cast<double>(i) / 3.0);
  return levels;
}

NullCalibration calibrate_null(const EstimatorId& estimator, PatternKind pattern,
                               double noise_level, std::uint32_t level_index,
                               const PowerOptions& options) {
  validate(options);
  const auto targets = targets_for(estimator, pattern, options);
  return calibrate(estimator, targets ? &*targets : nullptr, pattern, noise_level,
                   level_index, options);
}

double null_threshold(const EstimatorId& estimator, PatternKind pattern, double noise_level,
                      const PowerOptions& options) {
  return calibrate_null(estimator, pattern, noise_level, 0, options).threshold;
}

PowerCurve power_curve(const EstimatorId& estimator, std::span<const PatternKind> patterns,
                       std::span<const double> noise_levels, const PowerOptions& options) {
  validate(options);
  PowerCurve curve{estimator, {}};
  for (PatternKind pattern : patterns) {
    const auto targets = targets_for(estimator, pattern, options);
    const TargetSet* target_ptr = targets ? &*targets : nullptr;
    for (std::size_t li = 0; li < noise_levels.size(); ++li) {
      const double noise = noise_levels[li];
      const auto level = static_cast<std::uint32_t>(li);
      const NullCalibration null =
          calibrate(estimator, target_ptr, pattern, noise, level, options);
      const auto stats = run_trials(
          estimator, target_ptr, options,
          [&](std::uint32_t trial) {
            return dependent_pair(pattern, noise, options, level, trial);
          },
          0u, pattern, level);
      const std::size_t failures = count_failures(stats);
      check_failures(failures, options.trials, "power trials");
      std::size_t exceed = 0;
      for (const auto& s : stats) {
        if (s && *s > null.threshold) ++exceed;
      }
      const std::size_t valid = options.trials - failures;
      curve.rows.push_back({pattern, noise,
                            static_cast<double>(exceed) / static_cast<double>(valid), valid,
                            null.threshold});
    }
  }
  return curve;
}

void write_power_csv(std::ostream& out, std::span<const PowerCurve> curves) {
  out << "estimator,pattern,noise_level,power,trials,threshold\n";
  for (const PowerCurve& curve : curves) {
    for (const PowerRow& row : curve.rows) {
      out << to_string(curve.estimator.kind) << ',' << to_string(row.pattern) << ','
          << format_double(row.noise_level) << ',' << format_double(row.power) << ','
          << row.trials << ',' << format_double(row.threshold) << '\n';
    }
  }
}

}  // namespace copula_transport
