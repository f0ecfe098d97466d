#include "copula_transport/synth.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "copula_transport/error.hpp"
#include "copula_transport/rng.hpp"

namespace copula_transport {
namespace {

struct PatternInfo {
  PatternKind kind;
  std::string_view name;
  double noise_scale;
};

constexpr std::array<PatternInfo, 9> kPatterns{{
    {PatternKind::kLinear, "linear", 1.0},
    {PatternKind::kQuadratic, "quadratic", 1.0},
    {PatternKind::kCubic, "cubic", 10.0},
    {PatternKind::kSineLow, "sine_low", 2.0},
    {PatternKind::kSineHigh, "sine_high", 1.0},
    {PatternKind::kFourthRoot, "fourth_root", 1.0},
    {PatternKind::kCircle, "circle", 0.25},
    {PatternKind::kStep, "step", 5.0},
    {PatternKind::kIndependence, "independence", 1.0},
}};

constexpr std::array<PatternKind, 8> kBenchmarkPatterns{
    PatternKind::kLinear,     PatternKind::kQuadratic, PatternKind::kCubic,
    PatternKind::kSineLow,    PatternKind::kSineHigh,  PatternKind::kFourthRoot,
    PatternKind::kCircle,     PatternKind::kStep};

constexpr std::array<std::pair<IntraKind, std::string_view>, 4> kIntraNames{{
    {IntraKind::kComonotone, "comonotone"},
    {IntraKind::kCountermonotone, "countermonotone"},
    {IntraKind::kGaussian, "gaussian"},
    {IntraKind::kIndependent, "independent"},
}};

}  // namespace

std::string_view to_string(PatternKind kind) noexcept {
  return kPatterns[static_cast<std::size_t>(kind)].name;
}

PatternKind parse_pattern(std::string_view name) {
  for (const auto& info : kPatterns) {
    if (info.name == name) return info.kind;
  }
  throw InvalidArgument("unknown pattern '" + std::string(name) + "'");
}

std::span<const PatternKind> benchmark_patterns() noexcept {
  return kBenchmarkPatterns;
}

double noise_scale(PatternKind kind) noexcept {
  return kPatterns[static_cast<std::size_t>(kind)].noise_scale;
}

double pattern_value(PatternKind kind, double x, int branch) noexcept {
  using std::numbers::pi;
  switch (kind) {
    case PatternKind::kLinear:
      return x;
    case PatternKind::kQuadratic:
      return 4.0 * (x - 0.5) * (x - 0.5);
    case PatternKind::kCubic: {
      const double u = x - 1.0 / 3.0;
      return 128.0 * u * u * u - 48.0 * u * u * u - 12.0 * u;
    }
    case PatternKind::kSineLow:
      return std::sin(4.0 * pi * x);
    case PatternKind::kSineHigh:
      return std::sin(16.0 * pi * x);
    case PatternKind::kFourthRoot:
      return std::pow(x, 0.25);
    case PatternKind::kCircle: {
      const double u = 2.0 * x - 1.0;
      return (branch < 0 ? -1.0 : 1.0) * std::sqrt(std::max(0.0, 1.0 - u * u));
    }
    case PatternKind::kStep:
      return x > 0.5 ? 1.0 : 0.0;
    case PatternKind::kIndependence:
      return 0.0;
  }
  return 0.0;
}

Panel generate_pattern(const PatternSpec& spec) {
  if (spec.sample_size < 2) {
    throw InvalidArgument("pattern sample size must be at least 2");
  }
  if (!std::isfinite(spec.noise_level) || spec.noise_level < 0.0) {
    throw InvalidArgument("noise level must be finite and nonnegative");
  }
  const std::size_t n = spec.sample_size;
  Philox4x32 rng(spec.seed, spec.stream);
  std::vector<double> values(2 * n);
  double* x = values.data();
  double* y = values.data() + n;
  for (std::size_t t = 0; t < n; ++t) x[t] = rng.uniform();

  const double sigma = spec.noise_level * noise_scale(spec.kind);
  switch (spec.kind) {
    case PatternKind::kIndependence:
      for (std::size_t t = 0; t < n; ++t) y[t] = rng.uniform();
      break;
    case PatternKind::kCircle:
      for (std::size_t t = 0; t < n; ++t) {
        y[t] = pattern_value(spec.kind, x[t], (rng() >> 63) != 0 ? 1 : -1);
      }
      break;
    default:
      for (std::size_t t = 0; t < n; ++t) y[t] = pattern_value(spec.kind, x[t]);
      break;
  }
  if (sigma > 0.0) {
    for (std::size_t t = 0; t < n; ++t) {
      if (spec.kind == PatternKind::kCircle) x[t] += sigma * rng.normal();
      y[t] += sigma * rng.normal();
    }
  }
  return Panel(n, 2, std::move(values));
}

Panel generate_uniform_panel(std::size_t length, std::size_t dimension,
                             std::uint64_t seed, std::uint64_t stream) {
  Philox4x32 rng(seed, stream);
  std::vector<double> values(length * dimension);
  for (double& v : values) v = rng.uniform();
  return Panel(length, dimension, std::move(values));
}

Panel generate_gaussian_panel(std::size_t length, std::size_t dimension,
                              double rho, std::uint64_t seed,
                              std::uint64_t stream) {
  if (dimension < 2) throw InvalidArgument("Gaussian panel needs d >= 2");
  if (!(rho >= -1.0 && rho <= 1.0)) {
    throw InvalidArgument("correlation must lie in [-1, 1]");
  }
  if (dimension > 2 && rho < 0.0) {
    throw InvalidArgument("equicorrelated Gaussian with d > 2 needs rho >= 0");
  }
  Philox4x32 rng(seed, stream);
  std::vector<double> values(length * dimension);
  if (dimension == 2) {
    const double residual = std::sqrt(1.0 - rho * rho);
    for (std::size_t t = 0; t < length; ++t) {
      const double z1 = rng.normal();
      const double z2 = rng.normal();
      values[t] = z1;
      values[length + t] = rho * z1 + residual * z2;
    }
  } else {
    const double loading = std::sqrt(rho);
    const double residual = std::sqrt(1.0 - rho);
    for (std::size_t t = 0; t < length; ++t) {
      const double factor = rng.normal();
      for (std::size_t i = 0; i < dimension; ++i) {
        values[i * length + t] = loading * factor + residual * rng.normal();
      }
    }
  }
  return Panel(length, dimension, std::move(values));
}

std::string_view to_string(IntraKind kind) noexcept {
  return kIntraNames[static_cast<std::size_t>(kind)].second;
}

IntraKind parse_intra_kind(std::string_view name) {
  for (const auto& [kind, label] : kIntraNames) {
    if (label == name) return kind;
  }
  throw InvalidArgument("unknown intra-dependence kind '" + std::string(name) + "'");
}

std::vector<LabeledPanel> generate_mts_dataset(std::size_t per_class,
                                               std::span<const ClassSpec> classes,
                                               std::size_t length,
                                               std::uint64_t seed) {
  if (classes.size() < 2) throw InvalidArgument("dataset needs at least 2 classes");
  if (per_class == 0) throw InvalidArgument("dataset needs at least 1 panel per class");
  for (const auto& spec : classes) {
    if (spec.dimension < 2) throw InvalidArgument("class dimension must be >= 2");
    if (!std::isfinite(spec.parameter)) {
      throw InvalidArgument("class parameter must be finite");
    }
    if ((spec.kind == IntraKind::kComonotone ||
         spec.kind == IntraKind::kCountermonotone) &&
        spec.parameter < 0.0) {
      throw InvalidArgument("monotone class noise must be nonnegative");
    }
  }

  std::vector<LabeledPanel> dataset;
  dataset.reserve(per_class * classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const ClassSpec& spec = classes[c];
    for (std::size_t member = 0; member < per_class; ++member) {
      const std::uint64_t stream =
          stream_id(StreamPurpose::kDataset, static_cast<std::uint32_t>(c), 0,
                    static_cast<std::uint32_t>(member));
      std::string id = std::to_string(c) + "-" + std::to_string(member);
      if (spec.kind == IntraKind::kGaussian) {
        Panel p = generate_gaussian_panel(length, spec.dimension, spec.parameter,
                                          seed, stream);
        dataset.push_back({Panel(p.length(), p.dimension(),
                                 {p.values().begin(), p.values().end()},
                                 std::move(id)),
                           c});
        continue;
      }
      Philox4x32 rng(seed, stream);
      std::vector<double> values(length * spec.dimension);
      for (std::size_t t = 0; t < length; ++t) {
        const double factor = rng.normal();
        for (std::size_t i = 0; i < spec.dimension; ++i) {
          double& v = values[i * length + t];
          switch (spec.kind) {
            case IntraKind::kComonotone:
              v = factor + spec.parameter * rng.normal();
              break;
            case IntraKind::kCountermonotone:
              v = (i % 2 == 0 ? factor : -factor) + spec.parameter * rng.normal();
              break;
            default:
              v = rng.normal();
              break;
          }
        }
      }
      dataset.push_back(
          {Panel(length, spec.dimension, std::move(values), std::move(id)), c});
    }
  }
  return dataset;
}

}  // namespace copula_transport
