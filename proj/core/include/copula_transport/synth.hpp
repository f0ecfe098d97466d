#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "copula_transport/panel.hpp"

namespace copula_transport {

// Functional relationships y = g(x), x ~ Uniform(0, 1), following the
// benchmark lineage of the RDC power study. `kIndependence` draws y
// independently of x.
enum class PatternKind : std::uint8_t {
  kLinear,
  kQuadratic,
  kCubic,
  kSineLow,
  kSineHigh,
  kFourthRoot,
  kCircle,
  kStep,
  kIndependence,
};

std::string_view to_string(PatternKind kind) noexcept;
// Throws InvalidArgument on an unknown name.
PatternKind parse_pattern(std::string_view name);

// The eight functional shapes (everything but kIndependence), in benchmark order.
std::span<const PatternKind> benchmark_patterns() noexcept;

// Noise multiplier per pattern so that equal noise levels are comparable
// across shapes of different y-range.
double noise_scale(PatternKind kind) noexcept;

// Noiseless value of the pattern at x. The circle takes an explicit branch
// sign (+1 upper half, -1 lower half); other patterns ignore it.
double pattern_value(PatternKind kind, double x, int branch = 1) noexcept;

struct PatternSpec {
  PatternKind kind = PatternKind::kLinear;
  double noise_level = 0.0;
  std::size_t sample_size = 500;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// T = sample_size, d = 2 panel (x, y). Draw order inside the stream: the n
// x-values, then (circle only) n branch signs, then the noise variates
// (two per row for the circle, one otherwise).
Panel generate_pattern(const PatternSpec& spec);

// `dimension` mutually independent Uniform(0, 1) columns.
Panel generate_uniform_panel(std::size_t length, std::size_t dimension,
                             std::uint64_t seed, std::uint64_t stream);

// Gaussian panel with unit variances and pairwise correlation `rho`.
// d = 2 accepts rho in [-1, 1]; d > 2 requires rho in [0, 1].
Panel generate_gaussian_panel(std::size_t length, std::size_t dimension,
                              double rho, std::uint64_t seed,
                              std::uint64_t stream);

enum class IntraKind : std::uint8_t {
  kComonotone,
  kCountermonotone,
  kGaussian,
  kIndependent,
};

std::string_view to_string(IntraKind kind) noexcept;
IntraKind parse_intra_kind(std::string_view name);

// One class of a labeled dataset. For co/countermonotone classes
// `parameter` is the noise standard deviation added to the driving factor;
// for Gaussian classes it is the pairwise correlation.
struct ClassSpec {
  std::size_t dimension = 2;
  IntraKind kind = IntraKind::kComonotone;
  double parameter = 0.0;
};

struct LabeledPanel {
  Panel panel;
  std::size_t label;
};

// `per_class` panels for each class, class-major order. Panel ids are
// "<class index>-<member index>".
std::vector<LabeledPanel> generate_mts_dataset(std::size_t per_class,
                                               std::span<const ClassSpec> classes,
                                               std::size_t length,
                                               std::uint64_t seed);

}  // namespace copula_transport
