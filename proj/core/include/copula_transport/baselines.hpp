#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "copula_transport/dependence.hpp"
#include "copula_transport/panel.hpp"

namespace copula_transport {

// Sample linear correlation. Rejects unequal lengths, n < 2, zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

// Pearson correlation of average ranks.
double spearman(std::span<const double> x, std::span<const double> y);

// Distance correlation (V-statistic): sqrt(dCov^2 / sqrt(dVar^2_x dVar^2_y))
// from double-centered Euclidean distance matrices. Rejects constant inputs.
double dcor(const Panel& x, const Panel& y);

struct RdcOptions {
  std::size_t projections = 20;
  double scale = 1.0 / 6.0;
};

// Randomized Dependence Coefficient: copula transform, `projections` random
// sinusoidal features of scale `scale`, largest canonical correlation.
// Requires T > projections.
double rdc(const Panel& x, const Panel& y, const RdcOptions& options,
           std::uint64_t seed);

enum class EstimatorKind : std::uint8_t { kPearson, kSpearman, kDcor, kRdc, kTdc };

struct EstimatorId {
  EstimatorKind kind = EstimatorKind::kTdc;
  RdcOptions rdc;
  std::size_t tdc_resolution = 16;
  EmdOptions emd;
};

std::string_view to_string(EstimatorKind kind) noexcept;
// Accepts pearson, spearman, dcor, rdc, tdc.
EstimatorId parse_estimator(std::string_view name);

// Dependence statistic used by the power harness: |pearson|, |spearman|,
// dcor, rdc, or the TDC value. `targets` is required for TDC; `seed` feeds RDC.
double dependence_statistic(const EstimatorId& estimator, const Panel& x,
                            const Panel& y, const TargetSet* targets,
                            std::uint64_t seed);

}  // namespace copula_transport
