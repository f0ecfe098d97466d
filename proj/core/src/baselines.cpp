#include "copula_transport/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "copula_transport/copula.hpp"
#include "copula_transport/error.hpp"
#include "copula_transport/rng.hpp"

namespace copula_transport {
namespace {

void require_paired(std::size_t nx, std::size_t ny) {
  if (nx != ny) {
    throw DataError("samples differ in length: " + std::to_string(nx) + " vs " +
                    std::to_string(ny));
  }
  if (nx < 2) throw DataError("correlation needs at least 2 observations");
}

// Row-major n x n Euclidean distances, double-centered in place.
std::vector<double> centered_distances(const Panel& p) {
  const std::size_t n = p.length();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      double sq = 0.0;
      for (std::size_t i = 0; i < p.dimension(); ++i) {
        const double diff = p.at(k, i) - p.at(l, i);
        sq += diff * diff;
      }
      a[k * n + l] = a[l * n + k] = std::sqrt(sq);
    }
  }
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t l = 0; l < n; ++l) s += a[k * n + l];
    row_mean[k] = s / static_cast<double>(n);
    grand += s;
  }
  grand /= static_cast<double>(n * n);
  // Symmetric, so column means equal row means.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      a[k * n + l] += grand - row_mean[k] - row_mean[l];
    }
  }
  return a;
}

double mean_product(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s / static_cast<double>(a.size());
}

// sin of random projections of the copula-transformed sample (plus a
// constant coordinate), then centered.
Eigen::MatrixXd random_features(const Panel& p, const RdcOptions& options,
                                Philox4x32& rng) {
  const std::size_t n = p.length();
  const std::size_t d = p.dimension();
  const CopulaSample u = empirical_copula_transform(p);
  Eigen::MatrixXd augmented(n, d + 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t t = 0; t < n; ++t) augmented(t, i) = u.at(t, i);
  }
  augmented.col(d).setOnes();
  Eigen::MatrixXd weights(d + 1, options.projections);
  // Column-major fill keeps the draw order fixed.
  for (Eigen::Index c = 0; c < weights.cols(); ++c) {
    for (Eigen::Index r = 0; r < weights.rows(); ++r) weights(r, c) = rng.normal();
  }
  const double factor = options.scale / static_cast<double>(d + 1);
  Eigen::MatrixXd features = (factor * (augmented * weights)).array().sin().matrix();
  features.rowwise() -= features.colwise().mean();
  return features;
}

// Orthonormal basis of the column space, rank decided by column-pivoted QR.
Eigen::MatrixXd column_basis(const Eigen::MatrixXd& m) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-7);
  const Eigen::Index rank = qr.rank();
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(m.rows(), rank);
  return q;
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  require_paired(x.size(), y.size());
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    mx += x[t];
    my += y[t];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t t = 0; t < x.size(); ++t) {
    const double dx = x[t] - mx;
    const double dy = y[t] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0.0) || !(syy > 0.0)) throw DataError("correlation of a constant sample");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double spearman(std::span<const double> x, std::span<const double> y) {
  require_paired(x.size(), y.size());
  const std::vector<double> rx = average_ranks(x);
  const std::vector<double> ry = average_ranks(y);
  return pearson(rx, ry);
}

double dcor(const Panel& x, const Panel& y) {
  require_paired(x.length(), y.length());
  const std::vector<double> a = centered_distances(x);
  const std::vector<double> b = centered_distances(y);
  const double var_x = mean_product(a, a);
  const double var_y = mean_product(b, b);
  if (!(var_x > 0.0) || !(var_y > 0.0)) {
    throw DataError("distance correlation of a constant sample");
  }
  const double cov = std::max(0.0, mean_product(a, b));
  return std::min(1.0, std::sqrt(cov / std::sqrt(var_x * var_y)));
}

double rdc(const Panel& x, const Panel& y, const RdcOptions& options, std::uint64_t seed) {
  require_paired(x.length(), y.length());
  if (options.projections == 0) throw InvalidArgument("RDC needs at least 1 projection");
  if (!(options.scale > 0.0)) throw InvalidArgument("RDC scale must be positive");
  if (x.length() <= options.projections) {
    throw InvalidArgument("RDC needs more observations (" + std::to_string(x.length()) +
                          ") than projections (" + std::to_string(options.projections) +
                          ")");
  }
  Philox4x32 rng(seed, stream_id(StreamPurpose::kEstimator, 0, 0, 0));
  const Eigen::MatrixXd fx = random_features(x, options, rng);
  const Eigen::MatrixXd fy = random_features(y, options, rng);
  const Eigen::MatrixXd qx = column_basis(fx);
  const Eigen::MatrixXd qy = column_basis(fy);
  if (qx.cols() == 0 || qy.cols() == 0) return 0.0;
  const Eigen::MatrixXd cross = qx.transpose() * qy;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross);
  return std::clamp(svd.singularValues()(0), 0.0, 1.0);
}

std::string_view to_string(EstimatorKind kind) noexcept {
  switch (kind) {
    case EstimatorKind::kPearson:
      return "pearson";
    case EstimatorKind::kSpearman:
      return "spearman";
    case EstimatorKind::kDcor:
      return "dcor";
    case EstimatorKind::kRdc:
      return "rdc";
    case EstimatorKind::kTdc:
      return "tdc";
  }
  return "unknown";
}

EstimatorId parse_estimator(std::string_view name) {
  for (auto kind : {EstimatorKind::kPearson, EstimatorKind::kSpearman, EstimatorKind::kDcor,
                    EstimatorKind::kRdc, EstimatorKind::kTdc}) {
    if (to_string(kind) == name) {
      EstimatorId id;
      id.kind = kind;
      return id;
    }
  }
  throw InvalidArgument("unknown estimator '" + std::string(name) + "'");
}

double dependence_statistic(const EstimatorId& estimator, const Panel& x, const Panel& y,
                            const TargetSet* targets, std::uint64_t seed) {
  switch (estimator.kind) {
    case EstimatorKind::kPearson:
    case EstimatorKind::kSpearman:
      if (x.dimension() != 1 || y.dimension() != 1) {
        throw InvalidArgument(std::string(to_string(estimator.kind)) +
                              " is defined for univariate x and y only");
      }
      return std::abs(estimator.kind == EstimatorKind::kPearson
                          ? pearson(x.column(0), y.column(0))
                          : spearman(x.column(0), y.column(0)));
    case EstimatorKind::kDcor:
      return dcor(x, y);
    case EstimatorKind::kRdc:
      return rdc(x, y, estimator.rdc, seed);
    case EstimatorKind::kTdc:
      if (targets == nullptr) throw InvalidArgument("TDC statistic needs a target set");
      return tdc(x, y, *targets, estimator.tdc_resolution, estimator.emd).value;
  }
  throw InvalidArgument("unknown estimator");
}

}  // namespace copula_transport
