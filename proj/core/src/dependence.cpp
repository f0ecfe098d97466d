#include "copula_transport/dependence.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <utility>

#include "copula_transport/copula.hpp"
#include "copula_transport/error.hpp"
#include "copula_transport/parallel.hpp"

namespace copula_transport {
namespace {

Signature binned_copula(const Panel& panel, std::size_t resolution) {
  return bin_copula(empirical_copula_transform(panel), resolution);
}

std::size_t dense_cells(std::size_t dimension, std::size_t resolution) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < dimension; ++i) {
    count *= resolution;
    if (count > kMaxDenseAtoms) return kMaxDenseAtoms + 1;
  }
  return count;
}

}  // namespace

double intra_distance(const Panel& x1, const Panel& x2, std::size_t resolution,
                      const EmdOptions& options) {
  if (x1.dimension() != x2.dimension()) {
    throw DataError("intra-dependence needs equal dimensions, got " +
                    std::to_string(x1.dimension()) + " and " +
                    std::to_string(x2.dimension()));
  }
  if (x1.dimension() < 2) {
    throw DataError("intra-dependence needs at least 2 coordinates");
  }
  return signature_distance(binned_copula(x1, resolution),
                            binned_copula(x2, resolution), options);
}

TargetSet::TargetSet(std::vector<NamedSignature> targets, Signature independence)
    : targets_(std::move(targets)), independence_(std::move(independence)) {
  if (targets_.empty()) throw InvalidArgument("target set needs at least one target");
  std::set<std::string> names;
  for (const auto& target : targets_) {
    if (!names.insert(target.name).second) {
      throw InvalidArgument("duplicate target name '" + target.name + "'");
    }
    if (target.signature.dimension() != independence_.dimension() ||
        target.signature.resolution() != independence_.resolution()) {
      throw InvalidArgument("target '" + target.name +
                            "' does not share the independence grid (d=" +
                            std::to_string(independence_.dimension()) + ", m=" +
                            std::to_string(independence_.resolution()) + ")");
    }
    if (target.signature == independence_ || emd(independence_, target.signature) <= 0.0) {
      throw InvalidArgument("target '" + target.name + "' coincides with independence");
    }
  }
}

Signature independence_copula(std::size_t dimension, std::size_t resolution,
                              std::uint64_t seed) {
  if (dense_cells(dimension, resolution) <= kMaxDenseAtoms) {
    return independence_signature(dimension, resolution);
  }
  return sampled_independence_signature(dimension, resolution,
                                        default_pattern_sample_size(resolution), seed);
}

TargetSet build_target_set(std::span<const TargetSpec> specs, std::size_t resolution,
                           std::uint64_t seed) {
  if (specs.empty()) throw InvalidArgument("target set needs at least one target");
  std::vector<NamedSignature> targets;
  targets.reserve(specs.size());
  std::size_t dimension = 0;
  for (const TargetSpec& spec : specs) {
    Signature signature = std::visit(
        [&](const auto& source) -> Signature {
          using T = std::decay_t<decltype(source)>;
          if constexpr (std::is_same_v<T, MonotoneTarget>) {
            return monotone_signature(resolution, source.orientation);
          } else if constexpr (std::is_same_v<T, PatternTarget>) {
            return signature_from_pattern(
                source.pattern, resolution,
                source.sample_size.value_or(default_pattern_sample_size(resolution)),
                source.seed.value_or(seed));
          } else {
            if (source.signature.resolution() != resolution) {
              throw InvalidArgument("explicit target '" + spec.name +
                                    "' has resolution " +
                                    std::to_string(source.signature.resolution()) +
                                    ", expected " + std::to_string(resolution));
            }
            return source.signature;
          }
        },
        spec.source);
    if (dimension == 0) dimension = signature.dimension();
    targets.push_back({spec.name, std::move(signature)});
  }
  return TargetSet(std::move(targets), independence_copula(dimension, resolution, seed));
}

std::vector<TargetSpec> monotone_target_specs() {
  return {{"comonotone", MonotoneTarget{{1, 1}}},
          {"countermonotone", MonotoneTarget{{1, -1}}}};
}

std::vector<TargetSpec> pattern_target_specs(PatternKind kind) {
  return {{std::string(to_string(kind)), PatternTarget{kind, std::nullopt, std::nullopt}}};
}

TdcResult tdc_from_signature(const Signature& copula, const TargetSet& targets,
                             const EmdOptions& options) {
  if (copula.dimension() != targets.dimension() ||
      copula.resolution() != targets.resolution()) {
    throw InvalidArgument("copula grid (d=" + std::to_string(copula.dimension()) +
                          ", m=" + std::to_string(copula.resolution()) +
                          ") does not match the target set (d=" +
                          std::to_string(targets.dimension()) + ", m=" +
                          std::to_string(targets.resolution()) + ")");
  }
  TdcResult result;
  result.independence_distance =
      signature_distance(targets.independence(), copula, options);
  double nearest = 0.0;
  for (std::size_t i = 0; i < targets.targets().size(); ++i) {
    const NamedSignature& target = targets.targets()[i];
    const double distance = signature_distance(copula, target.signature, options);
    result.target_distances.push_back(distance);
    if (i == 0 || distance < nearest) {
      nearest = distance;
      result.activated_target = target.name;
    }
  }
  const double denominator = result.independence_distance + nearest;
  result.value = denominator > 0.0 ? result.independence_distance / denominator : 0.0;
  return result;
}

TdcResult tdc(const Panel& x, const Panel& y, const TargetSet& targets,
              std::size_t resolution, const EmdOptions& options) {
  if (x.length() != y.length()) {
    throw DataError("TDC needs equal lengths, got " + std::to_string(x.length()) +
                    " and " + std::to_string(y.length()));
  }
  if (resolution != targets.resolution()) {
    throw InvalidArgument("resolution " + std::to_string(resolution) +
                          " differs from the target set resolution " +
                          std::to_string(targets.resolution()));
  }
  if (x.dimension() + y.dimension() != targets.dimension()) {
    throw DataError("stacked dimension " + std::to_string(x.dimension() + y.dimension()) +
                    " does not match the target set dimension " +
                    std::to_string(targets.dimension()));
  }
  return tdc_from_signature(binned_copula(hstack(x, y), resolution), targets, options);
}

DistanceMatrix::DistanceMatrix(std::size_t size, std::vector<double> entries,
                               std::vector<std::string> labels)
    : size_(size), entries_(std::move(entries)), labels_(std::move(labels)) {
  if (entries_.size() != size_ * size_) {
    throw DataError("distance matrix is not square");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < size_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != size_) throw DataError("distance matrix label count mismatch");
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      const double v = entries_[i * size_ + j];
      if (!std::isfinite(v) || v < 0.0) {
        throw DataError("distance matrix entry (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") is negative or non-finite");
      }
      if (i == j && v > 1e-12) throw DataError("distance matrix diagonal must be zero");
      if (std::abs(v - entries_[j * size_ + i]) > 1e-12) {
        throw DataError("distance matrix is not symmetric at (" + std::to_string(i) +
                        ", " + std::to_string(j) + ")");
      }
    }
  }
}

DistanceMatrix DistanceMatrix::scaled(double factor) const {
  if (!(factor > 0.0)) throw InvalidArgument("scale factor must be positive");
  std::vector<double> entries(entries_);
  for (double& v : entries) v *= factor;
  return DistanceMatrix(size_, std::move(entries), labels_);
}

DistanceMatrix distance_matrix(std::span<const Panel> panels, const MatrixMode& mode,
                               std::size_t resolution, const EmdOptions& options,
                               std::size_t jobs) {
  const std::size_t n = panels.size();
  if (n < 2) throw InvalidArgument("distance matrix needs at least 2 panels");
  for (const Panel& p : panels) {
    if (p.dimension() != panels.front().dimension()) {
      throw DataError("panels have heterogeneous dimensions");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<double> values(pairs.size());

  if (std::holds_alternative<IntraMode>(mode)) {
    if (panels.front().dimension() < 2) {
      throw DataError("intra-dependence needs at least 2 coordinates");
    }
    std::vector<Signature> signatures;
    signatures.reserve(n);
    for (const Panel& p : panels) signatures.push_back(binned_copula(p, resolution));
    parallel_for(pairs.size(), jobs, [&](std::size_t k) {
      values[k] = signature_distance(signatures[pairs[k].first],
                                     signatures[pairs[k].second], options);
    });
  } else {
    const TargetSet* targets = std::get<TdcMode>(mode).targets;
    if (targets == nullptr) throw InvalidArgument("TDC mode needs a target set");
    parallel_for(pairs.size(), jobs, [&](std::size_t k) {
      const TdcResult r = tdc(panels[pairs[k].first], panels[pairs[k].second],
                              *targets, resolution, options);
      values[k] = 1.0 - r.value;
    });
  }

  std::vector<double> entries(n * n, 0.0);
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    entries[pairs[k].first * n + pairs[k].second] = values[k];
    entries[pairs[k].second * n + pairs[k].first] = values[k];
  }
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(panels[i].series_id().empty() ? std::to_string(i)
                                                   : panels[i].series_id());
  }
  return DistanceMatrix(n, std::move(entries), std::move(labels));
}

}  // namespace copula_transport
