#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "copula_transport/panel.hpp"
#include "copula_transport/signature.hpp"
#include "copula_transport/synth.hpp"
#include "copula_transport/transport.hpp"

namespace copula_transport {

// EMD between the binned empirical copulas of two panels of equal
// dimension d >= 2.
double intra_distance(const Panel& x1, const Panel& x2, std::size_t resolution,
                      const EmdOptions& options = {});

struct NamedSignature {
  std::string name;
  Signature signature;
};

// Target dependence copulas plus the independence copula, all on one grid.
class TargetSet {
 public:
  // Rejects an empty target list, mixed dimensions or resolutions, duplicate
  // names, and any target at EMD 0 from `independence`.
  TargetSet(std::vector<NamedSignature> targets, Signature independence);

  std::size_t dimension() const noexcept { return independence_.dimension(); }
  std::size_t resolution() const noexcept { return independence_.resolution(); }
  std::span<const NamedSignature> targets() const noexcept { return targets_; }
  const Signature& independence() const noexcept { return independence_; }

 private:
  std::vector<NamedSignature> targets_;
  Signature independence_;
};

// Dense independence copula when m^d fits the budget, otherwise a sampled one
// (default_pattern_sample_size(m) points drawn with `seed`).
Signature independence_copula(std::size_t dimension, std::size_t resolution,
                              std::uint64_t seed);

// How a target is built; the serialized form of a TargetSet.
struct MonotoneTarget {
  std::vector<int> orientation;
};
struct PatternTarget {
  PatternKind pattern = PatternKind::kLinear;
  std::optional<std::size_t> sample_size;  // default 100 m^2
  std::optional<std::uint64_t> seed;       // default: the set-level seed
};
struct ExplicitTarget {
  Signature signature;
};

struct TargetSpec {
  std::string name;
  std::variant<MonotoneTarget, PatternTarget, ExplicitTarget> source;
};

TargetSet build_target_set(std::span<const TargetSpec> specs,
                           std::size_t resolution, std::uint64_t seed);

// {comonotone, countermonotone} for a pair of univariate series.
std::vector<TargetSpec> monotone_target_specs();

// Single target named after the pattern, built from its noiseless sample.
std::vector<TargetSpec> pattern_target_specs(PatternKind kind);

struct TdcResult {
  double value = 0.0;
  std::string activated_target;
  double independence_distance = 0.0;    // EMD(C_ind, C~)
  std::vector<double> target_distances;  // EMD(C~, C_i), TargetSet order
};

// Target Dependencies Coefficient of x against y:
//   EMD(C_ind, C~) / (EMD(C_ind, C~) + min_i EMD(C~, C_i))
// where C~ is the binned copula of the stacked observations (x, y). Ties for
// the activated target resolve to the earliest one.
TdcResult tdc(const Panel& x, const Panel& y, const TargetSet& targets,
              std::size_t resolution, const EmdOptions& options = {});

// Same quantity from an already binned copula.
TdcResult tdc_from_signature(const Signature& copula, const TargetSet& targets,
                             const EmdOptions& options = {});

// N x N symmetric matrix, row-major, zero diagonal.
class DistanceMatrix {
 public:
  // Validates: square, finite, nonnegative, zero diagonal, symmetric within
  // 1e-12. Labels default to "0".."N-1" when empty.
  DistanceMatrix(std::size_t size, std::vector<double> entries,
                 std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * size_ + j];
  }
  std::span<const double> entries() const noexcept { return entries_; }
  std::span<const std::string> labels() const noexcept { return labels_; }

  DistanceMatrix scaled(double factor) const;

 private:
  std::size_t size_;
  std::vector<double> entries_;
  std::vector<std::string> labels_;
};

struct IntraMode {};
struct TdcMode {
  const TargetSet* targets;
};
using MatrixMode = std::variant<IntraMode, TdcMode>;

// Entry (i, j) is D_intra(p_i, p_j) or 1 - TDC(p_i, p_j). Each unordered
// pair is computed once on its own task; `jobs` only changes wall time.
DistanceMatrix distance_matrix(std::span<const Panel> panels,
                               const MatrixMode& mode, std::size_t resolution,
                               const EmdOptions& options = {},
                               std::size_t jobs = 1);

}  // namespace copula_transport
