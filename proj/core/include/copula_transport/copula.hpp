#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "copula_transport/panel.hpp"
#include "copula_transport/signature.hpp"
#include "copula_transport/synth.hpp"

namespace copula_transport {

// Normalized ranks of a panel: T points in (0, 1]^d.
class CopulaSample {
 public:
  // Values must lie in (0, 1].
  CopulaSample(std::size_t length, std::size_t dimension,
               std::vector<double> column_major);

  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return dimension_; }
  double at(std::size_t t, std::size_t i) const {
    return values_[i * length_ + t];
  }
  std::span<const double> column(std::size_t i) const {
    return {values_.data() + i * length_, length_};
  }
  std::span<const double> values() const noexcept { return values_; }

  bool operator==(const CopulaSample&) const = default;

 private:
  std::size_t length_;
  std::size_t dimension_;
  std::vector<double> values_;
};

// Average (fractional) ranks of `values`, 1-based: tied entries all receive
// the mean of the ranks they span.
std::vector<double> average_ranks(std::span<const double> values);

// Entry (t, i) = rank of x(t, i) within column i, divided by T.
CopulaSample empirical_copula_transform(const Panel& panel);

// Bins per axis used when none is configured: 16 (d <= 2), 8 (d = 3),
// 4 (d = 4), 2 beyond.
std::size_t default_resolution(std::size_t dimension) noexcept;

// Index of the grid cell holding coordinate v in (0, 1]. Cells are
// right-closed, (k/m, (k+1)/m], so 1.0 falls in the last cell and a rank
// r/T with m | T lands exactly on its cell. Values within 1e-9 of an upper
// edge are snapped onto it.
std::uint32_t cell_index(double v, std::size_t resolution) noexcept;

// Sparse histogram: one atom per occupied cell with weight count / T.
// Atoms are emitted in lexicographic cell order.
Signature bin_copula(const CopulaSample& sample, std::size_t resolution);

// Uniform weight m^-d on every cell. Rejected above kMaxDenseAtoms.
Signature independence_signature(std::size_t dimension, std::size_t resolution);

// m atoms of weight 1/m along the diagonal; axis i uses cell k when
// orientation[i] = +1 and m-1-k when it is -1.
Signature monotone_signature(std::size_t resolution,
                             std::span<const int> orientation);

// 100 * m^2.
std::size_t default_pattern_sample_size(std::size_t resolution) noexcept;

// Target copula of a noiseless 2-d pattern: M points, rank transform, bin.
// Requires M >= 10 m^2.
Signature signature_from_pattern(PatternKind kind, std::size_t resolution,
                                 std::size_t sample_size, std::uint64_t seed);

// Monte Carlo stand-in for the independence copula when m^d exceeds the
// dense budget: binned ranks of M independent uniform d-vectors.
Signature sampled_independence_signature(std::size_t dimension,
                                         std::size_t resolution,
                                         std::size_t sample_size,
                                         std::uint64_t seed);

}  // namespace copula_transport
