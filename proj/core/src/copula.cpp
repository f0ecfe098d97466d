#include "copula_transport/copula.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "copula_transport/error.hpp"
#include "copula_transport/rng.hpp"

namespace copula_transport {
namespace {

// m^d, or kMaxDenseAtoms + 1 once it exceeds the budget.
std::size_t dense_atom_count(std::size_t dimension, std::size_t resolution) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < dimension; ++i) {
    count *= resolution;
    if (count > kMaxDenseAtoms) return kMaxDenseAtoms + 1;
  }
  return count;
}

void require_resolution(std::size_t resolution) {
  if (resolution < 2) {
    throw InvalidArgument("grid resolution must be at least 2, got " +
                          std::to_string(resolution));
  }
}

}  // namespace

CopulaSample::CopulaSample(std::size_t length, std::size_t dimension,
                           std::vector<double> column_major)
    : length_(length), dimension_(dimension), values_(std::move(column_major)) {
  if (length_ == 0 || dimension_ == 0 || values_.size() != length_ * dimension_) {
    throw DataError("copula sample shape does not match its storage");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double v = values_[k];
    if (!(v > 0.0 && v <= 1.0)) {
      throw DataError("copula value " + std::to_string(v) + " at row " +
                      std::to_string(k % length_ + 1) + ", column " +
                      std::to_string(k / length_ + 1) + " is outside (0, 1]");
    }
  }
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo;
    while (hi + 1 < n && values[order[hi + 1]] == values[order[lo]]) ++hi;
    // 1-based ranks lo+1 .. hi+1 share their mean.
    const double rank = static_cast<double>(lo + hi + 2) / 2.0;
    for (std::size_t k = lo; k <= hi; ++k) ranks[order[k]] = rank;
    lo = hi + 1;
  }
  return ranks;
}

CopulaSample empirical_copula_transform(const Panel& panel) {
  const std::size_t length = panel.length();
  const double scale = static_cast<double>(length);
  std::vector<double> values;
  values.reserve(length * panel.dimension());
  for (std::size_t i = 0; i < panel.dimension(); ++i) {
    for (double rank : average_ranks(panel.column(i))) values.push_back(rank / scale);
  }
  return CopulaSample(length, panel.dimension(), std::move(values));
}

std::size_t default_resolution(std::size_t dimension) noexcept {
  if (dimension <= 2) return 16;
  if (dimension == 3) return 8;
  if (dimension == 4) return 4;
  return 2;
}

std::uint32_t cell_index(double v, std::size_t resolution) noexcept {
  const double scaled = v * static_cast<double>(resolution);
  const double cell = std::ceil(scaled - 1e-9) - 1.0;
  if (cell <= 0.0) return 0;
  const auto last = static_cast<double>(resolution - 1);
  return static_cast<std::uint32_t>(std::min(cell, last));
}

Signature bin_copula(const CopulaSample& sample, std::size_t resolution) {
  require_resolution(resolution);
  const std::size_t n = sample.length();
  const std::size_t d = sample.dimension();
  std::vector<std::uint32_t> point_cells(n * d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto column = sample.column(i);
    for (std::size_t t = 0; t < n; ++t) {
      point_cells[t * d + i] = cell_index(column[t], resolution);
    }
  }
  auto cell_of = [&](std::size_t t) {
    return std::span<const std::uint32_t>(point_cells.data() + t * d, d);
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::ranges::lexicographical_compare(cell_of(a), cell_of(b));
  });

  std::vector<std::uint32_t> cells;
  std::vector<double> weights;
  const double total = static_cast<double>(n);
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo + 1;
    while (hi < n && std::ranges::equal(cell_of(order[hi]), cell_of(order[lo]))) ++hi;
    const auto c = cell_of(order[lo]);
    cells.insert(cells.end(), c.begin(), c.end());
    weights.push_back(static_cast<double>(hi - lo) / total);
    lo = hi;
  }
  return Signature(d, resolution, std::move(cells), std::move(weights));
}

Signature independence_signature(std::size_t dimension, std::size_t resolution) {
  require_resolution(resolution);
  if (dimension == 0) throw InvalidArgument("dimension must be positive");
  const std::size_t count = dense_atom_count(dimension, resolution);
  if (count > kMaxDenseAtoms) {
    throw InvalidArgument(
        "dense independence signature would exceed " +
        std::to_string(kMaxDenseAtoms) + " atoms; lower the grid resolution or "
        "use a sampled independence copula");
  }
  std::vector<std::uint32_t> cells(count * dimension);
  // Odometer over the grid, last axis fastest, so atoms come out sorted.
  std::vector<std::uint32_t> index(dimension, 0);
  for (std::size_t a = 0; a < count; ++a) {
    std::copy(index.begin(), index.end(), cells.begin() + a * dimension);
    for (std::size_t axis = dimension; axis-- > 0;) {
      if (++index[axis] < resolution) break;
      index[axis] = 0;
    }
  }
  std::vector<double> weights(count, 1.0 / static_cast<double>(count));
  return Signature(dimension, resolution, std::move(cells), std::move(weights));
}

Signature monotone_signature(std::size_t resolution, std::span<const int> orientation) {
  require_resolution(resolution);
  if (orientation.empty()) throw InvalidArgument("orientation must not be empty");
  for (int o : orientation) {
    if (o != 1 && o != -1) throw InvalidArgument("orientation entries must be +1 or -1");
  }
  const std::size_t d = orientation.size();
  std::vector<std::uint32_t> cells(resolution * d);
  for (std::size_t k = 0; k < resolution; ++k) {
    for (std::size_t i = 0; i < d; ++i) {
      cells[k * d + i] =
          static_cast<std::uint32_t>(orientation[i] > 0 ? k : resolution - 1 - k);
    }
  }
  std::vector<double> weights(resolution, 1.0 / static_cast<double>(resolution));
  return Signature(d, resolution, std::move(cells), std::move(weights));
}

std::size_t default_pattern_sample_size(std::size_t resolution) noexcept {
  return 100 * resolution * resolution;
}

Signature signature_from_pattern(PatternKind kind, std::size_t resolution,
                                 std::size_t sample_size, std::uint64_t seed) {
  require_resolution(resolution);
  if (sample_size < 10 * resolution * resolution) {
    throw InvalidArgument("pattern target needs at least 10 m^2 = " +
                          std::to_string(10 * resolution * resolution) + " points");
  }
  PatternSpec spec;
  spec.kind = kind;
  spec.noise_level = 0.0;
  spec.sample_size = sample_size;
  spec.seed = seed;
  spec.stream = stream_id(StreamPurpose::kTarget, static_cast<std::uint32_t>(kind), 0, 0);
  return bin_copula(empirical_copula_transform(generate_pattern(spec)), resolution);
}

Signature sampled_independence_signature(std::size_t dimension,
                                         std::size_t resolution,
                                         std::size_t sample_size,
                                         std::uint64_t seed) {
  require_resolution(resolution);
  if (sample_size < 2) throw InvalidArgument("sample size must be at least 2");
  const Panel uniform = generate_uniform_panel(
      sample_size, dimension, seed,
      stream_id(StreamPurpose::kIndependence, 0, static_cast<std::uint32_t>(dimension), 0));
  return bin_copula(empirical_copula_transform(uniform), resolution);
}

}  // namespace copula_transport
