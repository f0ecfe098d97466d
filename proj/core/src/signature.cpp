#include "copula_transport/signature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "copula_transport/error.hpp"

namespace copula_transport {

Signature::Signature(std::size_t dimension, std::size_t resolution,
                     std::vector<std::uint32_t> cells, std::vector<double> weights)
    : dimension_(dimension),
      resolution_(resolution),
      cells_(std::move(cells)),
      weights_(std::move(weights)) {
  if (dimension_ == 0) throw DataError("signature dimension must be positive");
  if (resolution_ == 0) throw DataError("signature resolution must be positive");
  if (weights_.empty()) throw DataError("signature has no atoms");
  if (cells_.size() != weights_.size() * dimension_) {
    throw DataError("signature cell list does not match atom count");
  }
  for (std::uint32_t c : cells_) {
    if (c >= resolution_) {
      throw DataError("signature cell index " + std::to_string(c) +
                      " outside grid of resolution " + std::to_string(resolution_));
    }
  }
  for (std::size_t a = 0; a < weights_.size(); ++a) {
    if (!std::isfinite(weights_[a]) || weights_[a] <= 0.0) {
      throw DataError("signature atom " + std::to_string(a) +
                      " has non-positive weight");
    }
  }
  const double mass = total_mass();
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw DataError("signature weights sum to " + std::to_string(mass) +
                    ", expected 1");
  }
  std::vector<std::size_t> order(weights_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto cell_of = [this](std::size_t a) { return cell(a); };
  std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return std::ranges::lexicographical_compare(cell_of(l), cell_of(r));
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (std::ranges::equal(cell_of(order[i - 1]), cell_of(order[i]))) {
      throw DataError("signature has duplicate atom positions");
    }
  }
}

Signature Signature::from_positions(std::size_t dimension, std::size_t resolution,
                                    std::span<const double> positions,
                                    std::vector<double> weights) {
  if (dimension == 0 || positions.size() != weights.size() * dimension) {
    throw DataError("signature positions do not match atom count");
  }
  std::vector<std::uint32_t> cells(positions.size());
  const double m = static_cast<double>(resolution);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const double p = positions[i];
    const double k = std::round(p * m - 0.5);
    if (!std::isfinite(p) || k < 0.0 || k >= m ||
        std::abs(p - (k + 0.5) / m) > 1e-9) {
      throw DataError("atom coordinate " + std::to_string(p) +
                      " is not a cell center of resolution " +
                      std::to_string(resolution));
    }
    cells[i] = static_cast<std::uint32_t>(k);
  }
  return Signature(dimension, resolution, std::move(cells), std::move(weights));
}

std::vector<double> Signature::position(std::size_t atom) const {
  std::vector<double> p(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) p[i] = coordinate(atom, i);
  return p;
}

double Signature::total_mass() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

}  // namespace copula_transport
