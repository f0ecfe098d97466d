#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace copula_transport {

// Dense constructions above this many atoms are rejected: the ground-cost
// matrix of an EMD between two such signatures grows quadratically.
inline constexpr std::size_t kMaxDenseAtoms = 65536;

// Tolerance on the total mass of a signature.
inline constexpr double kMassTolerance = 1e-12;

// Sparse histogram on the regular grid with `resolution` bins per axis.
// Atoms sit at cell centers ((k + 0.5) / resolution per coordinate), carry
// strictly positive weight, and the weights sum to one.
//
// Atoms are stored by integer cell index, which keeps equality exact and
// makes positions reproducible bit for bit.
class Signature {
 public:
  // `cells` is atom-major: atom a occupies cells[a*dimension .. (a+1)*dimension).
  Signature(std::size_t dimension, std::size_t resolution,
            std::vector<std::uint32_t> cells, std::vector<double> weights);

  // Builds from explicit coordinates; each must be a cell center within 1e-9.
  static Signature from_positions(std::size_t dimension, std::size_t resolution,
                                  std::span<const double> positions,
                                  std::vector<double> weights);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t resolution() const noexcept { return resolution_; }
  std::size_t size() const noexcept { return weights_.size(); }

  std::span<const std::uint32_t> cell(std::size_t atom) const {
    return {cells_.data() + atom * dimension_, dimension_};
  }
  std::span<const std::uint32_t> cells() const noexcept { return cells_; }
  double coordinate(std::size_t atom, std::size_t axis) const {
    return (static_cast<double>(cells_[atom * dimension_ + axis]) + 0.5) /
           static_cast<double>(resolution_);
  }
  std::vector<double> position(std::size_t atom) const;
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t atom) const { return weights_[atom]; }
  double total_mass() const noexcept;

  bool operator==(const Signature&) const = default;

 private:
  std::size_t dimension_;
  std::size_t resolution_;
  std::vector<std::uint32_t> cells_;
  std::vector<double> weights_;
};

}  // namespace copula_transport
