#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "copula_transport/rng.hpp"
#include "copula_transport/signature.hpp"

namespace test_support {

// `atoms` distinct cells (capped at the grid size) drawn uniformly from the d-dimensional grid, with
// random positive weights normalized to one.
inline copula_transport::Signature random_signature(copula_transport::Philox4x32& rng,
                                                    std::size_t dimension,
                                                    std::size_t resolution,
                                                    std::size_t atoms) {
  std::size_t grid = 1;
  for (std::size_t i = 0; i < dimension; ++i) grid *= resolution;
  atoms = std::min(atoms, grid);
  std::vector<std::size_t> flat(grid);
  std::iota(flat.begin(), flat.end(), std::size_t{0});
  for (std::size_t i = 0; i < atoms; ++i) {
    std::swap(flat[i], flat[i + rng.below(grid - i)]);
  }
  std::vector<std::uint32_t> cells;
  std::vector<double> weights;
  double total = 0.0;
  for (std::size_t a = 0; a < atoms; ++a) {
    std::size_t index = flat[a];
    for (std::size_t i = 0; i < dimension; ++i) {
      cells.push_back(static_cast<std::uint32_t>(index % resolution));
      index /= resolution;
    }
    weights.push_back(0.05 + rng.uniform());
    total += weights.back();
  }
  for (double& w : weights) w /= total;
  return {dimension, resolution, std::move(cells), std::move(weights)};
}

}  // namespace test_support
