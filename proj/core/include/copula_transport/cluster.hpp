#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "copula_transport/dependence.hpp"

namespace copula_transport {

enum class Linkage : std::uint8_t { kSingle, kComplete, kAverage };

std::string_view to_string(Linkage linkage) noexcept;
Linkage parse_linkage(std::string_view name);

// Node ids follow the usual convention: leaves are 0..N-1 and merge i
// creates node N+i. Each merge lists the smaller node id first.
struct Merge {
  std::size_t left;
  std::size_t right;
  double height;
  std::size_t size;
};

struct Dendrogram {
  std::size_t leaves = 0;
  std::vector<Merge> merges;
};

// Lance-Williams agglomeration. Among equal closest pairs the one with the
// smallest (i, j) leaf-index pair merges first; a cluster is identified by
// its smallest leaf index.
Dendrogram agglomerate(const DistanceMatrix& dm, Linkage linkage = Linkage::kAverage);

// Undo the top k-1 merges. Clusters are numbered 0..k-1 in order of their
// smallest leaf.
std::vector<std::size_t> cut(const Dendrogram& dendrogram, std::size_t k);

double adjusted_rand_index(std::span<const std::size_t> a,
                           std::span<const std::size_t> b);

}  // namespace copula_transport
