#include "copula_transport/cluster.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "copula_transport/error.hpp"

namespace copula_transport {

std::string_view to_string(Linkage linkage) noexcept {
  switch (linkage) {
    case Linkage::kSingle:
      return "single";
    case Linkage::kComplete:
      return "complete";
    case Linkage::kAverage:
      return "average";
  }
  return "unknown";
}

Linkage parse_linkage(std::string_view name) {
  for (auto l : {Linkage::kSingle, Linkage::kComplete, Linkage::kAverage}) {
    if (to_string(l) == name) return l;
  }
  throw InvalidArgument("unknown linkage '" + std::string(name) + "'");
}

Dendrogram agglomerate(const DistanceMatrix& dm, Linkage linkage) {
  const std::size_t n = dm.size();
  if (n < 2) throw InvalidArgument("clustering needs at least 2 items");
  std::vector<double> d(dm.entries().begin(), dm.entries().end());
  std::vector<std::size_t> size(n, 1);
  std::vector<std::size_t> node(n);
  std::iota(node.begin(), node.end(), std::size_t{0});
  std::vector<char> active(n, 1);

  // Slot i always holds the cluster whose smallest leaf is i: merging slots
  // i < j keeps the result in slot i.
  Dendrogram dendrogram{n, {}};
  dendrogram.merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (active[j] && d[i * n + j] < best) {
          best = d[i * n + j];
          bi = i;
          bj = j;
        }
      }
    }
    const double ni = static_cast<double>(size[bi]);
    const double nj = static_cast<double>(size[bj]);
    for (std::size_t k = 0; k < n; ++k) {
      if (!active[k] || k == bi || k == bj) continue;
      const double dik = d[bi * n + k];
      const double djk = d[bj * n + k];
      double updated = 0.0;
      switch (linkage) {
        case Linkage::kSingle:
          updated = std::min(dik, djk);
          break;
        case Linkage::kComplete:
          updated = std::max(dik, djk);
          break;
        case Linkage::kAverage:
          updated = (ni * dik + nj * djk) / (ni + nj);
          break;
      }
      d[bi * n + k] = d[k * n + bi] = updated;
    }
    dendrogram.merges.push_back({std::min(node[bi], node[bj]), std::max(node[bi], node[bj]), best,
                                 size[bi] + size[bj]});
    size[bi] += size[bj];
    node[bi] = n + step;
    active[bj] = 0;
  }
  return dendrogram;
}

std::vector<std::size_t> cut(const Dendrogram& dendrogram, std::size_t k) {
  const std::size_t n = dendrogram.leaves;
  if (k < 1 || k > n) {
    throw InvalidArgument("cluster count " + std::to_string(k) + " outside [1, " +
                          std::to_string(n) + "]");
  }
  if (dendrogram.merges.size() + 1 != n) throw DataError("malformed dendrogram");
  // Union-find over node ids; internal node n+s adopts its children.
  std::vector<std::size_t> parent(2 * n - 1);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t u) {
    while (parent[u] != u) u = parent[u] = parent[parent[u]];
    return u;
  };
  for (std::size_t s = 0; s + k < n; ++s) {
    const Merge& m = dendrogram.merges[s];
    parent[find(m.left)] = n + s;
    parent[find(m.right)] = n + s;
  }
  std::vector<std::size_t> assignment(n);
  std::unordered_map<std::size_t, std::size_t> label_of_root;
  for (std::size_t leaf = 0; leaf < n; ++leaf) {
    const std::size_t root = find(leaf);
    auto [it, inserted] = label_of_root.try_emplace(root, label_of_root.size());
    assignment[leaf] = it->second;
  }
  return assignment;
}

double adjusted_rand_index(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  if (a.size() != b.size()) {
    throw DataError("partitions differ in length: " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  if (n < 2) return 1.0;
  auto choose2 = [](double x) { return x * (x - 1.0) / 2.0; };
  std::unordered_map<std::size_t, double> rows, cols;
  std::unordered_map<std::size_t, std::unordered_map<std::size_t, double>> table;
  for (std::size_t t = 0; t < n; ++t) {
    rows[a[t]] += 1.0;
    cols[b[t]] += 1.0;
    table[a[t]][b[t]] += 1.0;
  }
  double index = 0.0;
  for (const auto& [r, row] : table) {
    for (const auto& [c, count] : row) index += choose2(count);
  }
  double sum_rows = 0.0, sum_cols = 0.0;
  for (const auto& [r, count] : rows) sum_rows += choose2(count);
  for (const auto& [c, count] : cols) sum_cols += choose2(count);
  const double expected = sum_rows * sum_cols / choose2(static_cast<double>(n));
  const double maximum = 0.5 * (sum_rows + sum_cols);
  if (maximum == expected) return 1.0;
  return (index - expected) / (maximum - expected);
}

}  // namespace copula_transport
