#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "copula_transport/cluster.hpp"
#include "copula_transport/error.hpp"
#include "copula_transport/rng.hpp"

using namespace copula_transport;

namespace {

// Pairs counted one by one; reference for the contingency-table formula.
double ari_by_pairs(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const std::size_t n = a.size();
  double both = 0, only_a = 0, only_b = 0, pairs = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool sa = a[i] == a[j];
      const bool sb = b[i] == b[j];
      both += sa && sb;
      only_a += sa;
      only_b += sb;
      pairs += 1;
    }
  }
  const double expected = only_a * only_b / pairs;
  const double maximum = 0.5 * (only_a + only_b);
  if (maximum == expected) return 1.0;
  return (both - expected) / (maximum - expected);
}

// Two blocks of sizes p and q: within 1-2, across 10-11.
DistanceMatrix block_matrix(std::size_t p, std::size_t q, std::uint64_t seed) {
  const std::size_t n = p + q;
  Philox4x32 rng(seed, 0);
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = (i < p) == (j < p);
      d[i * n + j] = d[j * n + i] = (same ? 1.0 : 10.0) + rng.uniform();
    }
  }
  return {n, d};
}

bool same_partition(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return adjusted_rand_index(a, b) == 1.0;
}

}  // namespace

TEST(Agglomerate, TwoItems) {
  const Dendrogram d = agglomerate(DistanceMatrix(2, {0, 3.5, 3.5, 0}));
  ASSERT_EQ(d.merges.size(), 1u);
  EXPECT_EQ(d.merges[0].left, 0u);
  EXPECT_EQ(d.merges[0].right, 1u);
  EXPECT_EQ(d.merges[0].height, 3.5);
  EXPECT_EQ(d.merges[0].size, 2u);
}

TEST(Agglomerate, LinkageHeightsByHand) {
  // Points on a line at 0, 1, 3.
  const DistanceMatrix dm(3, {0, 1, 3, 1, 0, 2, 3, 2, 0});
  EXPECT_EQ(agglomerate(dm, Linkage::kSingle).merges[1].height, 2.0);
  EXPECT_EQ(agglomerate(dm, Linkage::kComplete).merges[1].height, 3.0);
  EXPECT_EQ(agglomerate(dm, Linkage::kAverage).merges[1].height, 2.5);
  const Dendrogram d = agglomerate(dm);
  EXPECT_EQ(d.merges[1].left, 2u);
  EXPECT_EQ(d.merges[1].right, 3u);
  EXPECT_EQ(d.merges[1].size, 3u);
}

TEST(Agglomerate, TiesBreakOnSmallestPair) {
  const DistanceMatrix dm(4, {0, 1, 5, 5, 1, 0, 5, 5, 5, 5, 0, 1, 5, 5, 1, 0});
  const Dendrogram d = agglomerate(dm);
  EXPECT_EQ(d.merges[0].left, 0u);
  EXPECT_EQ(d.merges[0].right, 1u);
  EXPECT_EQ(d.merges[1].left, 2u);
  EXPECT_EQ(d.merges[1].right, 3u);
}

TEST(Agglomerate, BlocksRecoveredByEveryLinkage) {
  const DistanceMatrix dm = block_matrix(4, 6, 1);
  const std::vector<std::size_t> truth{0, 0, 0, 0, 1, 1, 1, 1, 1, 1};
  for (auto linkage : {Linkage::kSingle, Linkage::kComplete, Linkage::kAverage}) {
    const Dendrogram d = agglomerate(dm, linkage);
    EXPECT_EQ(cut(d, 2), truth) << to_string(linkage);
    for (std::size_t s = 1; s < d.merges.size(); ++s) {
      EXPECT_GE(d.merges[s].height, d.merges[s - 1].height);
    }
    EXPECT_EQ(d.merges.back().size, 10u);
  }
}

TEST(Agglomerate, PermutationEquivariant) {
  const DistanceMatrix dm = block_matrix(5, 5, 2);
  const std::size_t n = dm.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Philox4x32 rng(5, 0);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<double> permuted(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) permuted[i * n + j] = dm(perm[i], perm[j]);
  }
  for (std::size_t k = 1; k <= n; ++k) {
    const auto base = cut(agglomerate(dm), k);
    const auto moved = cut(agglomerate(DistanceMatrix(n, permuted)), k);
    std::vector<std::size_t> pulled(n);
    for (std::size_t i = 0; i < n; ++i) pulled[i] = base[perm[i]];
    EXPECT_TRUE(same_partition(moved, pulled)) << k;
  }
}

TEST(Agglomerate, ScaleInvariantPartitions) {
  const DistanceMatrix dm = block_matrix(3, 7, 3);
  for (auto linkage : {Linkage::kSingle, Linkage::kComplete, Linkage::kAverage}) {
    for (std::size_t k = 1; k <= dm.size(); ++k) {
      EXPECT_EQ(cut(agglomerate(dm, linkage), k), cut(agglomerate(dm.scaled(7.5), linkage), k));
    }
  }
}

TEST(Cut, ExtremesAndRange) {
  const Dendrogram d = agglomerate(block_matrix(3, 3, 4));
  EXPECT_EQ(cut(d, 6), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(cut(d, 1), (std::vector<std::size_t>(6, 0)));
  EXPECT_THROW(cut(d, 0), InvalidArgument);
  EXPECT_THROW(cut(d, 7), InvalidArgument);
}

TEST(Agglomerate, NeedsTwoItems) {
  EXPECT_THROW(agglomerate(DistanceMatrix(1, {0.0})), InvalidArgument);
}

TEST(Ari, Boundaries) {
  const std::vector<std::size_t> a{0, 0, 1, 1, 2};
  EXPECT_EQ(adjusted_rand_index(a, a), 1.0);
  EXPECT_EQ(adjusted_rand_index(a, std::vector<std::size_t>{5, 5, 3, 3, 9}), 1.0);
  const std::vector<std::size_t> one(6, 0);
  const std::vector<std::size_t> singletons{0, 1, 2, 3, 4, 5};
  EXPECT_EQ(adjusted_rand_index(one, singletons), 0.0);
  EXPECT_THROW(adjusted_rand_index(a, one), DataError);
}

TEST(Ari, SmallHandInstance) {
  // Contingency table [[2, 0], [1, 1]]: index 1, row pairs 2, column pairs 3,
  // expected 2 * 3 / 6 = 1, maximum 2.5, so ARI = 0.
  const std::vector<std::size_t> a{0, 0, 1, 1};
  const std::vector<std::size_t> b{0, 0, 0, 1};
  EXPECT_NEAR(adjusted_rand_index(a, b), 0.0, 1e-15);
  EXPECT_NEAR(adjusted_rand_index(a, b), ari_by_pairs(a, b), 1e-15);
}

TEST(Ari, MatchesPairCountingAndIsSymmetric) {
  Philox4x32 rng(6, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 2 + rng.below(30);
    std::vector<std::size_t> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng.below(4);
      b[i] = rng.below(3);
    }
    EXPECT_NEAR(adjusted_rand_index(a, b), ari_by_pairs(a, b), 1e-12);
    EXPECT_EQ(adjusted_rand_index(a, b), adjusted_rand_index(b, a));
    EXPECT_LE(adjusted_rand_index(a, b), 1.0);
  }
}

TEST(Linkage, Names) {
  EXPECT_EQ(parse_linkage("complete"), Linkage::kComplete);
  EXPECT_THROW(parse_linkage("ward"), InvalidArgument);
}
