#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "copula_transport/rng.hpp"

using copula_transport::Philox4x32;
using copula_transport::StreamPurpose;

// Known-answer vectors distributed with Random123 (kat_vectors, philox4x32 10).
TEST(Philox, KnownAnswerZero) {
  const auto out = Philox4x32::bijection({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (Philox4x32::Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerAllOnes) {
  const auto out = Philox4x32::bijection({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                                         {0xffffffff, 0xffffffff});
  EXPECT_EQ(out, (Philox4x32::Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
  const auto out = Philox4x32::bijection({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                                         {0xa4093822, 0x299f31d0});
  EXPECT_EQ(out, (Philox4x32::Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, SameSeedAndStreamRepeat) {
  Philox4x32 a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a(), b());
}

TEST(Philox, StreamsAndSeedsDiffer) {
  Philox4x32 a(42, 7), b(42, 8), c(43, 7);
  int same_stream = 0, same_seed = 0;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    same_stream += x == b();
    same_seed += x == c();
  }
  EXPECT_EQ(same_stream, 0);
  EXPECT_EQ(same_seed, 0);
}

TEST(Philox, UniformRanges) {
  Philox4x32 rng(1, 0);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    const double v = rng.uniform_open_low();
    ASSERT_GT(v, 0.0);
    ASSERT_LE(v, 1.0);
  }
}

TEST(Philox, NormalMoments) {
  Philox4x32 rng(3, 1);
  const int n = 200000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.0, 0.01);
  EXPECT_NEAR(sq / n - mean * mean, 1.0, 0.02);
}

TEST(Philox, BelowIsInRangeAndCoversIt) {
  Philox4x32 rng(9, 2);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto k = rng.below(7);
    ASSERT_LT(k, 7u);
    ++counts[k];
  }
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(StreamId, FieldsDoNotCollide) {
  using copula_transport::stream_id;
  std::set<std::uint64_t> ids;
  for (auto p : {StreamPurpose::kAlternative, StreamPurpose::kNullFirst, StreamPurpose::kNullSecond}) {
    for (std::uint32_t pattern = 0; pattern < 9; ++pattern) {
      for (std::uint32_t level = 0; level < 10; ++level) {
        for (std::uint32_t trial : {0u, 1u, 499u, 0x80000000u}) {
          ids.insert(stream_id(p, pattern, level, trial));
        }
      }
    }
  }
  EXPECT_EQ(ids.size(), 3u * 9u * 10u * 4u);
}
