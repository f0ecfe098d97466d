#pragma once

#include <array>
#include <cstdint>

namespace copula_transport {

// Philox4x32-10 counter-based generator (Salmon et al., Random123).
//
// The 64-bit seed is the key. The 128-bit counter is split into a 64-bit
// stream id (high half) and a 64-bit block index (low half), so any number
// of independent streams can be drawn from one seed without coordination.
// Each block yields two 64-bit outputs. All derived variates (uniform,
// normal) are computed here rather than through <random> distributions,
// whose algorithms are implementation-defined.
class Philox4x32 {
 public:
  using result_type = std::uint64_t;
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  Philox4x32(std::uint64_t seed, std::uint64_t stream) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  result_type operator()() noexcept;

  // Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  // Uniform on (0, 1].
  double uniform_open_low() noexcept { return 1.0 - uniform(); }
  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal() noexcept;
  // Uniform integer in [0, bound) by rejection (unbiased). bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  // One application of the 10-round bijection; exposed for known-answer tests.
  static Block bijection(Block counter, Key key) noexcept;

 private:
  Key key_;
  std::uint64_t stream_;
  std::uint64_t block_index_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_normal_ = false;
};

// Stream ids are laid out as
//   bits 56..63 purpose | bits 48..55 pattern | bits 32..47 level | bits 0..31 trial
// so every (purpose, pattern, noise level, trial) tuple owns a distinct stream.
enum class StreamPurpose : std::uint8_t {
  kGeneric = 0,
  kTarget = 1,
  kAlternative = 2,
  kNullFirst = 3,
  kNullSecond = 4,
  kEstimator = 5,
  kPermutation = 6,
  kDataset = 7,
  kIndependence = 8,
};

// SplitMix64 finalizer; used to derive per-trial seeds from structured ids.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t stream_id(StreamPurpose purpose, std::uint32_t pattern,
                                  std::uint32_t level,
                                  std::uint32_t trial) noexcept {
  return (std::uint64_t{static_cast<std::uint8_t>(purpose)} << 56) |
         (std::uint64_t{pattern & 0xffu} << 48) |
         (std::uint64_t{level & 0xffffu} << 32) | std::uint64_t{trial};
}

}  // namespace copula_transport
