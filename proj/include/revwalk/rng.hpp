#pragma once

// Counter-based random streams (Philox4x32-10).
//
// A stream is identified by (seed, stream_index). The seed is the Philox key,
// the stream index occupies the upper half of the 128-bit counter and the
// lower half counts blocks, so two distinct pairs never share a block and a
// given pair always reproduces the same sequence regardless of scheduling.

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace revwalk {

namespace philox {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

inline constexpr std::uint32_t kMul0 = 0xD2511F53u;
inline constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

constexpr Counter round(const Counter& c, const Key& k) {
  const std::uint64_t p0 = std::uint64_t{kMul0} * c[0];
  const std::uint64_t p1 = std::uint64_t{kMul1} * c[2];
  return {static_cast<std::uint32_t>(p1 >> 32) ^ c[1] ^ k[0], static_cast<std::uint32_t>(p1),
          static_cast<std::uint32_t>(p0 >> 32) ^ c[3] ^ k[1], static_cast<std::uint32_t>(p0)};
}

/// Philox4x32 with 10 rounds, the Random123 reference configuration.
constexpr Counter philox4x32_10(Counter ctr, Key key) {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    ctr = round(ctr, key);
  }
  return ctr;
}

}  // namespace philox

/// SplitMix64 finaliser; used to derive child stream indices.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_index)
      : seed_(seed), stream_(stream_index), key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  /// Independent stream for replica `k` of this stream's family.
  RngStream substream(std::uint64_t k) const { return RngStream(seed_, mix64(stream_ ^ mix64(k + 1))); }

  std::uint32_t next_u32() {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  /// Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on [0,1) with 32 random bits; enough resolution for lattice steps.
  double uniform32() { return static_cast<double>(next_u32()) * 0x1.0p-32; }

  /// Uniform on (0,1].
  double uniform_open0() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

  /// Standard normal by Box-Muller; the second variate of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform_open0()));
    const double theta = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  /// Number of 128-bit blocks consumed so far.
  std::uint64_t blocks_used() const { return block_; }

 private:
  void refill() {
    const philox::Counter ctr{static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                              static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)};
    buf_ = philox::philox4x32_10(ctr, key_);
    ++block_;
    pos_ = 0;
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  philox::Key key_;
  std::uint64_t block_ = 0;
  philox::Counter buf_{};
  int pos_ = 4;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Hands out fair +-1 steps, 64 per random word, lowest bit first.
class BitSource {
 public:
  explicit BitSource(RngStream& rng) : rng_(rng) {}

  /// Next step: +1 for a set bit, -1 otherwise.
  int step() {
    if (left_ == 0) {
      word_ = rng_.next_u64();
      left_ = 64;
    }
    const int s = static_cast<int>(word_ & 1u) * 2 - 1;
    word_ >>= 1;
    --left_;
    return s;
  }

  /// True when a whole fresh word is available, i.e. the next 64 steps can be taken at once.
  bool aligned() const { return left_ == 0; }

  /// Consumes a whole word; returns the net displacement of its 64 steps.
  int block64() {
    const std::uint64_t w = rng_.next_u64();
    return 2 * std::popcount(w) - 64;
  }

 private:
  RngStream& rng_;
  std::uint64_t word_ = 0;
  int left_ = 0;
};

}  // namespace revwalk
