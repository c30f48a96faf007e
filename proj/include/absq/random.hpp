#pragma once

#include <cstdint>
#include <initializer_list>

namespace absq {

// Stream purpose tags used when deriving child streams. Keeping these in one
// place guarantees two different consumers can never collide on a seed path.
inline constexpr std::uint64_t kStreamTrial = 0x7472696131ULL;
inline constexpr std::uint64_t kStreamCodebookSamples = 0x636f646562ULL;
inline constexpr std::uint64_t kStreamGaussianPool = 0x6761757373ULL;
inline constexpr std::uint64_t kStreamDemo = 0x64656d6fULL;

// xoshiro256** seeded through SplitMix64. Self-contained so that every draw
// is bit-reproducible across compilers and standard libraries; std::*
// distributions make no such promise. Streams are split by deriving a child
// seed from (parent seed, label path), never by sharing state.
class RandomStream {
public:
  explicit RandomStream(std::uint64_t seed);

  // Child stream at `path` under `master_seed`. Same path, same stream.
  static RandomStream derive(std::uint64_t master_seed,
                             std::initializer_list<std::uint64_t> path);

  std::uint64_t next_u64();

  // Uniform on [0, 1), 53-bit resolution.
  double next_double();

  // Standard Gaussian via the Marsaglia polar method.
  double next_gaussian();

  // Uniform integer in [0, bound); bound must be positive.
  std::int64_t next_below(std::int64_t bound);

private:
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// SplitMix64 step; exposed because seed derivation and tests use it.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace absq
