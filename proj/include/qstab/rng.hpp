#ifndef QSTAB_RNG_HPP
#define QSTAB_RNG_HPP

#include <cstdint>

namespace qstab {

/// 64-bit finalizer mix (SplitMix64 output function). Bijective.
std::uint64_t mix64(std::uint64_t z);

/// Derives an independent stream id from a base seed and a tag. Used to
/// hand out per-sample / per-subtask streams so that results do not depend
/// on how work is partitioned across threads.
std::uint64_t substream(std::uint64_t seed, std::uint64_t tag);

/// Splittable counter-based generator (SplitMix64). An instance is fully
/// determined by (seed, stream); distinct streams are statistically
/// independent. Cheap to construct, so the idiom is one instance per
/// Monte Carlo sample index.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(substream(seed, stream)) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double strictly inside (0, 1).
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via inverse-CDF transform (no pairing state).
  double next_normal();

  /// Uniform on [-half_width, half_width].
  double next_symmetric(double half_width) {
    return (2.0 * next_uniform() - 1.0) * half_width;
  }

 private:
  std::uint64_t state_;
};

}  // namespace qstab

#endif
