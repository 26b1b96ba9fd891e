#pragma once

// Portable seeded randomness. std::mt19937_64 output is fixed by the
// standard; the real/bit helpers below avoid the implementation-defined
// standard distributions so identical seeds give identical graphs everywhere.

#include <cstdint>
#include <random>
#include <string_view>

namespace cliquelb {

/// SplitMix64 finaliser.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x);

/// Derives an independent stream seed from a user seed and a tag
/// (FNV-1a of the tag folded into the seed, then SplitMix64).
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) from the top 53 bits of one engine draw.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool coin() { return (engine_() >> 63) != 0; }
  /// Uniform in [0, bound) by rejection; bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cliquelb
