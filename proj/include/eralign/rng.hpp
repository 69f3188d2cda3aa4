#pragma once

#include <cstdint>
#include <random>

#include "eralign/permutation.hpp"

namespace eralign {

/// Seedable 64-bit generator with a platform-independent output stream.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// Conversions to doubles and bounded integers are done here rather than with
/// <random> distributions, whose algorithms vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

/// Uniform random permutation of [n] by Fisher-Yates.
inline Permutation uniform_permutation(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> images = Permutation::identity(n).images();
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = rng.below(i);
    std::swap(images[i - 1], images[j]);
  }
  return Permutation(std::move(images));
}

}  // namespace eralign
