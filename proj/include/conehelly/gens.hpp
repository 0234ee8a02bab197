#pragma once

// Extremal examples and seeded random instances.

#include <cstdint>

#include "conehelly/cone.hpp"

namespace conehelly {

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by
/// 0x9E3779B97F4A7C15; output mixes with shifts 30/27/31 and multipliers
/// 0xBF58476D1CE4E5B9, 0x94D049BB133111EB. Fully specified so seeds are
/// portable across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [lo, hi] by rejection of the biased top range.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// {e_1, ..., e_d, -(e_1 + ... + e_d)}: sums to zero, every d of them are
/// independent, and together they positively span R^d.
VectorSet gen_simplex_like(std::size_t d);

/// {e_1, -e_1, ..., e_k, -e_k} in R^d.
VectorSet gen_axis_pairs(std::size_t k, std::size_t d);

/// Normals {e_i, -e_i : i <= d-k+1}; the solution set is a (k-1)-dimensional
/// coordinate subspace.
HalfspaceSystem gen_example2(std::size_t d, std::size_t k);

/// n nonzero integer vectors with entries uniform in [-bound, bound]. A zero
/// draw is discarded and the whole vector redrawn.
VectorSet gen_random(std::size_t d, std::size_t n, std::uint64_t bound, std::uint64_t seed);

bool verify_tightness_example1(std::size_t d);
bool verify_tightness_example2(std::size_t d, std::size_t k);

}  // namespace conehelly
