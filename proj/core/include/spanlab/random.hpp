#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace spanlab {

using Rng = std::mt19937_64;

// SplitMix64 finaliser; derives independent per-trial seeds from a base seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [0,1) with 53 random bits; stable across standard libraries.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [0, bound) by rejection; stable across standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound == 0 ? 0 : (~std::uint64_t{0} - (~std::uint64_t{0} % bound));
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

// Uniformly random permutation of [0, n).
inline std::vector<std::uint32_t> random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

// Uniform k-subset of [0, n), returned sorted.
inline std::vector<std::uint32_t> random_subset(std::size_t n, std::size_t k, Rng& rng) {
  auto p = random_permutation(n, rng);
  p.resize(k);
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace spanlab
