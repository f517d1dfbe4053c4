#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace roth {

// std::uniform_int_distribution is implementation defined; these helpers keep
// sampled sets identical across standard libraries for a given seed.

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// `count` distinct values from [0, population), by partial Fisher-Yates.
inline std::vector<std::size_t> sample_without_replacement(std::size_t population, std::size_t count,
                                                           std::mt19937_64& rng) {
  std::vector<std::size_t> pool(population);
  for (std::size_t i = 0; i < population; ++i) pool[i] = i;
  if (count > population) count = population;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, population - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  return pool;
}

/// floor(density * population), tolerant of binary rounding (0.3 * 10 is 3).
inline std::size_t sample_size(double density, std::size_t population) {
  if (density <= 0.0) return 0;
  const double exact = density * static_cast<double>(population) + 1e-9;
  const auto size = static_cast<std::size_t>(exact);
  return size > population ? population : size;
}

/// Deterministic generator for a (seed, stream, index) triple.
inline std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace roth
