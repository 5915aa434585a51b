#pragma once

// Seeded randomness. Everything random in the library flows from a user seed
// through these helpers; nothing reads the clock or OS entropy.

#include "hexcover/exact.hpp"
#include "hexcover/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace hexcover {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31U);
}

/// Independent stream for (seed, stream index).
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL + 1)));
}

/// Uniform in [0, 1) from 53 random bits. Used instead of
/// std::uniform_real_distribution, whose output differs across standard
/// libraries.
inline double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11U) * 0x1.0p-53; }

inline std::uint64_t uniform_index(std::mt19937_64& g, std::uint64_t n) {
  // multiply-shift on the high 32 bits; bias is below 2^-32 for small n
  return ((g() >> 32U) * n) >> 32U;
}

/// Uniform point in the closed hexagon: pick one of the six congruent
/// triangles, then sample it with the square-root barycentric map. Never
/// lands on the outer boundary since u < 1.
inline Point2 sample_in_hexagon(Point2 center, double side, std::mt19937_64& g) {
  const auto v = hexagon_vertices(center, side);
  const auto tri = static_cast<std::size_t>(uniform_index(g, 6));
  const double su = std::sqrt(uniform01(g));
  const double w = uniform01(g);
  const Point2 a = v[tri] - center;
  const Point2 b = v[(tri + 1) % 6] - center;
  return center + su * ((1.0 - w) * a + w * b);
}

}  // namespace hexcover
