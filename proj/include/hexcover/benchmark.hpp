#pragma once

// Comparison scheme: tile with side-r/2 hexagons and drop k random sensors
// into each. The small honeycomb shares the big one's orientation and is
// anchored at the origin plus an optional exact offset.

#include "hexcover/deployment.hpp"
#include "hexcover/exact.hpp"
#include "hexcover/geometry.hpp"
#include "hexcover/random.hpp"
#include "hexcover/tiling.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hexcover {

/// Closed-form benchmark count (k sensors per small hexagon).
inline std::int64_t benchmark_count(std::int64_t l, std::int64_t k) {
  if (l < 1) throw std::invalid_argument("layers must be >= 1");
  if (k < 1) throw std::invalid_argument("coverage k must be >= 1");
  if (k == 1) return 1 + 3 * l * (l - 1);
  return k * (15 * l * l - 27 * l + 18);
}

inline std::int64_t count_gap(std::int64_t l, std::int64_t k) {
  const std::int64_t gap = benchmark_count(l, k) - total_count(l, k);
  if (gap < 0) throw std::logic_error("benchmark uses fewer sensors than the proposed strategy");
  return gap;
}

/// Whether p lies in the closed union of the model's hexagons (exact).
inline bool model_contains(const SolarModel& m, const LatticePoint& p) {
  const Point2 q = p.to_point(1.0);
  for (std::size_t h = 0; h < m.hexagons.size(); ++h) {
    const Point2 c = m.hexagons[h].center.to_point(1.0);
    if (squared_distance(q, c) > 1.0 + 1e-6) continue;  // circumradius 1 in scale units
    if (contains_point(m.hexagons[h], p)) return true;
  }
  return false;
}

/// Side-r/2 hexagons whose six vertices all lie in the union of the model's
/// closed hexagons, ordered by ring around the anchor.
inline std::vector<Hexagon> small_hexagons_inside(const SolarModel& m, const LatticePoint& offset = {}) {
  const Rational half(1, 2);
  std::vector<Hexagon> out;
  // small-lattice rings needed to reach past the patch boundary
  const int reach = 2 * m.layers + 3;
  for (int ring = 0; ring <= reach; ++ring) {
    for (const auto& a : axial_ring(ring)) {
      Hexagon small{axial_center(a, half, offset), half};
      const auto verts = hexagon_vertices(small);
      if (std::all_of(verts.begin(), verts.end(), [&](const LatticePoint& v) { return model_contains(m, v); }))
        out.push_back(small);
    }
  }
  return out;
}

struct BenchmarkDeployment {
  std::vector<Hexagon> small_hexagons;
  std::vector<Point2> sensors;
  std::vector<std::size_t> owner;  // small-hexagon index of each sensor
  int k{1};
  double r{1.0};
  int layers{1};
  std::uint64_t seed{0};
  LatticePoint offset;
};

inline BenchmarkDeployment place_benchmark(const SolarModel& m, int k, std::uint64_t seed,
                                           const LatticePoint& offset = {}) {
  if (k < 1) throw std::invalid_argument("coverage k must be >= 1");
  BenchmarkDeployment d;
  d.k = k;
  d.r = m.side;
  d.layers = m.layers;
  d.seed = seed;
  d.offset = offset;
  d.small_hexagons = small_hexagons_inside(m, offset);
  d.sensors.reserve(d.small_hexagons.size() * static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < d.small_hexagons.size(); ++i) {
    auto g = make_stream(seed, i);
    const Point2 c = d.small_hexagons[i].center.to_point(m.side);
    for (int j = 0; j < k; ++j) {
      d.sensors.push_back(sample_in_hexagon(c, m.side / 2.0, g));
      d.owner.push_back(i);
    }
  }
  return d;
}

}  // namespace hexcover
