#pragma once

// Empirical k-coverage certification over the closed union of a solar
// model's hexagons. Three sample families are evaluated in a fixed order:
//   1. structured points: corners, edge midpoints and centroid of every
//      triangle of every hexagon (the worst cases for this placement)
//   2. a square grid anchored at the origin, clipped to the region
//   3. seeded uniform Monte Carlo points in the region
// A point is covered by a sensor when its distance is at most r, with
// squared-distance slack 1e-9 r^2 for float conversion.

#include "hexcover/deployment.hpp"
#include "hexcover/exact.hpp"
#include "hexcover/geometry.hpp"
#include "hexcover/random.hpp"
#include "hexcover/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hexcover {

inline constexpr double kCoverageSlack = 1e-9;
inline constexpr std::size_t kFailingPointCap = 100;

struct VerifyOptions {
  double grid_step{0};          // 0 -> r/20
  std::uint64_t seed{0};
  std::size_t mc_samples{50000};
  bool structured{true};
  bool fail_fast{false};
};

struct CoverageReport {
  int target_k{0};
  std::size_t samples{0};
  std::size_t structured_samples{0};
  std::size_t grid_samples{0};
  std::size_t mc_samples{0};
  int min_coverage{0};
  std::vector<Point2> failing_points;  // capped
  std::size_t failing_count{0};
  std::map<int, std::size_t> coverage_histogram;
  std::string region;
  double grid_step{0};
  bool stopped_early{false};

  [[nodiscard]] bool pass() const { return min_coverage >= target_k; }
};

/// Bucketed sensor lookup with cell size r.
class SensorIndex {
 public:
  SensorIndex(std::span<const Point2> sensors, double r) : sensors_(sensors.begin(), sensors.end()), r_(r) {
    for (std::size_t i = 0; i < sensors_.size(); ++i) cells_[key(cell(sensors_[i].x), cell(sensors_[i].y))].push_back(i);
  }

  /// Number of sensors within distance r of p (closed disk).
  [[nodiscard]] int count(Point2 p) const {
    const double limit = r_ * r_ * (1.0 + kCoverageSlack);
    const std::int64_t cx = cell(p.x);
    const std::int64_t cy = cell(p.y);
    int n = 0;
    for (std::int64_t dx = -1; dx <= 1; ++dx)
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = cells_.find(key(cx + dx, cy + dy));
        if (it == cells_.end()) continue;
        for (auto i : it->second)
          if (squared_distance(p, sensors_[i]) <= limit) ++n;
      }
    return n;
  }

 private:
  [[nodiscard]] std::int64_t cell(double v) const { return static_cast<std::int64_t>(std::floor(v / r_)); }
  static std::uint64_t key(std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(x) << 32U) ^ (static_cast<std::uint64_t>(y) & 0xFFFFFFFFULL);
  }

  std::vector<Point2> sensors_;
  double r_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

/// Coverage count at a single point, brute force.
inline int coverage_at(Point2 p, std::span<const Point2> sensors, double r) {
  const double limit = r * r * (1.0 + kCoverageSlack);
  int n = 0;
  for (const auto& s : sensors)
    if (squared_distance(p, s) <= limit) ++n;
  return n;
}

inline bool region_contains(const SolarModel& m, Point2 p) {
  const double tol = 1e-9 * m.side;
  for (std::size_t h = 0; h < m.hexagons.size(); ++h) {
    const Point2 c = m.center_of(h);
    if (squared_distance(p, c) > m.side * m.side * 1.0001) continue;
    if (contains_point(c, m.side, p, tol)) return true;
  }
  return false;
}

/// Corners, edge midpoints and centroid of every triangle of every hexagon.
inline std::vector<Point2> structured_points(const SolarModel& m) {
  std::vector<Point2> out;
  out.reserve(m.hexagons.size() * 6 * 7);
  for (std::size_t h = 0; h < m.hexagons.size(); ++h) {
    const Point2 o = m.center_of(h);
    const auto v = hexagon_vertices(o, m.side);
    for (std::size_t i = 0; i < 6; ++i) {
      const Point2 a = v[i];
      const Point2 b = v[(i + 1) % 6];
      out.push_back(o);
      out.push_back(a);
      out.push_back(b);
      out.push_back(0.5 * (o + a));
      out.push_back(0.5 * (a + b));
      out.push_back(0.5 * (b + o));
      out.push_back((1.0 / 3.0) * (o + a + b));
    }
  }
  return out;
}

/// Grid of pitch `step` anchored at the origin, clipped to the region. Grids
/// whose pitch divides another's are nested.
inline std::vector<Point2> grid_points(const SolarModel& m, double step) {
  if (!(step > 0)) throw std::invalid_argument("grid_step must be positive");
  double min_x = std::numeric_limits<double>::max();
  double max_x = std::numeric_limits<double>::lowest();
  double min_y = min_x;
  double max_y = max_x;
  for (std::size_t h = 0; h < m.hexagons.size(); ++h) {
    const Point2 c = m.center_of(h);
    min_x = std::min(min_x, c.x - m.side);
    max_x = std::max(max_x, c.x + m.side);
    min_y = std::min(min_y, c.y - m.side);
    max_y = std::max(max_y, c.y + m.side);
  }
  const auto i0 = static_cast<std::int64_t>(std::floor(min_x / step));
  const auto i1 = static_cast<std::int64_t>(std::ceil(max_x / step));
  const auto j0 = static_cast<std::int64_t>(std::floor(min_y / step));
  const auto j1 = static_cast<std::int64_t>(std::ceil(max_y / step));
  std::vector<Point2> out;
  for (auto i = i0; i <= i1; ++i)
    for (auto j = j0; j <= j1; ++j) {
      const Point2 p{static_cast<double>(i) * step, static_cast<double>(j) * step};
      if (region_contains(m, p)) out.push_back(p);
    }
  return out;
}

/// Uniform points in the region: hexagons have equal area, so pick one
/// uniformly and sample inside it.
inline std::vector<Point2> monte_carlo_points(const SolarModel& m, std::size_t n, std::uint64_t seed) {
  std::vector<Point2> out;
  out.reserve(n);
  auto g = make_stream(seed, 0xC0FFEEULL);
  for (std::size_t i = 0; i < n; ++i) {
    const auto h = static_cast<std::size_t>(uniform_index(g, m.hexagons.size()));
    out.push_back(sample_in_hexagon(m.center_of(h), m.side, g));
  }
  return out;
}

inline CoverageReport verify_coverage(const SolarModel& m, std::span<const Point2> sensors, int target_k,
                                      const VerifyOptions& opt = {}) {
  CoverageReport rep;
  rep.target_k = target_k;
  rep.grid_step = opt.grid_step > 0 ? opt.grid_step : m.side / 20.0;
  rep.region = "union of " + std::to_string(m.hexagons.size()) + " closed side-r hexagons (l=" +
               std::to_string(m.layers) + ", r=" + std::to_string(m.side) + ")";
  rep.min_coverage = std::numeric_limits<int>::max();

  const SensorIndex index(sensors, m.side);
  auto evaluate = [&](std::span<const Point2> pts, std::size_t& family_count) {
    for (const auto& p : pts) {
      const int c = index.count(p);
      ++family_count;
      ++rep.samples;
      ++rep.coverage_histogram[c];
      rep.min_coverage = std::min(rep.min_coverage, c);
      if (c < target_k) {
        ++rep.failing_count;
        if (rep.failing_points.size() < kFailingPointCap) rep.failing_points.push_back(p);
        if (opt.fail_fast) {
          rep.stopped_early = true;
          return false;
        }
      }
    }
    return true;
  };

  bool go = true;
  if (opt.structured) go = evaluate(structured_points(m), rep.structured_samples);
  if (go) go = evaluate(grid_points(m, rep.grid_step), rep.grid_samples);
  if (go) evaluate(monte_carlo_points(m, opt.mc_samples, opt.seed), rep.mc_samples);

  if (rep.samples == 0) rep.min_coverage = 0;
  return rep;
}

inline CoverageReport verify_coverage(const SolarModel& m, const Deployment& d, int target_k,
                                      const VerifyOptions& opt = {}) {
  const auto pts = d.positions();
  return verify_coverage(m, pts, target_k, opt);
}

/// Re-verify after removing the listed sensors; target is the deployment's k.
inline CoverageReport residual_coverage(const SolarModel& m, const Deployment& d,
                                        std::span<const std::size_t> failures, const VerifyOptions& opt = {}) {
  std::set<std::size_t> failed;
  for (auto i : failures) {
    if (i >= d.sensors.size()) throw std::out_of_range("failed sensor index out of range");
    if (!failed.insert(i).second) throw std::invalid_argument("duplicate failed sensor index");
  }
  std::vector<Point2> alive;
  for (std::size_t i = 0; i < d.sensors.size(); ++i)
    if (!failed.contains(i)) alive.push_back(d.sensors[i].position.to_point(d.r));
  return verify_coverage(m, alive, d.k, opt);
}

}  // namespace hexcover
