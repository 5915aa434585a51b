#pragma once

// Proposed k-coverage placement on a solar model.
//
//   k = 1   one sensor at every hexagon center
//   k = 2   plus every vertex of one bipartition class
//   k = 3   plus every vertex of the other class
//   k > 3   each round adds three sensors per hexagon on center-to-vertex
//           segments; a round that raises coverage to an even target uses
//           l1, l3, l5 and an odd target uses l2, l4, l6
//
// Segment l_i runs from the hexagon center to vertex i-1. The m-th sensor
// placed on a segment sits at parameter t = 1/(m+1) from the center.

#include "hexcover/exact.hpp"
#include "hexcover/geometry.hpp"
#include "hexcover/tiling.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hexcover {

enum class Strategy { proposed, benchmark };

inline std::string_view to_string(Strategy s) { return s == Strategy::proposed ? "proposed" : "benchmark"; }

inline Strategy parse_strategy(std::string_view s) {
  if (s == "proposed") return Strategy::proposed;
  if (s == "benchmark") return Strategy::benchmark;
  throw std::invalid_argument("strategy must be 'proposed' or 'benchmark'");
}

enum class ProvenanceKind { center = 0, vertex = 1, segment = 2 };

struct Provenance {
  ProvenanceKind kind{ProvenanceKind::center};
  std::size_t hexagon{SolarModel::npos};  // owning hexagon for center/segment
  Parity parity{Parity::even};            // vertex class
  int segment{0};                         // l_i, 1..6
  int round{0};                           // 1..k-3
  int ordinal{0};                         // m-th sensor on this segment

  [[nodiscard]] std::string tag() const {
    switch (kind) {
      case ProvenanceKind::center: return "center";
      case ProvenanceKind::vertex: return "vertex-" + std::string(to_string(parity));
      case ProvenanceKind::segment:
        return "segment-l" + std::to_string(segment) + "-r" + std::to_string(round);
    }
    return {};
  }
};

struct SensorRecord {
  LatticePoint position;
  Provenance provenance;
};

struct Deployment {
  std::vector<SensorRecord> sensors;
  int k{1};
  double r{1.0};
  int layers{1};
  Parity first_class{Parity::even};
  Strategy strategy{Strategy::proposed};

  [[nodiscard]] std::vector<Point2> positions() const {
    std::vector<Point2> out;
    out.reserve(sensors.size());
    for (const auto& s : sensors) out.push_back(s.position.to_point(r));
    return out;
  }
};

inline std::int64_t per_hexagon_count(std::int64_t k) {
  if (k < 1) throw std::invalid_argument("coverage k must be >= 1");
  return 3 * k - 2;
}

/// Closed-form sensor count for k-coverage of an l-layer patch.
inline std::int64_t total_count(std::int64_t l, std::int64_t k) {
  if (l < 1) throw std::invalid_argument("layers must be >= 1");
  if (k < 1) throw std::invalid_argument("coverage k must be >= 1");
  if (k == 1) return 1 + 3 * l * (l - 1);
  if (k == 2) return 6 * l * l - 3 * l + 1;
  return 9 * (k - 2) * l * l - 3 * (3 * k - 8) * l + 3 * k - 8;
}

/// Segment index l_i (1..6) -> vertex index.
inline int segment_vertex(int segment) { return segment - 1; }

inline Deployment place_proposed(const SolarModel& m, int k, Parity first_class = Parity::even) {
  if (k < 1) throw std::invalid_argument("coverage k must be >= 1");

  Deployment d;
  d.k = k;
  d.r = m.side;
  d.layers = m.layers;
  d.first_class = first_class;
  d.strategy = Strategy::proposed;

  std::set<LatticePoint> taken;
  auto add = [&](const LatticePoint& p, const Provenance& prov) {
    if (!taken.insert(p).second) throw std::logic_error("two sensors placed at the same location");
    d.sensors.push_back(SensorRecord{p, prov});
  };

  for (std::size_t h = 0; h < m.hexagons.size(); ++h)
    add(m.hexagons[h].center, Provenance{ProvenanceKind::center, h});

  if (k >= 2) {
    for (const auto& p : vertex_class_members(m, first_class))
      add(p, Provenance{ProvenanceKind::vertex, SolarModel::npos, first_class});
  }
  if (k >= 3) {
    for (const auto& p : vertex_class_members(m, other(first_class)))
      add(p, Provenance{ProvenanceKind::vertex, SolarModel::npos, other(first_class)});
  }

  // sensors already on each (hexagon, segment)
  std::vector<std::array<int, 7>> on_segment(m.hexagons.size(), std::array<int, 7>{});
  for (int round = 1; round <= k - 3; ++round) {
    const int target = 3 + round;
    const int first_segment = target % 2 == 0 ? 1 : 2;
    for (std::size_t h = 0; h < m.hexagons.size(); ++h) {
      const auto& center = m.hexagons[h].center;
      for (int seg = first_segment; seg <= 6; seg += 2) {
        const int ordinal = ++on_segment[h][static_cast<std::size_t>(seg)];
        const Rational t(1, ordinal + 1);
        const auto& vertex = m.hexagon_vertex_points[h][static_cast<std::size_t>(segment_vertex(seg))];
        add(center + t * (vertex - center),
            Provenance{ProvenanceKind::segment, h, Parity::even, seg, round, ordinal});
      }
    }
  }

  std::sort(d.sensors.begin(), d.sensors.end(), [](const SensorRecord& a, const SensorRecord& b) {
    const auto ra = static_cast<int>(a.provenance.kind);
    const auto rb = static_cast<int>(b.provenance.kind);
    if (ra != rb) return ra < rb;
    return a.position < b.position;
  });
  return d;
}

/// Exact check that every point of the triangle is within `radius_units`
/// (half-scale units) of p: the three vertices suffice by convexity.
inline bool covers_triangle_exact(const LatticePoint& p, const EquilateralTriangle& t, const Rational& radius_units) {
  const QSqrt3 r2(radius_units * radius_units, 0);
  for (const auto& v : t.vertices())
    if ((r2 - squared_norm(v - p)).sign() < 0) return false;
  return true;
}

struct TriangleCertificate {
  int min_full_cover{0};         // min over all triangles of fully-covering sensors
  std::size_t triangles{0};
  std::size_t hexagon_at_min{0};
  int triangle_at_min{0};
};

/// For every triangle of every hexagon, count sensors whose closed disk of
/// radius r contains the whole triangle. Exact arithmetic, zero tolerance.
inline TriangleCertificate triangle_certificate(const SolarModel& m, const Deployment& d) {
  TriangleCertificate cert;
  cert.min_full_cover = -1;
  const Rational radius_units{2};  // r in half-scale units
  const auto pts = d.positions();
  for (std::size_t h = 0; h < m.hexagons.size(); ++h) {
    const Point2 c = m.center_of(h);
    const auto tris = hexagon_triangles(m.hexagons[h]);
    std::vector<std::size_t> near;
    for (std::size_t s = 0; s < pts.size(); ++s)
      if (distance(pts[s], c) <= 2.0 * m.side + 1e-9 * m.side) near.push_back(s);
    for (int i = 0; i < 6; ++i) {
      int count = 0;
      for (auto s : near)
        if (covers_triangle_exact(d.sensors[s].position, tris[static_cast<std::size_t>(i)], radius_units)) ++count;
      ++cert.triangles;
      if (cert.min_full_cover < 0 || count < cert.min_full_cover) {
        cert.min_full_cover = count;
        cert.hexagon_at_min = h;
        cert.triangle_at_min = i;
      }
    }
  }
  if (cert.min_full_cover < 0) cert.min_full_cover = 0;
  return cert;
}

/// Bitmask of the six triangles of the side-r hexagon centered at the origin
/// that a sensor at `p` covers completely (all three corners within r).
inline unsigned covered_triangle_mask(Point2 p, double r) {
  const auto v = hexagon_vertices(Point2{0, 0}, r);
  const double limit = r * r + 1e-9 * r * r;
  auto within = [&](Point2 q) { return squared_distance(p, q) <= limit; };
  unsigned mask = 0;
  const bool center_ok = within(Point2{0, 0});
  for (std::size_t i = 0; i < 6; ++i)
    if (center_ok && within(v[i]) && within(v[(i + 1) % 6])) mask |= 1U << i;
  return mask;
}

struct LowerBoundCertificate {
  int bound{3};
  int center_triangles{0};        // triangles covered by a sensor at the center
  int max_single_non_center{0};   // best single off-center candidate
  int best_pair_non_center{0};    // best union over two off-center candidates
  bool triple_without_center{false};  // three off-center sensors cover all six
  std::size_t candidates{0};
};

/// Grid search over candidate positions in [-extent*r, extent*r]^2 with
/// `divisions` cells per r, excluding the center. Confirms that without the
/// center one sensor covers at most two triangles, two cover at most four,
/// so at least three are required.
inline LowerBoundCertificate minimum_sensors_lower_bound(int divisions = 40, double extent = 1.5, double r = 1.0) {
  LowerBoundCertificate cert;
  cert.center_triangles = std::popcount(covered_triangle_mask(Point2{0, 0}, r));

  std::set<unsigned> masks;
  const int n = static_cast<int>(extent * divisions);
  const double step = r / divisions;
  for (int i = -n; i <= n; ++i)
    for (int j = -n; j <= n; ++j) {
      if (i == 0 && j == 0) continue;
      ++cert.candidates;
      const unsigned mask = covered_triangle_mask(Point2{i * step, j * step}, r);
      masks.insert(mask);
      cert.max_single_non_center = std::max(cert.max_single_non_center, std::popcount(mask));
    }
  for (unsigned a : masks)
    for (unsigned b : masks) {
      cert.best_pair_non_center = std::max(cert.best_pair_non_center, std::popcount(a | b));
      for (unsigned c : masks)
        if ((a | b | c) == 0x3FU) cert.triple_without_center = true;
    }
  cert.bound = cert.best_pair_non_center < 6 ? 3 : 2;
  return cert;
}

}  // namespace hexcover
