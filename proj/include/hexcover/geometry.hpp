#pragma once

// Regular hexagons and equilateral triangles on the exact lattice.
//
// Orientation is fixed for the whole library: vertex i of a hexagon sits at
// angle 60*i degrees from its center, and edge-adjacent neighbours of a
// side-s hexagon are at distance sqrt3*s in directions 30 + 60*i degrees.

#include "hexcover/exact.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace hexcover {

/// Regular hexagon. `side` is measured in units of the global scale (the
/// sensing radius r), so a side-r hexagon has side 1 and a side-r/2 one 1/2.
struct Hexagon {
  LatticePoint center;
  Rational side{1};

  friend bool operator==(const Hexagon&, const Hexagon&) = default;
};

inline double hexagon_area(double side) { return 1.5 * kSqrt3 * side * side; }
inline double triangle_area(double side) { return kSqrt3 / 4.0 * side * side; }

/// Vertex `i` offset from the center, in half-scale lattice units.
inline LatticePoint hexagon_vertex_offset(int i, const Rational& side) {
  switch (((i % 6) + 6) % 6) {
    case 0: return {QSqrt3(2 * side, 0), QSqrt3(0)};
    case 1: return {QSqrt3(side, 0), QSqrt3::root3(side)};
    case 2: return {QSqrt3(-side, 0), QSqrt3::root3(side)};
    case 3: return {QSqrt3(-2 * side, 0), QSqrt3(0)};
    case 4: return {QSqrt3(-side, 0), QSqrt3::root3(-side)};
    default: return {QSqrt3(side, 0), QSqrt3::root3(-side)};
  }
}

/// Counterclockwise, vertex i at angle 60*i degrees.
inline std::array<LatticePoint, 6> hexagon_vertices(const Hexagon& h) {
  if (h.side <= 0) throw std::invalid_argument("hexagon side must be positive");
  std::array<LatticePoint, 6> out;
  for (int i = 0; i < 6; ++i) out[static_cast<std::size_t>(i)] = h.center + hexagon_vertex_offset(i, h.side);
  return out;
}

/// Floating-point vertices of a hexagon with the library orientation.
inline std::array<Point2, 6> hexagon_vertices(Point2 center, double side) {
  std::array<Point2, 6> out;
  for (int i = 0; i < 6; ++i) {
    const auto off = hexagon_vertex_offset(i, Rational{1}).to_point(side);
    out[static_cast<std::size_t>(i)] = center + off;
  }
  return out;
}

class EquilateralTriangle {
 public:
  EquilateralTriangle(LatticePoint a, LatticePoint b, LatticePoint c) : v_{a, b, c} {
    const auto ab = squared_norm(b - a);
    if (ab.sign() <= 0 || !(ab == squared_norm(c - b)) || !(ab == squared_norm(a - c)))
      throw std::invalid_argument("triangle is not equilateral");
  }

  [[nodiscard]] const std::array<LatticePoint, 3>& vertices() const { return v_; }
  [[nodiscard]] const LatticePoint& operator[](std::size_t i) const { return v_[i]; }

  /// Exact squared side in half-scale units.
  [[nodiscard]] QSqrt3 squared_side() const { return squared_norm(v_[1] - v_[0]); }

  [[nodiscard]] double side(double scale) const {
    return std::sqrt(squared_side().to_double()) * scale / 2.0;
  }

 private:
  std::array<LatticePoint, 3> v_;
};

/// Triangle i is {center, vertex i, vertex i+1}. The six triangles tile the
/// hexagon.
inline std::array<EquilateralTriangle, 6> hexagon_triangles(const Hexagon& h) {
  const auto v = hexagon_vertices(h);
  auto tri = [&](std::size_t i) { return EquilateralTriangle(h.center, v[i], v[(i + 1) % 6]); };
  return {tri(0), tri(1), tri(2), tri(3), tri(4), tri(5)};
}

// Containment against the three slab constraints of a hexagon with our
// orientation. With d = p - center in half-scale units:
//   |d.y| <= sqrt3*s  and  |sqrt3*d.x +- d.y| <= 2*sqrt3*s.

/// Closed hexagon, exact. Boundary points are inside.
inline bool contains_point(const Hexagon& h, const LatticePoint& p) {
  const LatticePoint d = p - h.center;
  const QSqrt3 apothem2 = QSqrt3::root3(h.side);      // sqrt3*s
  const QSqrt3 width = QSqrt3::root3(2 * h.side);     // 2*sqrt3*s
  const QSqrt3 root3dx = QSqrt3::root3(1) * d.x;
  if ((apothem2 - d.y.abs()).sign() < 0) return false;
  if ((width - (root3dx + d.y).abs()).sign() < 0) return false;
  if ((width - (root3dx - d.y).abs()).sign() < 0) return false;
  return true;
}

/// Closed hexagon, floating point with absolute tolerance `tol` (meters).
inline bool contains_point(Point2 center, double side, Point2 p, double tol = 0.0) {
  const double dx = p.x - center.x;
  const double dy = p.y - center.y;
  const double apothem = kSqrt3 / 2.0 * side;
  // each slab constraint written as a signed distance to an edge line
  if (std::abs(dy) > apothem + tol) return false;
  if (std::abs(kSqrt3 * dx + dy) / 2.0 > apothem + tol) return false;
  if (std::abs(kSqrt3 * dx - dy) / 2.0 > apothem + tol) return false;
  return true;
}

inline bool contains_point(const Hexagon& h, Point2 p, double scale, double tol = 0.0) {
  return contains_point(h.center.to_point(scale), to_double(h.side) * scale, p, tol);
}

inline bool contains_hexagon(const Hexagon& outer, const Hexagon& inner) {
  const auto v = hexagon_vertices(inner);
  return std::all_of(v.begin(), v.end(), [&](const LatticePoint& p) { return contains_point(outer, p); });
}

/// True when the interiors intersect. Both hexagons share the library
/// orientation, so the three edge normals are the only separating axes.
inline bool hexagons_overlap(const Hexagon& a, const Hexagon& b) {
  const LatticePoint d = b.center - a.center;
  const Rational s = a.side + b.side;
  const QSqrt3 root3dx = QSqrt3::root3(1) * d.x;
  if ((d.y.abs() - QSqrt3::root3(s)).sign() >= 0) return false;
  if (((root3dx + d.y).abs() - QSqrt3::root3(2 * s)).sign() >= 0) return false;
  if (((root3dx - d.y).abs() - QSqrt3::root3(2 * s)).sign() >= 0) return false;
  return true;
}

/// Largest distance from vertex `from` to any point of the triangle. The
/// triangle is convex, so the maximum is attained at one of the other two
/// vertices.
inline double farthest_distance_from_vertex(const EquilateralTriangle& t, double scale, std::size_t from = 0) {
  double best = 0.0;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == from) continue;
    const double d2 = squared_norm(t[j] - t[from]).to_double() * scale * scale / 4.0;
    best = std::max(best, std::sqrt(d2));
  }
  return best;
}

/// Whether a sensor of the given radius at vertex `from` covers the whole
/// triangle.
inline bool vertex_covers_triangle(const EquilateralTriangle& t, double sensing_radius, double scale,
                                   std::size_t from = 0) {
  const double d = farthest_distance_from_vertex(t, scale, from);
  return d * d <= sensing_radius * sensing_radius * (1.0 + 1e-12);
}

/// Diameter of a union of hexagons: maximum pairwise vertex distance.
inline double packing_diameter(std::span<const Hexagon> config, double scale) {
  if (config.empty()) throw std::invalid_argument("packing_diameter: empty configuration");
  const Rational side = config.front().side;
  std::vector<LatticePoint> pts;
  for (const auto& h : config) {
    if (h.side != side) throw std::invalid_argument("packing_diameter: mixed side lengths");
    const auto v = hexagon_vertices(h);
    pts.insert(pts.end(), v.begin(), v.end());
  }
  QSqrt3 best{0};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const QSqrt3 d2 = squared_norm(pts[j] - pts[i]);
      if ((d2 - best).sign() > 0) best = d2;
    }
  return std::sqrt(best.to_double()) * scale / 2.0;
}

struct PackingWitness {
  int count{0};
  std::vector<Hexagon> hexagons;  // side = big.side / 2
  double diameter{0};             // of the full witness, in units of scale
  double pair_diameter{0};        // of the first two witness hexagons
};

/// Three side-s/2 hexagons meeting at the center of a side-s hexagon, each
/// with one vertex on an alternate vertex of the big one. Containment and
/// pairwise non-overlap are checked exactly before returning.
inline PackingWitness count_packed_small_hexagons(const Hexagon& big, double scale = 1.0) {
  const Rational half = big.side / 2;
  PackingWitness w;
  for (int i : {1, 3, 5}) {
    // small center sits at distance s/2 from the big center along vertex i
    Hexagon small{big.center + hexagon_vertex_offset(i, half), half};
    if (!contains_hexagon(big, small)) throw std::logic_error("packing witness escapes the hexagon");
    w.hexagons.push_back(small);
  }
  for (std::size_t i = 0; i < w.hexagons.size(); ++i)
    for (std::size_t j = i + 1; j < w.hexagons.size(); ++j)
      if (hexagons_overlap(w.hexagons[i], w.hexagons[j])) throw std::logic_error("packing witness overlaps");
  w.count = static_cast<int>(w.hexagons.size());
  w.diameter = packing_diameter(w.hexagons, scale);
  w.pair_diameter = packing_diameter(std::span<const Hexagon>(w.hexagons).first(2), scale);
  return w;
}

}  // namespace hexcover
