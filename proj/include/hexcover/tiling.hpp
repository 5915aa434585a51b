#pragma once

// The l-layer "solar" patch: a central side-r hexagon and concentric rings of
// edge-adjacent hexagons around it. Layer 1 is the central hexagon alone;
// layer j >= 2 holds the 6(j-1) hexagons at honeycomb distance j-1.

#include "hexcover/exact.hpp"
#include "hexcover/geometry.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace hexcover {

/// Axial hexagon coordinates. Unit steps (1,0) and (0,1) move to the
/// neighbours in directions 30 and 90 degrees.
struct Axial {
  int q{0};
  int t{0};

  friend bool operator==(const Axial&, const Axial&) = default;
  friend auto operator<=>(const Axial&, const Axial&) = default;
};

inline constexpr std::array<Axial, 6> kAxialDirections{
    Axial{1, 0}, Axial{0, 1}, Axial{-1, 1}, Axial{-1, 0}, Axial{0, -1}, Axial{1, -1}};

inline int axial_distance(Axial a, Axial b = {}) {
  const int dq = a.q - b.q;
  const int dt = a.t - b.t;
  return (std::abs(dq) + std::abs(dt) + std::abs(dq + dt)) / 2;
}

/// Center of the hexagon at axial `a` in a honeycomb of side `side` anchored
/// at `origin`.
inline LatticePoint axial_center(Axial a, const Rational& side, const LatticePoint& origin = {}) {
  // (q,t) -> q*(3s, sqrt3*s) + t*(0, 2*sqrt3*s) in half-scale units
  return origin + LatticePoint{QSqrt3(3 * side * a.q, 0), QSqrt3::root3(side * (a.q + 2 * a.t))};
}

/// Hexagons of the ring at distance `radius`, walked counterclockwise.
inline std::vector<Axial> axial_ring(int radius) {
  if (radius == 0) return {Axial{}};
  std::vector<Axial> out;
  Axial cur{kAxialDirections[4].q * radius, kAxialDirections[4].t * radius};
  for (const auto& dir : kAxialDirections) {
    for (int step = 0; step < radius; ++step) {
      out.push_back(cur);
      cur = Axial{cur.q + dir.q, cur.t + dir.t};
    }
  }
  return out;
}

enum class Parity { even, odd };

inline Parity other(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }
inline Parity parity_of(int vertex_index) { return vertex_index % 2 == 0 ? Parity::even : Parity::odd; }
inline std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline Parity parse_parity(std::string_view s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  throw std::invalid_argument("parity must be 'even' or 'odd'");
}

struct VertexRecord {
  LatticePoint position;
  Parity parity_class{Parity::even};
  std::vector<std::size_t> incident_hexagons;
};

struct SolarModel {
  int layers{1};
  double side{1.0};  // r, meters
  std::vector<Axial> axial;       // hexagon index -> axial coordinate
  std::vector<Hexagon> hexagons;  // side 1 in scale units
  std::vector<int> layer_of;      // 1-based layer of each hexagon
  std::map<LatticePoint, VertexRecord> vertex_registry;
  std::vector<std::array<LatticePoint, 6>> hexagon_vertex_points;

  [[nodiscard]] std::size_t hexagon_count() const { return hexagons.size(); }
  [[nodiscard]] std::size_t vertex_count() const { return vertex_registry.size(); }
  [[nodiscard]] Point2 center_of(std::size_t i) const { return hexagons[i].center.to_point(side); }

  [[nodiscard]] double area() const { return static_cast<double>(hexagons.size()) * hexagon_area(side); }

  /// Index of the hexagon at axial `a`, or npos.
  [[nodiscard]] std::size_t find(Axial a) const {
    for (std::size_t i = 0; i < axial.size(); ++i)
      if (axial[i] == a) return i;
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

/// Closed-form hexagon count of an l-layer patch.
inline std::int64_t hexagon_count(std::int64_t layers) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  return 1 + 3 * layers * (layers - 1);
}

inline SolarModel build_solar_model(int layers, double side) {
  if (layers < 1) throw std::invalid_argument("layers must be >= 1");
  if (!(side > 0)) throw std::invalid_argument("side length must be positive");

  SolarModel m;
  m.layers = layers;
  m.side = side;
  for (int ring = 0; ring < layers; ++ring) {
    for (const auto& a : axial_ring(ring)) {
      m.axial.push_back(a);
      m.hexagons.push_back(Hexagon{axial_center(a, Rational{1}), Rational{1}});
      m.layer_of.push_back(ring + 1);
    }
  }

  m.hexagon_vertex_points.reserve(m.hexagons.size());
  for (std::size_t h = 0; h < m.hexagons.size(); ++h) {
    const auto verts = hexagon_vertices(m.hexagons[h]);
    m.hexagon_vertex_points.push_back(verts);
    for (int i = 0; i < 6; ++i) {
      const auto& p = verts[static_cast<std::size_t>(i)];
      auto [it, inserted] = m.vertex_registry.try_emplace(p, VertexRecord{p, parity_of(i), {}});
      if (!inserted && it->second.parity_class != parity_of(i))
        throw std::logic_error("honeycomb vertex parity is inconsistent");
      it->second.incident_hexagons.push_back(h);
    }
  }
  return m;
}

/// Registry vertices of one bipartition class, in registry order.
inline std::vector<LatticePoint> vertex_class_members(const SolarModel& m, Parity cls) {
  std::vector<LatticePoint> out;
  for (const auto& [pos, rec] : m.vertex_registry)
    if (rec.parity_class == cls) out.push_back(pos);
  return out;
}

}  // namespace hexcover
