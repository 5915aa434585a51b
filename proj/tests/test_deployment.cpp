#include "hexcover/deployment.hpp"

#include <catch_amalgamated.hpp>

#include <bit>
#include <set>
#include <vector>

using namespace hexcover;

namespace {

std::set<LatticePoint> positions(const Deployment& d) {
  std::set<LatticePoint> s;
  for (const auto& r : d.sensors) s.insert(r.position);
  return s;
}

// Oracle for the counts: sum the per-hexagon contributions directly from the
// model, without running the placement. Centers are per hexagon, vertices
// are distinct registry entries, segment sensors are three per hexagon per
// round.
std::int64_t count_from_model(const SolarModel& m, int k) {
  const auto h = static_cast<std::int64_t>(m.hexagon_count());
  std::int64_t n = h;
  if (k >= 2) n += static_cast<std::int64_t>(vertex_class_members(m, Parity::even).size());
  if (k >= 3) n += static_cast<std::int64_t>(vertex_class_members(m, Parity::odd).size());
  if (k > 3) n += 3 * h * (k - 3);
  return n;
}

}  // namespace

TEST_CASE("place_proposed single hexagon", "[deployment]") {
  const auto m = build_solar_model(1, 1.0);

  const auto d1 = place_proposed(m, 1);
  REQUIRE(d1.sensors.size() == 1);
  CHECK(d1.sensors[0].position == LatticePoint{});
  CHECK(d1.sensors[0].provenance.kind == ProvenanceKind::center);

  CHECK(place_proposed(m, 2).sensors.size() == 4);
  CHECK(place_proposed(m, 3).sensors.size() == 7);

  const auto d4 = place_proposed(m, 4);
  REQUIRE(d4.sensors.size() == 10);
  std::set<LatticePoint> seg;
  for (const auto& s : d4.sensors)
    if (s.provenance.kind == ProvenanceKind::segment) seg.insert(s.position);
  // midpoints of OA, OC, OE in half-scale units
  const std::set<LatticePoint> expected{LatticePoint(1, 0, 0, 0), LatticePoint(Rational(-1, 2), 0, 0, Rational(1, 2)),
                                        LatticePoint(Rational(-1, 2), 0, 0, Rational(-1, 2))};
  CHECK(seg == expected);

  CHECK_THROWS_AS(place_proposed(m, 0), std::invalid_argument);
}

TEST_CASE("place_proposed two layers", "[deployment]") {
  const auto m = build_solar_model(2, 1.0);
  CHECK(place_proposed(m, 3).sensors.size() == 31);
  CHECK(place_proposed(m, 2).sensors.size() == 19);
  CHECK(place_proposed(m, 4).sensors.size() == 52);
}

TEST_CASE("per_hexagon_count", "[deployment]") {
  CHECK(per_hexagon_count(1) == 1);
  CHECK(per_hexagon_count(3) == 7);
  CHECK(per_hexagon_count(5) == 13);
  const auto m = build_solar_model(1, 1.0);
  for (int k = 1; k <= 10; ++k)
    CHECK(static_cast<std::int64_t>(place_proposed(m, k).sensors.size()) == per_hexagon_count(k));
}

TEST_CASE("total_count", "[deployment]") {
  CHECK(total_count(2, 2) == 19);
  CHECK(total_count(1, 3) == 7);
  CHECK(total_count(2, 4) == 52);
  CHECK(total_count(2, 4) == total_count(2, 3) + 3 * 7);
  CHECK(total_count(3, 5) == 187);
  CHECK_THROWS_AS(total_count(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(total_count(1, 0), std::invalid_argument);
}

TEST_CASE("enumeration matches closed form and model oracle", "[deployment][property]") {
  for (int l = 1; l <= 6; ++l) {
    const auto m = build_solar_model(l, 1.0);
    for (int k = 1; k <= 10; ++k) {
      INFO("l = " << l << ", k = " << k);
      const auto n = static_cast<std::int64_t>(place_proposed(m, k).sensors.size());
      REQUIRE(n == total_count(l, k));
      REQUIRE(n == count_from_model(m, k));
    }
  }
}

TEST_CASE("placement is cumulative in k", "[deployment][property]") {
  const auto m = build_solar_model(3, 1.0);
  auto prev = positions(place_proposed(m, 1));
  for (int k = 2; k <= 9; ++k) {
    const auto cur = positions(place_proposed(m, k));
    for (const auto& p : prev) REQUIRE(cur.contains(p));
    REQUIRE(cur.size() > prev.size());
    prev = cur;
  }
}

TEST_CASE("shared vertices are placed once", "[deployment]") {
  const auto m = build_solar_model(3, 1.0);
  for (int k : {2, 3}) {
    const auto d = place_proposed(m, k);
    CHECK(positions(d).size() == d.sensors.size());
    std::size_t vertex_sensors = 0;
    for (const auto& s : d.sensors) vertex_sensors += s.provenance.kind == ProvenanceKind::vertex;
    CHECK(vertex_sensors == static_cast<std::size_t>(3 * 9 * (k - 1)));
  }
}

TEST_CASE("segment sensors sit strictly inside their segment", "[deployment][property]") {
  const auto m = build_solar_model(2, 1.0);
  const auto d = place_proposed(m, 12);
  for (const auto& s : d.sensors) {
    if (s.provenance.kind != ProvenanceKind::segment) continue;
    const auto& p = s.provenance;
    const auto& o = m.hexagons[p.hexagon].center;
    const auto& v = m.hexagon_vertex_points[p.hexagon][static_cast<std::size_t>(segment_vertex(p.segment))];
    const Rational t(1, p.ordinal + 1);
    REQUIRE(s.position == o + t * (v - o));
    REQUIRE(t > 0);
    REQUIRE(t < 1);
    // even targets use odd-indexed segments and vice versa
    REQUIRE((3 + p.round) % 2 != p.segment % 2);
  }
  CHECK(positions(d).size() == d.sensors.size());
}

TEST_CASE("alternate parity choice gives the same counts", "[deployment]") {
  const auto m = build_solar_model(3, 1.0);
  const auto even = place_proposed(m, 2, Parity::even);
  const auto odd = place_proposed(m, 2, Parity::odd);
  CHECK(even.sensors.size() == odd.sensors.size());
  CHECK(positions(even) != positions(odd));
  CHECK(positions(place_proposed(m, 3, Parity::even)) == positions(place_proposed(m, 3, Parity::odd)));
}

TEST_CASE("output order is provenance rank then lattice coordinates", "[deployment]") {
  const auto d = place_proposed(build_solar_model(2, 1.0), 6);
  for (std::size_t i = 1; i < d.sensors.size(); ++i) {
    const auto a = static_cast<int>(d.sensors[i - 1].provenance.kind);
    const auto b = static_cast<int>(d.sensors[i].provenance.kind);
    REQUIRE(a <= b);
    if (a == b) REQUIRE(d.sensors[i - 1].position < d.sensors[i].position);
  }
}

TEST_CASE("every triangle is fully covered by at least k sensors", "[deployment][property]") {
  for (int l = 1; l <= 3; ++l) {
    const auto m = build_solar_model(l, 1.0);
    for (int k = 1; k <= 8; ++k) {
      const auto cert = triangle_certificate(m, place_proposed(m, k));
      INFO("l = " << l << ", k = " << k);
      REQUIRE(cert.triangles == 6 * m.hexagon_count());
      REQUIRE(cert.min_full_cover >= k);
    }
  }
}

TEST_CASE("minimum_sensors_lower_bound", "[deployment]") {
  CHECK(std::popcount(covered_triangle_mask({0, 0}, 1.0)) == 6);
  CHECK(covered_triangle_mask({0.5, 0}, 1.0) == 0b100001U);  // triangles OFA and OAB
  const auto cert = minimum_sensors_lower_bound();
  CHECK(cert.center_triangles == 6);
  CHECK(cert.max_single_non_center == 2);
  CHECK(cert.best_pair_non_center == 4);
  CHECK(cert.triple_without_center);
  CHECK(cert.bound == 3);
}
