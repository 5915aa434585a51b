#include "hexcover/benchmark.hpp"
#include "hexcover/verifier.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

using namespace hexcover;

namespace {

VerifyOptions quick() {
  VerifyOptions o;
  o.grid_step = 0.1;
  o.mc_samples = 5000;
  o.seed = 9;
  return o;
}

}  // namespace

TEST_CASE("verify_coverage on proposed deployments", "[verifier]") {
  const auto m1 = build_solar_model(1, 1.0);
  const auto r1 = verify_coverage(m1, place_proposed(m1, 1), 1, quick());
  CHECK(r1.pass());
  CHECK(r1.min_coverage >= 1);
  CHECK(r1.failing_points.empty());

  const auto m2 = build_solar_model(2, 1.0);
  const auto r3 = verify_coverage(m2, place_proposed(m2, 3), 3, quick());
  CHECK(r3.pass());
  CHECK(r3.samples == r3.structured_samples + r3.grid_samples + r3.mc_samples);
  CHECK(r3.structured_samples == 7 * 6 * 7);

  // the same deployment is not 4-covered everywhere
  const auto r4 = verify_coverage(m2, place_proposed(m2, 3), 4, quick());
  CHECK_FALSE(r4.pass());
  CHECK(r4.min_coverage == 3);
}

TEST_CASE("coverage at a triangle centroid", "[verifier]") {
  const std::vector<Point2> sensors{{0, 0}, {1, 0}};
  const Point2 centroid{0.5, std::sqrt(3.0) / 6};
  CHECK(distance(centroid, sensors[0]) == Catch::Approx(std::sqrt(1.0 / 3)));
  CHECK(coverage_at(centroid, sensors, 1.0) == 2);
  const SensorIndex idx(sensors, 1.0);
  CHECK(idx.count(centroid) == 2);
}

TEST_CASE("deleting an alternate vertex breaks 2-coverage", "[verifier]") {
  const auto m = build_solar_model(1, 1.0);
  auto d = place_proposed(m, 2);
  std::vector<std::size_t> vertex_idx;
  for (std::size_t i = 0; i < d.sensors.size(); ++i)
    if (d.sensors[i].provenance.kind == ProvenanceKind::vertex) vertex_idx.push_back(i);
  REQUIRE(vertex_idx.size() == 3);
  d.sensors.erase(d.sensors.begin() + static_cast<std::ptrdiff_t>(vertex_idx[0]));
  const auto rep = verify_coverage(m, d, 2, quick());
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.failing_points.empty());
  CHECK(rep.failing_points.size() <= kFailingPointCap);
}

TEST_CASE("empty deployment", "[verifier]") {
  const auto m = build_solar_model(2, 1.0);
  const auto rep = verify_coverage(m, std::vector<Point2>{}, 1, quick());
  CHECK(rep.min_coverage == 0);
  CHECK_FALSE(rep.pass());
  CHECK(rep.failing_points.size() == kFailingPointCap);
  CHECK(rep.failing_count == rep.samples);
}

TEST_CASE("fail fast stops at the first failing point", "[verifier]") {
  const auto m = build_solar_model(2, 1.0);
  auto opt = quick();
  opt.fail_fast = true;
  const auto rep = verify_coverage(m, std::vector<Point2>{}, 1, opt);
  CHECK(rep.stopped_early);
  CHECK(rep.samples == 1);
  CHECK(rep.failing_points.size() == 1);
}

TEST_CASE("residual_coverage", "[verifier]") {
  const auto m = build_solar_model(2, 1.0);
  const auto d = place_proposed(m, 3);

  const auto none = residual_coverage(m, d, std::vector<std::size_t>{}, quick());
  CHECK(none.min_coverage >= 3);

  // sensors are sorted centers first, so index 0 is a center; find the origin
  std::size_t origin = d.sensors.size();
  for (std::size_t i = 0; i < d.sensors.size(); ++i)
    if (d.sensors[i].position == LatticePoint{}) origin = i;
  REQUIRE(origin < d.sensors.size());
  const auto one = residual_coverage(m, d, std::vector<std::size_t>{origin}, quick());
  CHECK(one.min_coverage >= 2);
  CHECK(one.target_k == 3);

  std::vector<std::size_t> all(d.sensors.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  CHECK(residual_coverage(m, d, all, quick()).min_coverage == 0);

  CHECK_THROWS_AS(residual_coverage(m, d, std::vector<std::size_t>{1, 1}, quick()), std::invalid_argument);
  CHECK_THROWS_AS(residual_coverage(m, d, std::vector<std::size_t>{d.sensors.size()}, quick()), std::out_of_range);
}

TEST_CASE("monotone in k on identical samples", "[verifier][property]") {
  const auto m = build_solar_model(2, 1.0);
  int prev = -1;
  for (int k = 1; k <= 7; ++k) {
    const auto rep = verify_coverage(m, place_proposed(m, k), k, quick());
    REQUIRE(rep.min_coverage >= prev);
    REQUIRE(rep.pass());
    prev = rep.min_coverage;
  }
}

TEST_CASE("halving the grid step never raises the minimum", "[verifier][property]") {
  const auto m = build_solar_model(2, 1.0);
  auto d = place_proposed(m, 2);
  d.sensors.pop_back();
  auto opt = quick();
  opt.structured = false;
  opt.mc_samples = 0;
  int prev = 1 << 20;
  for (double step : {0.4, 0.2, 0.1, 0.05}) {
    opt.grid_step = step;
    const auto rep = verify_coverage(m, d, 2, opt);
    REQUIRE(rep.min_coverage <= prev);
    prev = rep.min_coverage;
  }
  // nested grids
  const auto coarse = grid_points(m, 0.2);
  const auto fine = grid_points(m, 0.1);
  for (const auto& p : coarse) REQUIRE(std::find(fine.begin(), fine.end(), p) != fine.end());
}

TEST_CASE("reports are deterministic", "[verifier]") {
  const auto m = build_solar_model(2, 1.0);
  const auto d = place_proposed(m, 4);
  const auto a = verify_coverage(m, d, 4, quick());
  const auto b = verify_coverage(m, d, 4, quick());
  CHECK(a.coverage_histogram == b.coverage_histogram);
  CHECK(a.min_coverage == b.min_coverage);
  CHECK(a.samples == b.samples);
}

TEST_CASE("sample families stay in the region", "[verifier]") {
  const auto m = build_solar_model(3, 2.0);
  for (const auto& p : monte_carlo_points(m, 2000, 1)) REQUIRE(region_contains(m, p));
  for (const auto& p : structured_points(m)) REQUIRE(region_contains(m, p));
  CHECK_FALSE(region_contains(m, Point2{100, 100}));
  CHECK_THROWS_AS(grid_points(m, 0.0), std::invalid_argument);
}

TEST_CASE("bucketed count matches brute force", "[verifier][property]") {
  const auto m = build_solar_model(3, 1.5);
  const auto d = place_benchmark(m, 2, 5);
  const SensorIndex idx(d.sensors, m.side);
  for (const auto& p : monte_carlo_points(m, 3000, 2)) REQUIRE(idx.count(p) == coverage_at(p, d.sensors, m.side));
}
