#include "hexcover/analytics.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

using namespace hexcover;

namespace {

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

std::int64_t fig8_gap(const FigureTable& t, int k, int l) {
  const auto& kc = t.column("k").values;
  const auto& lc = t.column("l").values;
  const auto& g = t.column("gap").values;
  for (std::size_t i = 0; i < t.rows(); ++i)
    if (kc[i] == k && lc[i] == l) return std::llround(g[i]);
  throw std::out_of_range("missing grid point");
}

}  // namespace

TEST_CASE("density_proposed", "[analytics]") {
  CHECK(density_proposed(1, 1.0) == Catch::Approx(2.0 / (3 * std::sqrt(3.0))));
  CHECK(density_proposed(1, 1.0) == Catch::Approx(0.38490).epsilon(1e-5));
  CHECK(density_proposed(2, 10.0) == Catch::Approx(0.015396).epsilon(1e-4));
  CHECK(density_proposed(4, 1.0) == Catch::Approx(3.8490).epsilon(1e-4));
  CHECK_THROWS_AS(density_proposed(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(density_proposed(1, 0.0), std::invalid_argument);
}

TEST_CASE("density_benchmark", "[analytics]") {
  CHECK(density_benchmark(1, 1.0) == Catch::Approx(1.5396).epsilon(1e-4));
  CHECK(density_benchmark(2, 2.0) == Catch::Approx(0.7698).epsilon(1e-4));
  for (int k = 1; k <= 20; ++k)
    CHECK(density_benchmark(k, 3.0) / density_proposed(k, 3.0) == Catch::Approx(4.0 * k / (3.0 * k - 2)));
}

TEST_CASE("density_gain", "[analytics]") {
  CHECK(density_gain(1, 1.0) == Catch::Approx(1.1547).epsilon(1e-4));
  CHECK(density_gain(7, 10.0) == Catch::Approx(0.034641).epsilon(1e-4));
  for (int k = 1; k <= 50; ++k) CHECK(density_gain(k, 1.0) > 0);
}

TEST_CASE("gain equals benchmark minus proposed", "[analytics][property]") {
  std::mt19937_64 g(77);
  std::uniform_int_distribution<int> kd(1, 1000);
  std::uniform_real_distribution<double> rd(0.1, 100.0);
  for (int i = 0; i < 100; ++i) {
    const int k = kd(g);
    const double r = rd(g);
    REQUIRE(rel_close(density_benchmark(k, r) - density_proposed(k, r), density_gain(k, r), 1e-12));
  }
}

TEST_CASE("density_ratio_limit", "[analytics]") {
  CHECK(density_ratio_limit(10) == Catch::Approx(0.7));
  CHECK(density_ratio_limit(1'000'000) == Catch::Approx(0.7499995).epsilon(1e-12));
  CHECK(std::abs(density_ratio_limit(1'000'000) - 0.75) < 5e-7);
  CHECK(density_ratio_limit(1) == Catch::Approx(0.25));
  CHECK_THROWS_AS(density_ratio_limit(0), std::invalid_argument);
}

TEST_CASE("empirical density of the patch", "[analytics]") {
  const double r = 1.0;
  const int l = 50;
  const double area = static_cast<double>(hexagon_count(l)) * hexagon_area(r);
  // k = 1: one sensor per hexagon, the per-hexagon density is exact
  CHECK(rel_close(static_cast<double>(total_count(l, 1)) / area, density_proposed(1, r), 0.02));
  // k >= 2: vertex sensors are shared by three hexagons, so the patch needs
  // fewer sensors per area than 3k-2 per hexagon; the limit is 2 (k=2) and
  // 3(k-2) (k>=3) per hexagon
  const double per_hex = 1.0 / hexagon_area(r);
  CHECK(rel_close(static_cast<double>(total_count(l, 2)) / area, 2 * per_hex, 0.02));
  for (int k = 3; k <= 10; ++k) {
    const double empirical = static_cast<double>(total_count(l, k)) / area;
    CHECK(rel_close(empirical, 3.0 * (k - 2) * per_hex, 0.02));
    CHECK(empirical < density_proposed(k, r));
  }
}

TEST_CASE("figure tables", "[analytics]") {
  const auto f6 = emit_figure_table(FigureId::fig6);
  const auto& l = f6.column("l").values;
  for (std::size_t i = 0; i < f6.rows(); ++i)
    if (l[i] == 2) {
      CHECK(f6.column("proposed_k3").values[i] == 31);
      CHECK(f6.column("cga_k3").values[i] == 72);
    }

  const auto f8 = emit_figure_table(FigureId::fig8);
  CHECK(f8.rows() == 100);
  CHECK(fig8_gap(f8, 1, 1) == 0);
  for (double gap : f8.column("gap").values) CHECK(gap >= 0);

  const auto f4 = emit_figure_table(FigureId::fig4);
  CHECK(f4.rows() == 30);
  CHECK(f4.columns.size() == 7);
  for (const auto& c : f4.columns) CHECK(c.values.size() == f4.rows());

  const auto f5 = emit_figure_table(FigureId::fig5);
  CHECK(f5.column("proposed_r10").values[1] == Catch::Approx(density_proposed(2, 10.0)));
  const auto f7 = emit_figure_table(FigureId::fig7);
  CHECK(f7.column("cga_l5").values[2] == benchmark_count(5, 3));

  CHECK_THROWS_AS(parse_figure_id("fig9"), std::invalid_argument);
  CHECK(parse_figure_id("fig7") == FigureId::fig7);
}

TEST_CASE("fig8 gap is quadratic in l", "[analytics][property]") {
  const auto t = emit_figure_table(FigureId::fig8);
  for (int k = 1; k <= 10; ++k)
    for (int l = 1; l + 3 <= 10; ++l) {
      const auto d3 = fig8_gap(t, k, l + 3) - 3 * fig8_gap(t, k, l + 2) + 3 * fig8_gap(t, k, l + 1) - fig8_gap(t, k, l);
      REQUIRE(d3 == 0);
    }
}

TEST_CASE("fig8 gap is linear in k on the k >= 3 branch only", "[analytics][property]") {
  const auto t = emit_figure_table(FigureId::fig8);
  for (int l = 1; l <= 10; ++l) {
    for (int k = 3; k + 2 <= 10; ++k)
      REQUIRE(fig8_gap(t, k + 2, l) - 2 * fig8_gap(t, k + 1, l) + fig8_gap(t, k, l) == 0);
    // the k = 1 and k = 2 cases are separate closed forms
    CHECK(fig8_gap(t, 3, l) - 2 * fig8_gap(t, 2, l) + fig8_gap(t, 1, l) == -12 * l * l + 24 * l - 17);
  }
}

TEST_CASE("sweep ranges", "[analytics]") {
  CHECK(SweepRange{1, 30, 1}.values().size() == 30);
  CHECK(SweepRange{0.5, 1.0, 0.1}.values().size() == 6);
  CHECK_THROWS_AS((SweepRange{3, 1, 1}.values()), std::invalid_argument);
  CHECK_THROWS_AS((SweepRange{1, 3, 0}.values()), std::invalid_argument);
  const auto r = parse_range("2:8:2");
  CHECK(r.values() == std::vector<double>{2, 4, 6, 8});
  CHECK_THROWS_AS(parse_range("2-8"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("a:b"), std::invalid_argument);

  auto spec = default_sweep(FigureId::fig6);
  spec.range = {1.5, 3, 1};
  CHECK_THROWS_AS(emit_figure_table(spec), std::invalid_argument);
}

TEST_CASE("csv rendering", "[analytics]") {
  std::ostringstream os;
  write_csv(os, emit_figure_table(FigureId::fig6));
  const auto text = os.str();
  CHECK(text.rfind("# meta: figure=fig6", 0) == 0);
  CHECK(text.find("\nl,proposed_k3,cga_k3,gap_k3,proposed_k10,cga_k10,gap_k10\n") != std::string::npos);
  CHECK(text.find("\n2,31,72,41,") != std::string::npos);

  std::ostringstream os4;
  write_csv(os4, emit_figure_table(FigureId::fig4));
  CHECK(os4.str().find("\n1,1.5396,3.07920,") == std::string::npos);  // 6 significant digits, %g style
  CHECK(os4.str().find("\n1,1.5396,3.0792,") != std::string::npos);
  CHECK(format_cell(1234567.0, true) == "1234567");
  CHECK(format_cell(0.0153960, false) == "0.015396");
}
