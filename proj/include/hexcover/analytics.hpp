#pragma once

// Sensor densities of both schemes and the sweep tables behind the
// comparison figures (fig4 .. fig8).

#include "hexcover/benchmark.hpp"
#include "hexcover/deployment.hpp"
#include "hexcover/exact.hpp"

#include <fmt/format.h>

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hexcover {

/// Proposed scheme: 3k-2 sensors per side-r hexagon.
inline double density_proposed(int k, double r) {
  if (k < 1 || !(r > 0)) throw std::invalid_argument("density needs k >= 1 and r > 0");
  return 2.0 * (3.0 * k - 2.0) / (3.0 * kSqrt3 * r * r);
}

/// Benchmark: k sensors per side-r/2 hexagon.
inline double density_benchmark(int k, double r) {
  if (k < 1 || !(r > 0)) throw std::invalid_argument("density needs k >= 1 and r > 0");
  return 8.0 * k / (3.0 * kSqrt3 * r * r);
}

inline double density_gain(int k, double r) {
  if (k < 1 || !(r > 0)) throw std::invalid_argument("density needs k >= 1 and r > 0");
  return (2.0 * k + 4.0) / (3.0 * kSqrt3 * r * r);
}

/// Ratio of proposed to benchmark density at a finite k; tends to 3/4.
inline double density_ratio_limit(std::int64_t k_probe) {
  if (k_probe < 1) throw std::invalid_argument("k_probe must be >= 1");
  const auto k = static_cast<double>(k_probe);
  return (3.0 * k - 2.0) / (4.0 * k);
}

/// n(l,k) / n_ex(l,k); tends to 3/5 as k, l grow.
inline double count_ratio(std::int64_t l, std::int64_t k) {
  return static_cast<double>(total_count(l, k)) / static_cast<double>(benchmark_count(l, k));
}

enum class FigureId { fig4, fig5, fig6, fig7, fig8 };

inline constexpr FigureId kAllFigures[] = {FigureId::fig4, FigureId::fig5, FigureId::fig6, FigureId::fig7,
                                           FigureId::fig8};

inline std::string_view to_string(FigureId f) {
  switch (f) {
    case FigureId::fig4: return "fig4";
    case FigureId::fig5: return "fig5";
    case FigureId::fig6: return "fig6";
    case FigureId::fig7: return "fig7";
    case FigureId::fig8: return "fig8";
  }
  return "";
}

inline FigureId parse_figure_id(std::string_view s) {
  for (auto f : kAllFigures)
    if (to_string(f) == s) return f;
  throw std::invalid_argument("unknown figure id: " + std::string(s));
}

struct SweepRange {
  double start{1};
  double stop{10};
  double step{1};

  [[nodiscard]] std::vector<double> values() const {
    if (!(step > 0)) throw std::invalid_argument("sweep step must be positive");
    if (stop < start) throw std::invalid_argument("sweep range is empty");
    std::vector<double> out;
    // index-based to avoid accumulating rounding error
    for (std::int64_t i = 0;; ++i) {
      const double v = start + static_cast<double>(i) * step;
      if (v > stop + 1e-9 * step) break;
      out.push_back(v);
    }
    return out;
  }
};

inline SweepRange parse_range(std::string_view s) {
  // "start:stop" or "start:stop:step"
  SweepRange r;
  const auto c1 = s.find(':');
  if (c1 == std::string_view::npos) throw std::invalid_argument("range must be start:stop[:step]");
  const auto c2 = s.find(':', c1 + 1);
  try {
    r.start = std::stod(std::string(s.substr(0, c1)));
    r.stop = std::stod(std::string(s.substr(c1 + 1, c2 == std::string_view::npos ? s.npos : c2 - c1 - 1)));
    if (c2 != std::string_view::npos) r.step = std::stod(std::string(s.substr(c2 + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("range must be start:stop[:step]");
  }
  (void)r.values();
  return r;
}

enum class SweepVariable { radius, coverage_k, layers, joint };

struct SweepSpec {
  FigureId figure{FigureId::fig4};
  SweepVariable variable{SweepVariable::radius};
  SweepRange range;              // swept variable (k for joint)
  SweepRange secondary;          // l for joint sweeps
  std::vector<double> fixed;     // one series per fixed value
  double radius{1.0};            // used by count figures only for metadata
  bool defaults{true};           // ranges are implementer-chosen defaults
};

/// Default sweeps: r in 1..30 m, k in 1..10, l in 1..10.
inline SweepSpec default_sweep(FigureId f) {
  switch (f) {
    case FigureId::fig4: return {f, SweepVariable::radius, {1, 30, 1}, {}, {2, 7}};
    case FigureId::fig5: return {f, SweepVariable::coverage_k, {1, 10, 1}, {}, {10, 20}};
    case FigureId::fig6: return {f, SweepVariable::layers, {1, 10, 1}, {}, {3, 10}};
    case FigureId::fig7: return {f, SweepVariable::coverage_k, {1, 10, 1}, {}, {3, 5}};
    case FigureId::fig8: return {f, SweepVariable::joint, {1, 10, 1}, {1, 10, 1}, {}};
  }
  throw std::invalid_argument("unknown figure id");
}

struct Column {
  std::string name;
  std::vector<double> values;
  bool integral{false};
};

struct FigureTable {
  FigureId figure_id{FigureId::fig4};
  std::vector<Column> columns;
  std::string note;

  [[nodiscard]] std::size_t rows() const { return columns.empty() ? 0 : columns.front().values.size(); }

  [[nodiscard]] const Column& column(std::string_view name) const {
    for (const auto& c : columns)
      if (c.name == name) return c;
    throw std::out_of_range("no column " + std::string(name));
  }
};

namespace detail {

inline int as_int(double v, const char* what) {
  const double rounded = std::round(v);
  if (std::abs(v - rounded) > 1e-9 || rounded < 1) throw std::invalid_argument(std::string(what) + " must be a positive integer");
  return static_cast<int>(rounded);
}

inline std::string label(double v) { return fmt::format("{:g}", v); }

}  // namespace detail

inline FigureTable emit_figure_table(const SweepSpec& spec) {
  FigureTable t;
  t.figure_id = spec.figure;
  t.note = spec.defaults ? "ranges are implementer-chosen defaults" : "ranges set on the command line";
  const auto xs = spec.range.values();

  auto density_series = [&](const std::string& suffix, auto k_of, auto r_of) {
    Column p{"proposed_" + suffix, {}, false};
    Column b{"cga_" + suffix, {}, false};
    Column g{"gap_" + suffix, {}, false};
    for (double x : xs) {
      const int k = k_of(x);
      const double r = r_of(x);
      p.values.push_back(density_proposed(k, r));
      b.values.push_back(density_benchmark(k, r));
      g.values.push_back(density_gain(k, r));
    }
    t.columns.push_back(std::move(p));
    t.columns.push_back(std::move(b));
    t.columns.push_back(std::move(g));
  };

  auto count_series = [&](const std::string& suffix, auto l_of, auto k_of) {
    Column p{"proposed_" + suffix, {}, true};
    Column b{"cga_" + suffix, {}, true};
    Column g{"gap_" + suffix, {}, true};
    for (double x : xs) {
      const int l = l_of(x);
      const int k = k_of(x);
      p.values.push_back(static_cast<double>(total_count(l, k)));
      b.values.push_back(static_cast<double>(benchmark_count(l, k)));
      g.values.push_back(static_cast<double>(count_gap(l, k)));
    }
    t.columns.push_back(std::move(p));
    t.columns.push_back(std::move(b));
    t.columns.push_back(std::move(g));
  };

  switch (spec.figure) {
    case FigureId::fig4: {
      t.columns.push_back({"r", xs, false});
      for (double kf : spec.fixed) {
        const int k = detail::as_int(kf, "k");
        density_series("k" + detail::label(kf), [k](double) { return k; }, [](double r) { return r; });
      }
      break;
    }
    case FigureId::fig5: {
      t.columns.push_back({"k", xs, true});
      for (double r : spec.fixed)
        density_series("r" + detail::label(r), [](double k) { return detail::as_int(k, "k"); },
                       [r](double) { return r; });
      break;
    }
    case FigureId::fig6: {
      t.columns.push_back({"l", xs, true});
      for (double kf : spec.fixed) {
        const int k = detail::as_int(kf, "k");
        count_series("k" + detail::label(kf), [](double l) { return detail::as_int(l, "l"); },
                     [k](double) { return k; });
      }
      break;
    }
    case FigureId::fig7: {
      t.columns.push_back({"k", xs, true});
      for (double lf : spec.fixed) {
        const int l = detail::as_int(lf, "l");
        count_series("l" + detail::label(lf), [l](double) { return l; },
                     [](double k) { return detail::as_int(k, "k"); });
      }
      break;
    }
    case FigureId::fig8: {
      Column kc{"k", {}, true}, lc{"l", {}, true}, p{"proposed", {}, true}, b{"cga", {}, true}, g{"gap", {}, true};
      for (double kf : xs)
        for (double lf : spec.secondary.values()) {
          const int k = detail::as_int(kf, "k");
          const int l = detail::as_int(lf, "l");
          kc.values.push_back(k);
          lc.values.push_back(l);
          p.values.push_back(static_cast<double>(total_count(l, k)));
          b.values.push_back(static_cast<double>(benchmark_count(l, k)));
          g.values.push_back(static_cast<double>(count_gap(l, k)));
        }
      t.columns = {std::move(kc), std::move(lc), std::move(p), std::move(b), std::move(g)};
      break;
    }
  }
  for (const auto& c : t.columns)
    for (double v : c.values)
      if (!std::isfinite(v)) throw std::logic_error("non-finite value in figure table");
  return t;
}

inline FigureTable emit_figure_table(FigureId f) { return emit_figure_table(default_sweep(f)); }

inline std::string format_cell(double v, bool integral) {
  if (integral) return fmt::format("{}", static_cast<std::int64_t>(std::llround(v)));
  return fmt::format("{:.6g}", v);
}

/// CSV: one `# meta:` comment line, a header row, one row per sweep point.
inline void write_csv(std::ostream& os, const FigureTable& t) {
  os << "# meta: figure=" << to_string(t.figure_id) << " note=" << '"' << t.note << '"' << "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) os << (c ? "," : "") << t.columns[c].name;
  os << "\n";
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      os << (c ? "," : "") << format_cell(t.columns[c].values[r], t.columns[c].integral);
    os << "\n";
  }
}

}  // namespace hexcover
