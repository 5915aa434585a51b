#pragma once

// `hexcover` command-line front end: plan, verify, compare, sweep.
//
// Exit codes: 0 success or coverage pass, 1 coverage fail, 2 usage or input
// error, 3 internal invariant violation.

#include "hexcover/analytics.hpp"
#include "hexcover/benchmark.hpp"
#include "hexcover/deployment.hpp"
#include "hexcover/io.hpp"
#include "hexcover/tiling.hpp"
#include "hexcover/verifier.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hexcover {

enum ExitCode : int { kExitOk = 0, kExitCoverageFail = 1, kExitUsage = 2, kExitInternal = 3 };

struct RunConfig {
  int layers{1};
  int coverage{1};
  double radius{1.0};
  std::string strategy{"proposed"};
  std::uint64_t seed{0};
  std::string parity{"even"};
  std::string offset{"0,0"};
  double grid_step{0};
  std::size_t mc_samples{50000};
  std::string output{"-"};
  std::string input;
  std::string format{"csv"};
  std::string model_json;
  bool fail_fast{false};
  std::string radius_range;
  std::string coverage_range;
  std::string layer_range;
};

namespace detail {

/// "dx,dy" with each a rational in units of r ("1/4", "0.5" not allowed).
inline LatticePoint parse_offset(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("offset must be 'dx,dy'");
  auto rat = [](std::string part) {
    part = std::string(trim(part));
    const auto slash = part.find('/');
    try {
      std::size_t used = 0;
      const long long num = std::stoll(part.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? part.size() : slash)) throw std::invalid_argument("");
      long long den = 1;
      if (slash != std::string::npos) {
        den = std::stoll(part.substr(slash + 1), &used);
        if (used != part.size() - slash - 1 || den == 0) throw std::invalid_argument("");
      }
      return Rational(num, den);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("offset components must be integers or fractions p/q");
    }
  };
  // half-scale lattice units
  return {2 * rat(s.substr(0, comma)), Rational{0}, 2 * rat(s.substr(comma + 1)), Rational{0}};
}

/// Writes through `write` to a file, or to `out` when path is "-".
template <typename Fn>
bool emit(const std::string& path, std::ostream& out, std::ostream& err, Fn&& write) {
  if (path == "-") {
    write(out);
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot open '" << path << "' for writing\n";
    return false;
  }
  write(f);
  f.flush();
  if (!f) {
    err << "error: failed writing '" << path << "'\n";
    return false;
  }
  return true;
}

inline int run_plan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto strategy = parse_strategy(cfg.strategy);
  const auto format = parse_format(cfg.format);
  const auto model = build_solar_model(cfg.layers, cfg.radius);
  std::ostream& summary = cfg.output == "-" ? err : out;

  if (!cfg.model_json.empty()) {
    if (!emit(cfg.model_json, out, err, [&](std::ostream& os) { os << to_json(model).dump(2) << "\n"; }))
      return kExitUsage;
  }

  if (strategy == Strategy::proposed) {
    const auto d = place_proposed(model, cfg.coverage, parse_parity(cfg.parity));
    const auto formula = total_count(cfg.layers, cfg.coverage);
    const auto file = to_sensor_file(d);
    if (!emit(cfg.output, out, err, [&](std::ostream& os) { write_sensors(os, file, format); })) return kExitUsage;
    summary << fmt::format("strategy=proposed n={} formula={} density={:.6g}\n", d.sensors.size(), formula,
                           density_proposed(cfg.coverage, cfg.radius));
    if (static_cast<std::int64_t>(d.sensors.size()) != formula) {
      err << "internal error: enumerated sensor count " << d.sensors.size() << " != closed form " << formula << "\n";
      return kExitInternal;
    }
    return kExitOk;
  }

  const auto d = place_benchmark(model, cfg.coverage, cfg.seed, parse_offset(cfg.offset));
  const auto file = to_sensor_file(d);
  if (!emit(cfg.output, out, err, [&](std::ostream& os) { write_sensors(os, file, format); })) return kExitUsage;
  summary << fmt::format("strategy=benchmark n={} formula={} small_hexagons={} density={:.6g}\n", d.sensors.size(),
                         benchmark_count(cfg.layers, cfg.coverage), d.small_hexagons.size(),
                         density_benchmark(cfg.coverage, cfg.radius));
  if (d.sensors.size() != d.small_hexagons.size() * static_cast<std::size_t>(cfg.coverage)) {
    err << "internal error: benchmark did not place k sensors per small hexagon\n";
    return kExitInternal;
  }
  return kExitOk;
}

inline int run_verify(const RunConfig& cfg, const CLI::App& sub, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) {
    err << "error: cannot read sensor file '" << cfg.input << "'\n";
    return kExitUsage;
  }
  SensorFile file;
  try {
    file = read_sensors(in);
  } catch (const ParseError& e) {
    err << "error: " << cfg.input << ": " << e.what() << "\n";
    return kExitUsage;
  }

  // explicit flags win over the file's meta line
  auto pick_int = [&](const char* flag, const char* key, int fallback) {
    if (sub.count(flag) == 0) {
      const auto it = file.meta.find(key);
      if (it != file.meta.end()) return std::stoi(it->second);
    }
    return fallback;
  };
  int layers = 0;
  int target = 0;
  double radius = 0;
  try {
    layers = pick_int("--layers", "l", cfg.layers);
    target = pick_int("--coverage", "k", cfg.coverage);
    radius = cfg.radius;
    if (sub.count("--radius") == 0 && file.meta.contains("r")) radius = std::stod(file.meta.at("r"));
  } catch (const std::logic_error&) {
    err << "error: " << cfg.input << ": malformed meta line\n";
    return kExitUsage;
  }
  if (layers < 1 || target < 1 || !(radius > 0)) {
    err << "error: need layers >= 1, coverage >= 1, radius > 0\n";
    return kExitUsage;
  }

  const auto model = build_solar_model(layers, radius);
  VerifyOptions opt;
  opt.grid_step = cfg.grid_step;
  opt.seed = cfg.seed;
  opt.mc_samples = cfg.mc_samples;
  opt.fail_fast = cfg.fail_fast;
  const auto pts = file.positions();
  const auto rep = verify_coverage(model, pts, target, opt);

  const auto j = to_json(rep);
  if (!emit(cfg.output, out, err, [&](std::ostream& os) { os << j.dump(2) << "\n"; })) return kExitUsage;
  if (cfg.output != "-")
    out << fmt::format("{} min_coverage={} target={} samples={}\n", rep.pass() ? "PASS" : "FAIL", rep.min_coverage,
                       target, rep.samples);
  return rep.pass() ? kExitOk : kExitCoverageFail;
}

inline constexpr int kCompareEnumerationCap = 64;

inline int run_compare(const RunConfig& cfg, std::ostream& out) {
  const int l = cfg.layers;
  const int k = cfg.coverage;
  const double r = cfg.radius;
  const auto n = total_count(l, k);
  const auto n_ex = benchmark_count(l, k);
  const auto gap = count_gap(l, k);
  const double ratio = count_ratio(l, k);
  // exact enumeration gets expensive quickly; skip it for large patches
  const bool enumerate = l <= kCompareEnumerationCap;
  const std::size_t enumerated = enumerate ? small_hexagons_inside(build_solar_model(l, r)).size() : 0;

  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["layers"] = l;
    j["coverage"] = k;
    j["radius"] = r;
    j["proposed"] = {{"sensors", n}, {"density", density_proposed(k, r)}};
    j["benchmark"] = {{"sensors", n_ex}, {"density", density_benchmark(k, r)}};
    if (enumerate) {
      j["benchmark"]["enumerated_small_hexagons"] = enumerated;
      j["benchmark"]["enumerated_sensors"] = enumerated * static_cast<std::size_t>(k);
    } else {
      j["benchmark"]["enumerated_small_hexagons"] = nullptr;
      j["benchmark"]["enumerated_sensors"] = nullptr;
    }
    j["gap"] = gap;
    j["ratio"] = ratio;
    j["density_gain"] = density_gain(k, r);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << fmt::format("layers={} coverage={} radius={:g}\n", l, k, r);
  out << fmt::format("{:<10} {:>14} {:>14}\n", "", "proposed", "benchmark");
  out << fmt::format("{:<10} {:>14} {:>14}\n", "sensors", n, n_ex);
  out << fmt::format("{:<10} {:>14.6g} {:>14.6g}\n", "density", density_proposed(k, r), density_benchmark(k, r));
  out << fmt::format("gap={} ratio={:.6g} density_gain={:.6g}\n", gap, ratio, density_gain(k, r));
  if (enumerate)
    out << fmt::format("benchmark geometric enumeration: {} small hexagons, {} sensors\n", enumerated,
                       enumerated * static_cast<std::size_t>(k));
  else
    out << fmt::format("benchmark geometric enumeration: skipped for layers > {}\n", kCompareEnumerationCap);
  return kExitOk;
}

inline int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(cfg.output, ec);
  if (ec || !fs::is_directory(cfg.output)) {
    err << "error: cannot create output directory '" << cfg.output << "'\n";
    return kExitUsage;
  }
  for (auto fig : kAllFigures) {
    auto spec = default_sweep(fig);
    auto override_range = [&](const std::string& text, SweepRange& target) {
      if (text.empty()) return;
      target = parse_range(text);
      spec.defaults = false;
    };
    switch (fig) {
      case FigureId::fig4: override_range(cfg.radius_range, spec.range); break;
      case FigureId::fig5:
      case FigureId::fig7: override_range(cfg.coverage_range, spec.range); break;
      case FigureId::fig6: override_range(cfg.layer_range, spec.range); break;
      case FigureId::fig8:
        override_range(cfg.coverage_range, spec.range);
        override_range(cfg.layer_range, spec.secondary);
        break;
    }
    const auto table = emit_figure_table(spec);
    const auto path = (fs::path(cfg.output) / (std::string(to_string(fig)) + ".csv")).string();
    if (!emit(path, out, err, [&](std::ostream& os) { write_csv(os, table); })) return kExitUsage;
    out << "wrote " << path << " (" << table.rows() << " rows)\n";
  }
  return kExitOk;
}

}  // namespace detail

/// Entry point shared by the binary and the tests. `args[0]` is the program
/// name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  RunConfig cfg;
  CLI::App app{"hexcover: k-coverage sensor deployment on hexagonal tilings"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_shape = [&](CLI::App* sub) {
    sub->add_option("--layers,-l", cfg.layers, "solar-model layers l (central hexagon is layer 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--coverage,-k", cfg.coverage, "target coverage k")->check(CLI::PositiveNumber);
    sub->add_option("--radius,-r", cfg.radius, "sensing radius r = hexagon side (m)")->check(CLI::PositiveNumber);
  };

  auto* plan = app.add_subcommand("plan", "place sensors and write them to a file");
  add_shape(plan);
  plan->add_option("--strategy", cfg.strategy, "proposed | benchmark")
      ->check(CLI::IsMember({"proposed", "benchmark"}));
  plan->add_option("--seed", cfg.seed, "benchmark RNG seed");
  plan->add_option("--parity", cfg.parity, "vertex class used first for k=2")->check(CLI::IsMember({"even", "odd"}));
  plan->add_option("--offset", cfg.offset, "benchmark small-tiling offset dx,dy in units of r (p/q allowed)");
  plan->add_option("--output,-o", cfg.output, "sensor file path, '-' for stdout");
  plan->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  plan->add_option("--model-json", cfg.model_json, "also export the solar model as JSON to this path");

  auto* verify = app.add_subcommand("verify", "certify k-coverage of a sensor file by sampling");
  add_shape(verify);
  verify->add_option("--input,-i", cfg.input, "sensor file (CSV or JSON)")->required();
  verify->add_option("--grid-step,--grid_step", cfg.grid_step, "grid pitch in meters, 0 = r/20")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--mc-samples,--mc_samples", cfg.mc_samples, "Monte Carlo sample count");
  verify->add_option("--seed", cfg.seed, "Monte Carlo seed");
  verify->add_option("--output,-o", cfg.output, "JSON report path, '-' for stdout");
  verify->add_flag("--fail-fast", cfg.fail_fast, "stop at the first under-covered point");
  verify->footer("layers/coverage/radius default to the sensor file's meta line when not given");

  auto* compare = app.add_subcommand("compare", "closed-form comparison against the benchmark");
  add_shape(compare);
  std::string compare_format = "text";
  compare->add_option("--format", compare_format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* sweep = app.add_subcommand("sweep", "write fig4.csv .. fig8.csv");
  std::string sweep_dir = "figures";
  sweep->add_option("--output,-o", sweep_dir, "output directory");
  sweep->add_option("--radius-range", cfg.radius_range, "start:stop[:step] for r (default 1:30:1)");
  sweep->add_option("--coverage-range", cfg.coverage_range, "start:stop[:step] for k (default 1:10:1)");
  sweep->add_option("--layer-range", cfg.layer_range, "start:stop[:step] for l (default 1:10:1)");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    auto* active = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << active->help();
    return kExitUsage;
  }

  try {
    if (plan->parsed()) return detail::run_plan(cfg, out, err);
    if (verify->parsed()) return detail::run_verify(cfg, *verify, out, err);
    if (compare->parsed()) {
      cfg.format = compare_format;
      return detail::run_compare(cfg, out);
    }
    if (sweep->parsed()) {
      cfg.output = sweep_dir;
      return detail::run_sweep(cfg, out, err);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace hexcover
