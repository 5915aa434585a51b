#pragma once

// Sensor file formats.
//
// CSV:
//   # meta: strategy=proposed r=1 k=2 l=1 seed=0 parity=even version=0.1.0
//   x,y,provenance,hexagon,strategy
//   0,0,center,0,proposed
//   ...
// JSON mirrors it: {"meta": {...}, "sensors": [{"x":..,"y":..,...}, ...]}.

#include "hexcover/benchmark.hpp"
#include "hexcover/deployment.hpp"
#include "hexcover/tiling.hpp"
#include "hexcover/verifier.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace hexcover {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kSensorCsvHeader = "x,y,provenance,hexagon,strategy";

enum class Format { csv, json };

inline Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw std::invalid_argument("format must be 'csv' or 'json'");
}

struct SensorRow {
  Point2 position;
  std::string provenance;
  std::string hexagon;  // index, or "shared" for vertex sensors
  std::string strategy;
};

struct SensorFile {
  std::map<std::string, std::string> meta;
  std::vector<SensorRow> rows;

  [[nodiscard]] std::vector<Point2> positions() const {
    std::vector<Point2> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(r.position);
    return out;
  }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline std::string format_coordinate(double v) {
  if (v == 0.0) v = 0.0;  // fold -0
  return fmt::format("{:.15g}", v);
}

inline SensorFile to_sensor_file(const Deployment& d) {
  SensorFile f;
  f.meta = {{"strategy", std::string(to_string(d.strategy))},
            {"r", fmt::format("{:g}", d.r)},
            {"k", std::to_string(d.k)},
            {"l", std::to_string(d.layers)},
            {"seed", "0"},
            {"parity", std::string(to_string(d.first_class))},
            {"version", std::string(kVersion)}};
  for (const auto& s : d.sensors) {
    const auto& p = s.provenance;
    const std::string hex = p.kind == ProvenanceKind::vertex ? "shared" : std::to_string(p.hexagon);
    f.rows.push_back({s.position.to_point(d.r), p.tag(), hex, "proposed"});
  }
  return f;
}

inline SensorFile to_sensor_file(const BenchmarkDeployment& d) {
  SensorFile f;
  f.meta = {{"strategy", "benchmark"},
            {"r", fmt::format("{:g}", d.r)},
            {"k", std::to_string(d.k)},
            {"l", std::to_string(d.layers)},
            {"seed", std::to_string(d.seed)},
            {"offset", format_coordinate(d.offset.to_point(1.0).x) + "," + format_coordinate(d.offset.to_point(1.0).y)},
            {"version", std::string(kVersion)}};
  for (std::size_t i = 0; i < d.sensors.size(); ++i)
    f.rows.push_back({d.sensors[i], "random", std::to_string(d.owner[i]), "benchmark"});
  return f;
}

// meta keys in a fixed order so output is byte-stable
inline std::string meta_line(const std::map<std::string, std::string>& meta) {
  static constexpr std::string_view order[] = {"strategy", "r", "k", "l", "seed", "parity", "offset", "version"};
  std::string out = "# meta:";
  for (auto key : order) {
    const auto it = meta.find(std::string(key));
    if (it != meta.end()) out += " " + it->first + "=" + it->second;
  }
  for (const auto& [k, v] : meta) {
    bool known = false;
    for (auto key : order) known = known || key == k;
    if (!known) out += " " + k + "=" + v;
  }
  return out;
}

inline void write_sensor_csv(std::ostream& os, const SensorFile& f) {
  os << meta_line(f.meta) << "\n" << kSensorCsvHeader << "\n";
  for (const auto& r : f.rows)
    os << format_coordinate(r.position.x) << "," << format_coordinate(r.position.y) << "," << r.provenance << ","
       << r.hexagon << "," << r.strategy << "\n";
}

inline void write_sensor_json(std::ostream& os, const SensorFile& f) {
  nlohmann::ordered_json j;
  j["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : f.meta) j["meta"][k] = v;
  j["sensors"] = nlohmann::ordered_json::array();
  for (const auto& r : f.rows)
    j["sensors"].push_back({{"x", r.position.x},
                            {"y", r.position.y},
                            {"provenance", r.provenance},
                            {"hexagon", r.hexagon},
                            {"strategy", r.strategy}});
  os << j.dump(2) << "\n";
}

inline void write_sensors(std::ostream& os, const SensorFile& f, Format fmt) {
  if (fmt == Format::csv)
    write_sensor_csv(os, f);
  else
    write_sensor_json(os, f);
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == s.npos ? s.npos : next - pos));
    if (next == s.npos) break;
    pos = next + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline double parse_double(std::string_view s, std::size_t line, const char* field) {
  s = trim(s);
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ParseError(line, std::string("invalid ") + field + " value '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

inline SensorFile read_sensor_csv(std::istream& is) {
  SensorFile f;
  std::string raw;
  std::size_t line = 0;
  bool header_seen = false;
  while (std::getline(is, raw)) {
    ++line;
    const std::string_view s = detail::trim(raw);
    if (s.empty()) continue;
    if (s.front() == '#') {
      constexpr std::string_view tag = "# meta:";
      if (s.substr(0, tag.size()) == tag) {
        std::istringstream kv{std::string(s.substr(tag.size()))};
        std::string tok;
        while (kv >> tok) {
          const auto eq = tok.find('=');
          if (eq == std::string::npos || eq == 0) throw ParseError(line, "malformed meta entry '" + tok + "'");
          f.meta[tok.substr(0, eq)] = tok.substr(eq + 1);
        }
      }
      continue;
    }
    if (!header_seen) {
      if (s != kSensorCsvHeader)
        throw ParseError(line, "expected header '" + std::string(kSensorCsvHeader) + "'");
      header_seen = true;
      continue;
    }
    const auto cells = detail::split(s, ',');
    if (cells.size() != 5) throw ParseError(line, "expected 5 fields, got " + std::to_string(cells.size()));
    f.rows.push_back({Point2{detail::parse_double(cells[0], line, "x"), detail::parse_double(cells[1], line, "y")},
                      std::string(detail::trim(cells[2])), std::string(detail::trim(cells[3])),
                      std::string(detail::trim(cells[4]))});
  }
  return f;
}

inline SensorFile read_sensor_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; line numbers come from the message
    throw ParseError(0, e.what());
  }
  SensorFile f;
  try {
    if (j.contains("meta"))
      for (const auto& [k, v] : j.at("meta").items()) f.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();
    std::size_t i = 0;
    for (const auto& s : j.at("sensors")) {
      ++i;
      if (!s.at("x").is_number() || !s.at("y").is_number()) throw ParseError(i, "sensor coordinates must be numbers");
      f.rows.push_back({Point2{s.at("x").get<double>(), s.at("y").get<double>()}, s.value("provenance", ""),
                        s.value("hexagon", ""), s.value("strategy", "")});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, e.what());
  }
  return f;
}

/// Reads either format; JSON is detected by a leading '{'.
inline SensorFile read_sensors(std::istream& is) {
  std::stringstream buf;
  buf << is.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream in(text);
  if (first != std::string::npos && text[first] == '{') return read_sensor_json(in);
  return read_sensor_csv(in);
}

inline nlohmann::ordered_json to_json(const CoverageReport& rep) {
  nlohmann::ordered_json j;
  j["pass"] = rep.pass();
  j["target_k"] = rep.target_k;
  j["min_coverage"] = rep.min_coverage;
  j["samples"] = rep.samples;
  j["structured_samples"] = rep.structured_samples;
  j["grid_samples"] = rep.grid_samples;
  j["mc_samples"] = rep.mc_samples;
  j["grid_step"] = rep.grid_step;
  j["region"] = rep.region;
  j["stopped_early"] = rep.stopped_early;
  j["failing_count"] = rep.failing_count;
  j["failing_points"] = nlohmann::ordered_json::array();
  for (const auto& p : rep.failing_points) j["failing_points"].push_back({p.x, p.y});
  j["coverage_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [c, n] : rep.coverage_histogram) j["coverage_histogram"][std::to_string(c)] = n;
  return j;
}

inline nlohmann::ordered_json to_json(const SolarModel& m) {
  nlohmann::ordered_json j;
  j["layers"] = m.layers;
  j["side"] = m.side;
  j["hexagons"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.hexagons.size(); ++i) {
    const auto c = m.center_of(i);
    j["hexagons"].push_back({{"index", i},
                             {"layer", m.layer_of[i]},
                             {"axial", {m.axial[i].q, m.axial[i].t}},
                             {"center", {c.x, c.y}}});
  }
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& [pos, rec] : m.vertex_registry) {
    const auto p = pos.to_point(m.side);
    j["vertices"].push_back({{"position", {p.x, p.y}},
                             {"class", std::string(to_string(rec.parity_class))},
                             {"hexagons", rec.incident_hexagons}});
  }
  return j;
}

}  // namespace hexcover
