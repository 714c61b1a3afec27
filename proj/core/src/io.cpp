// Copyright 2026 The Shoelace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "shoelace/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace shoelace {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

// Parses one double from the front of `s`, advancing past it.
bool take_double(std::string_view& s, double& out) {
  s = trim(s);
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc{} || ptr == begin) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - begin));
  return true;
}

}  // namespace

std::vector<Point> parse_polygon_text(const std::string& text) {
  std::vector<Point> ring;
  std::size_t line_no = 0;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest = trim(line);
    if (rest.empty() || rest.front() == '#') continue;
    Point p;
    if (!take_double(rest, p.x) || !take_double(rest, p.y) ||
        !trim(rest).empty() || !std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ParseError("bad vertex on line " + std::to_string(line_no) +
                       ": expected two decimal numbers");
    }
    ring.push_back(p);
  }
  return ring;
}

std::vector<Point> read_polygon_file(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) {
    throw ParseError("cannot open polygon file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_polygon_text(buffer.str());
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

void write_polygon_file(const std::filesystem::path& path,
                        std::span<const Point> ring) {
  std::ofstream file(path);
  if (!file) {
    throw ParseError("cannot write polygon file: " + path.string());
  }
  for (const Point& p : ring) {
    file << format_double(p.x) << ' ' << format_double(p.y) << '\n';
  }
}

void write_point_file(const std::filesystem::path& path, const Point& p) {
  std::ofstream file(path);
  if (!file) {
    throw ParseError("cannot write point file: " + path.string());
  }
  file << format_double(p.x) << ' ' << format_double(p.y) << '\n';
}

void write_records_csv(std::ostream& out,
                       std::span<const BenchRecord> records) {
  out << "trial,n_vertices,algorithm,mean_time_ns\n";
  for (const BenchRecord& r : records) {
    out << r.trial << ',' << r.n_vertices << ',' << name(r.algorithm) << ','
        << format_double(r.mean_time_ns) << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "n_vertices,algorithm,grand_mean_ns,ratio_vs_extra_vertex\n";
  for (const SummaryRow& r : rows) {
    out << r.n_vertices << ',' << name(r.algorithm) << ','
        << format_double(r.grand_mean_ns) << ',';
    if (r.ratio_vs_extra_vertex.has_value()) {
      out << format_double(*r.ratio_vs_extra_vertex);
    }
    out << '\n';
  }
}

std::string divergences_to_json(std::span<const Divergence> divergences) {
  nlohmann::json report = nlohmann::json::array();
  for (const Divergence& d : divergences) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const Point& v : d.polygon.vertices()) {
      vertices.push_back({v.x, v.y});
    }
    report.push_back({{"polygon", std::move(vertices)},
                      {"point", {d.point.x, d.point.y}},
                      {"expected", name(d.expected)},
                      {"got", name(d.got)},
                      {"algorithm", name(d.algorithm)}});
  }
  return report.dump(2);
}

}  // namespace shoelace
