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

#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "shoelace/harness.hpp"

namespace shoelace {

// Polygon files are plain text: one vertex per line as two decimal numbers
// separated by whitespace, in ring order; `#` starts a comment line. All
// reading and writing is locale-independent.

/// Parses a vertex list from text. Throws ParseError on malformed lines.
std::vector<Point> parse_polygon_text(const std::string& text);

/// Reads a polygon file. Throws ParseError when the file cannot be read or
/// parsed.
std::vector<Point> read_polygon_file(const std::filesystem::path& path);

void write_polygon_file(const std::filesystem::path& path,
                        std::span<const Point> ring);

void write_point_file(const std::filesystem::path& path, const Point& p);

/// Shortest round-trip decimal form of a double, C locale.
std::string format_double(double value);

/// CSV with header `trial,n_vertices,algorithm,mean_time_ns`.
void write_records_csv(std::ostream& out, std::span<const BenchRecord> records);

/// CSV with header `n_vertices,algorithm,grand_mean_ns,ratio_vs_extra_vertex`.
/// The ratio field is empty when no extra-vertex reference was measured.
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);

/// JSON array of divergence records with fields polygon (vertex array),
/// point, expected, got, algorithm.
std::string divergences_to_json(std::span<const Divergence> divergences);

}  // namespace shoelace
