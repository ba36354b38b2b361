#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fpt/bijections.hpp"
#include "fpt/partition.hpp"
#include "fpt/triangle.hpp"

namespace fpt {

/// Paper-style rendering: comma-separated parts, runs of four or more
/// collapsed to v^m (e.g. "2,2,1^6"). Empty partition renders as "()".
std::string compact_form(const Partition& p);

/// Fully expanded comma-separated parts; "()" when empty.
std::string canonical_form(const Partition& p);

/// Figure-style table with blanks below d^2. Columns limited to d_limit
/// when 0 < d_limit <= d_max.
std::string render_triangle_table(const FixedPointTriangle& t, int d_limit = 0);

/// Header n,d,f; zeros materialized for every (n,d) with d <= d_max.
std::string render_triangle_csv(const FixedPointTriangle& t, int d_limit = 0);

/// Array of {"n":..,"d":..,"f":..} records, one per CSV row.
std::string render_triangle_json(const FixedPointTriangle& t, int d_limit = 0);

/// Parses render_triangle_csv output back into (n,d) -> f.
std::map<std::pair<int, int>, BigInt> parse_triangle_csv(const std::string& text);

/// OEIS-b-file-like "index value" lines.
std::string render_sequence_lines(const SequenceReport& r);
std::string render_sequence_csv(const SequenceReport& r);
std::string render_sequence_json(const SequenceReport& r);

/// Two-row pairing table in the papers' style, plus csv/json records with
/// the case labels.
std::string render_traces_table(const std::vector<BijectionTrace>& traces);
std::string render_traces_csv(const std::vector<BijectionTrace>& traces);
std::string render_traces_json(const std::vector<BijectionTrace>& traces);

}  // namespace fpt
