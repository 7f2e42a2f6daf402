#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dcov/pointset.hpp"

namespace dcov {

// Shortest decimal rendering that round-trips to the same double
// (std::to_chars general form).
std::string fmt_double(double v);

// Strict double parse of a whole token.
double parse_double(const std::string& token);

// Splits one CSV line on commas (no quoting; the formats here never need it).
std::vector<std::string> split_csv_line(const std::string& line);

// Point set file: one point per row, d comma-separated columns; an optional
// first line "# d=<d> n=<N>". Rows must agree on the column count.
PointSet read_point_set(std::istream& in);
PointSet read_point_set_file(const std::string& path);
void write_point_set(std::ostream& out, const PointSet& p, bool header = true);
void write_point_set_file(const std::string& path, const PointSet& p, bool header = true);

}  // namespace dcov
