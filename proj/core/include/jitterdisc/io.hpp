#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "jitterdisc/point_set.hpp"

namespace jitterdisc {

/// `%.17g`-equivalent rendering; parses back to the identical binary64.
std::string format_double(double v);

/// Strict whole-token parse of a binary64 value. Throws ParseError.
double parse_double(const std::string& token, std::size_t line = 0);

/// Point-set text format: first line "d N", then N lines of d
/// space-separated coordinates with 17 significant digits.
void write_point_set(std::ostream& out, const PointSet& points);
void write_point_set(const std::filesystem::path& path, const PointSet& points);

/// Throws ParseError (with line number) on malformed input, a coordinate
/// outside [0,1), or an empty point list.
PointSet read_point_set(std::istream& in);
PointSet read_point_set(const std::filesystem::path& path);

}  // namespace jitterdisc
