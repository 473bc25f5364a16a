#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

#include "jitterdisc/errors.hpp"
#include "jitterdisc/io.hpp"

namespace jitterdisc {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

double parse_double(const std::string& token, std::size_t line) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) throw ParseError("invalid number '" + token + "'", line);
  return v;
}

void write_point_set(std::ostream& out, const PointSet& points) {
  const int d = points.dim();
  out << d << ' ' << points.size() << '\n';
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int a = 0; a < d; ++a) {
      if (a > 0) out << ' ';
      out << format_double(points.coord(i, a));
    }
    out << '\n';
  }
}

void write_point_set(const std::filesystem::path& path, const PointSet& points) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_point_set(out, points);
}

PointSet read_point_set(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("empty point-set file", 1);

  long long d = 0;
  long long n = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> d >> n) || (header >> extra)) throw ParseError("header must be 'd N'", lineno);
  }
  if (d < 1) throw ParseError("dimension must be >= 1", lineno);
  if (n < 1) throw ParseError("point list is empty (N must be >= 1)", lineno);

  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(d * n));
  for (long long i = 0; i < n; ++i) {
    if (!next_line()) throw ParseError("expected " + std::to_string(n) + " points, found " + std::to_string(i), lineno + 1);
    std::istringstream row(line);
    std::string tok;
    long long count = 0;
    while (row >> tok) {
      if (count == d) throw ParseError("too many coordinates (expected " + std::to_string(d) + ")", lineno);
      const double v = parse_double(tok, lineno);
      if (!(v >= 0.0 && v < 1.0)) {
        throw ParseError("coordinate " + std::to_string(count + 1) + " = " + tok + " outside [0,1): must be < 1",
                         lineno);
      }
      coords.push_back(v);
      ++count;
    }
    if (count != d) throw ParseError("expected " + std::to_string(d) + " coordinates, got " + std::to_string(count), lineno);
  }
  if (next_line()) throw ParseError("trailing data after " + std::to_string(n) + " points", lineno);
  return PointSet(static_cast<int>(d), std::move(coords));
}

PointSet read_point_set(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_point_set(in);
}

}  // namespace jitterdisc
