#include <chrono>
#include <ctime>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "jitterdisc/errors.hpp"
#include "jitterdisc/harness.hpp"
#include "jitterdisc/io.hpp"

namespace jitterdisc {

namespace {

std::string opt(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_integer(const std::string& name, const std::string& text, std::size_t line) {
  std::istringstream in(text);
  T v{};
  std::string rest;
  if (text.empty() || !(in >> v) || (in >> rest)) {
    throw ParseError("column '" + name + "': invalid integer '" + text + "'", line);
  }
  return v;
}

std::optional<double> parse_optional(const std::string& text, std::size_t line) {
  if (text.empty()) return std::nullopt;
  return parse_double(text, line);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool next_data_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    return true;
  }
  return false;
}

constexpr const char* kLogHeader = "grid_index,replication,seed,disc,normalized,witness";

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records, bool deterministic) {
  if (!deterministic) out << "# generated " << utc_timestamp() << '\n';
  out << kSweepCsvHeader << '\n';
  for (const auto& r : records) {
    out << (r.m ? std::to_string(*r.m) : std::string()) << ',' << r.d << ',' << r.n << ',' << to_string(r.sampler) << ','
        << to_string(r.method) << ',' << r.replications << ',' << format_double(r.mean_disc) << ','
        << format_double(r.std_disc) << ',' << format_double(r.ci95_lo) << ',' << format_double(r.ci95_hi) << ','
        << format_double(r.mean_normalized) << ',' << opt(r.witness_mean) << ',' << opt(r.bound_lower) << ','
        << opt(r.bound_upper) << ',' << r.seed << '\n';
  }
}

void write_sweep_csv(const std::filesystem::path& path, const std::vector<SweepRecord>& records, bool deterministic) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  write_sweep_csv(out, records, deterministic);
}

std::vector<SweepRecord> read_sweep_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError("empty CSV", lineno);
  if (line != kSweepCsvHeader) throw ParseError("unexpected CSV header", lineno);

  std::vector<SweepRecord> records;
  while (next_data_line(in, line, lineno)) {
    const auto f = split_csv(line);
    if (f.size() != 15) {
      throw ParseError("expected 15 columns, found " + std::to_string(f.size()), lineno);
    }
    SweepRecord r;
    if (!f[0].empty()) r.m = parse_integer<int>("m", f[0], lineno);
    r.d = parse_integer<int>("d", f[1], lineno);
    r.n = parse_integer<std::uint64_t>("N", f[2], lineno);
    try {
      r.sampler = sampler_kind_from_string(f[3]);
      r.method = disc_method_from_string(f[4]);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno);
    }
    r.replications = parse_integer<std::size_t>("R", f[5], lineno);
    r.mean_disc = parse_double(f[6], lineno);
    r.std_disc = parse_double(f[7], lineno);
    r.ci95_lo = parse_double(f[8], lineno);
    r.ci95_hi = parse_double(f[9], lineno);
    r.mean_normalized = parse_double(f[10], lineno);
    r.witness_mean = parse_optional(f[11], lineno);
    r.bound_lower = parse_optional(f[12], lineno);
    r.bound_upper = parse_optional(f[13], lineno);
    r.seed = parse_integer<std::uint64_t>("seed", f[14], lineno);
    records.push_back(r);
  }
  return records;
}

std::vector<SweepRecord> read_sweep_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_sweep_csv(in);
}

void write_replication_log(std::ostream& out, const std::vector<ReplicationRow>& rows) {
  out << kLogHeader << '\n';
  for (const auto& r : rows) {
    out << r.grid_index << ',' << r.replication << ',' << r.seed << ',' << format_double(r.disc) << ','
        << format_double(r.normalized) << ',' << opt(r.witness) << '\n';
  }
}

std::vector<ReplicationRow> read_replication_log(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!next_data_line(in, line, lineno)) throw ParseError("empty replication log", lineno);
  if (line != kLogHeader) throw ParseError("unexpected replication log header", lineno);
  std::vector<ReplicationRow> rows;
  while (next_data_line(in, line, lineno)) {
    const auto f = split_csv(line);
    if (f.size() != 6) throw ParseError("expected 6 columns, found " + std::to_string(f.size()), lineno);
    ReplicationRow r;
    r.grid_index = parse_integer<std::size_t>("grid_index", f[0], lineno);
    r.replication = parse_integer<std::size_t>("replication", f[1], lineno);
    r.seed = parse_integer<std::uint64_t>("seed", f[2], lineno);
    r.disc = parse_double(f[3], lineno);
    r.normalized = parse_double(f[4], lineno);
    r.witness = parse_optional(f[5], lineno);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace jitterdisc
