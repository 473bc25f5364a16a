#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "jitterdisc/errors.hpp"
#include "jitterdisc/harness.hpp"

namespace jitterdisc {

namespace {

namespace pt = boost::property_tree;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Values may carry a trailing "; comment".
std::string value_of(const pt::ptree& node) {
  std::string v = node.get_value<std::string>();
  if (const auto pos = v.find(';'); pos != std::string::npos) v = v.substr(0, pos);
  return trim(v);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T v{};
  std::string rest;
  if (!(in >> v) || (in >> rest)) throw ParseError("invalid value '" + text + "' for key '" + key + "'", 0);
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ParseError("invalid boolean '" + text + "' for key '" + key + "'", 0);
}

std::vector<GridPoint> parse_grid(const std::string& text) {
  std::vector<GridPoint> grid;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto x = item.find('x');
    if (x == std::string::npos) throw ParseError("grid entry '" + item + "' must look like PARAMxD", 0);
    GridPoint p;
    p.param = parse_number<int>("grid", trim(item.substr(0, x)));
    p.d = parse_number<int>("grid", trim(item.substr(x + 1)));
    grid.push_back(p);
  }
  if (grid.empty()) throw ParseError("grid is empty", 0);
  return grid;
}

// Line of `key` inside `section`, or of the section header when `key` is
// empty. 0 when not found.
std::size_t locate(const std::string& text, const std::string& section, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  std::string current;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (!t.empty() && t.front() == '[') {
      current = trim(t.substr(1, t.find(']') - 1));
      if (key.empty() && current == section) return lineno;
    } else if (!key.empty() && current == section && t.rfind(key, 0) == 0) {
      return lineno;
    }
  }
  return 0;
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  pt::ptree tree;
  try {
    std::istringstream stream(text);
    pt::read_ini(stream, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(e.message(), e.line());
  }

  SweepConfig cfg;
  bool have_grid = false;
  const std::set<std::string> sections{"sweep", "heuristic", "certified", "exact"};
  for (const auto& [section, body] : tree) {
    if (!sections.contains(section)) throw ParseError("unknown section [" + section + "]", locate(text, section, ""));
    for (const auto& [key, node] : body) {
      const std::string v = value_of(node);
      try {
        if (section == "sweep") {
          if (key == "sampler") cfg.sampler = sampler_kind_from_string(v);
          else if (key == "grid") { cfg.grid = parse_grid(v); have_grid = true; }
          else if (key == "replications") cfg.replications = parse_number<std::size_t>(key, v);
          else if (key == "method") cfg.method = disc_method_from_string(v);
          else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, v);
          else if (key == "output") cfg.output = v;
          else if (key == "log") cfg.replication_log = v;
          else if (key == "threads") cfg.threads = parse_number<unsigned>(key, v);
          else if (key == "deterministic") cfg.deterministic = parse_bool(key, v);
          else throw ParseError("unknown key '" + key + "'", 0);
        } else if (section == "heuristic") {
          if (key == "restarts") cfg.restarts = parse_number<int>(key, v);
          else throw ParseError("unknown key '" + key + "'", 0);
        } else if (section == "certified") {
          if (key == "grid") cfg.cover_grid = parse_number<int>(key, v);
          else if (key == "delta") cfg.cover_delta = parse_number<double>(key, v);
          else throw ParseError("unknown key '" + key + "'", 0);
        } else if (section == "exact") {
          if (key == "budget") cfg.exact_budget = parse_number<double>(key, v);
          else throw ParseError("unknown key '" + key + "'", 0);
        }
      } catch (const std::exception& e) {
        throw ParseError("[" + section + "] " + key + ": " + e.what(), locate(text, section, key));
      }
    }
  }
  if (!have_grid) throw ParseError("[sweep] grid is required", 0);
  return cfg;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path.string() + "'");
  SweepConfig cfg = parse_sweep_config(in);
  // Relative output paths are taken relative to the config file.
  const auto base = path.parent_path();
  if (!cfg.output.empty() && cfg.output.is_relative()) cfg.output = base / cfg.output;
  if (!cfg.replication_log.empty() && cfg.replication_log.is_relative()) cfg.replication_log = base / cfg.replication_log;
  return cfg;
}

}  // namespace jitterdisc
