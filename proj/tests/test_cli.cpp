#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(JITTERDISC_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("jitterdisc_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen and disc") {
  TempDir tmp;
  REQUIRE(run("--seed 5 gen --m 4 --d 2 --out " + (tmp / "p.txt")).code == 0);
  const auto exact = run("--json disc --in " + (tmp / "p.txt"));
  REQUIRE(exact.code == 0);
  const auto j = json::parse(exact.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["kind"] == "exact");
  CHECK(j["value"].get<double>() >= 0.5);
  CHECK(j["normalized"].get<double>() == doctest::Approx(j["value"].get<double>() / 16));
  CHECK(j["witness"]["corner"].size() == 2);
  CHECK(j["delta"].is_null());

  const auto cert = json::parse(run("--json disc --in " + (tmp / "p.txt") + " --method certified --grid 4").out);
  CHECK(cert["value"] == 7.0);
  CHECK(cert["kind"] == "certified-upper");

  const auto heur = json::parse(run("--json --seed 3 disc --in " + (tmp / "p.txt") + " --method heuristic").out);
  CHECK(heur["value"].get<double>() <= j["value"].get<double>() + 1e-9);

  CHECK(run("--seed 5 gen --m 4 --d 2").out == slurp(tmp.path / "p.txt"));
}

TEST_CASE("usage and validation errors exit with 1") {
  TempDir tmp;
  CHECK(run("").code == 1);
  CHECK(run("disc").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("disc --in /nonexistent/file").code == 1);
  {
    std::ofstream bad(tmp / "bad.txt");
    bad << "1 1\n1.0\n";
  }
  CHECK(run("disc --in " + (tmp / "bad.txt")).code == 1);
  CHECK(run("gen --m 1 --d 2").code == 1);
  CHECK(run("gen --sampler halfcube --dprime 3 --d 2").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("witness, bounds, maxbin") {
  TempDir tmp;
  REQUIRE(run("--seed 1 gen --m 8 --d 2 --out " + (tmp / "p.txt")).code == 0);
  const auto w = json::parse(run("--json witness --in " + (tmp / "p.txt") + " --scheme discrete").out);
  CHECK(w["scheme"] == "discrete");
  CHECK(w["per_dim_disc"].size() == 2);
  const auto c = run("--json witness --in " + (tmp / "p.txt") + " --scheme construct --r 0.5,0.5");
  CHECK(c.code == 0);
  CHECK(run("witness --in " + (tmp / "p.txt") + " --scheme construct --r 0.3,0.5").code == 1);

  const auto b = json::parse(run("--json bounds --m 808 --d 2").out);
  REQUIRE(b["bounds"].size() == 4);
  CHECK(b["bounds"][0]["formula"] == "lower_main");
  CHECK(b["bounds"][0]["applicable"] == true);

  const auto mb = run("--json maxbin --n 20 --k 404 --expect --oracle");
  CHECK(mb.code == 0);
  const auto mj = json::parse(mb.out);
  CHECK(mj["expect"]["margin"].get<double>() > 0.0);
}

TEST_CASE("property outcomes set the exit code") {
  TempDir tmp;
  REQUIRE(run("--seed 2 gen --m 8 --d 2 --out " + (tmp / "p.txt")).code == 0);
  CHECK(run("khdemo --in " + (tmp / "p.txt")).code == 0);
  CHECK(run("--seed 4 zerotest --m 4 --d 2 --reps 1000 --boxes 3").code == 0);
  {
    std::ofstream cfg(tmp / "s.ini");
    cfg << "[sweep]\ngrid = 4x2, 16x2\nreplications = 20\noutput = s.csv\n";
  }
  REQUIRE(run("--deterministic sweep --config " + (tmp / "s.ini")).code == 0);
  CHECK(run("collapse --in " + (tmp / "s.csv") + " --threshold 1000").code == 0);
  CHECK(run("collapse --in " + (tmp / "s.csv") + " --threshold 1.0000001").code == 2);
  CHECK(run("collapse --in " + (tmp / "p.txt")).code == 1);
}

TEST_CASE("sweep reruns are byte identical") {
  TempDir tmp;
  {
    std::ofstream cfg(tmp / "s.ini");
    cfg << "[sweep]\ngrid = 8x2, 4x3\nreplications = 30\nseed = 9\n";
  }
  REQUIRE(run("--deterministic --threads 1 sweep --config " + (tmp / "s.ini") + " --out " + (tmp / "a.csv")).code == 0);
  REQUIRE(run("--deterministic --threads 3 sweep --config " + (tmp / "s.ini") + " --out " + (tmp / "b.csv")).code == 0);
  REQUIRE(run("--deterministic sweep --config " + (tmp / "s.ini") + " --out " + (tmp / "c.csv")).code == 0);
  CHECK(slurp(tmp.path / "a.csv") == slurp(tmp.path / "b.csv"));
  CHECK(slurp(tmp.path / "a.csv") == slurp(tmp.path / "c.csv"));
  const std::string stamped = run("sweep --config " + (tmp / "s.ini")).out;
  CHECK(stamped.rfind("# generated ", 0) == 0);
  CHECK(run("--seed 10 --deterministic sweep --config " + (tmp / "s.ini")).out != slurp(tmp.path / "a.csv"));
}

TEST_CASE("infeasible sweep fails before computing") {
  TempDir tmp;
  {
    std::ofstream cfg(tmp / "s.ini");
    cfg << "[sweep]\ngrid = 8x2, 3x5\nreplications = 10\nmethod = exact\noutput = s.csv\n";
  }
  CHECK(run("sweep --config " + (tmp / "s.ini")).code == 1);
  CHECK_FALSE(fs::exists(tmp.path / "s.csv"));
}
