#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "generators.hpp"
#include "ltcert/cli.hpp"

using namespace ltcert;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ltcert_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("csv_number") {
  CHECK(csv_number(0.1) == "0.10000000000000001");
  CHECK(std::stod(csv_number(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(csv_number(2.0) == "2");
}

TEST_CASE("property: JSON reports round-trip") {
  Gen g(91);
  for (int trial = 0; trial < 20; ++trial) {
    Report r;
    r.command = "verify trial " + std::to_string(trial);
    r.config = {{"step", "0.01"}, {"out", "dir with \"quotes\""}};
    for (int i = 0; i < g.integer(0, 6); ++i) {
      VerificationRecord v;
      v.name = "record-" + std::to_string(i);
      v.claim = "x < y";
      v.computed = g.normal() * std::pow(10.0, g.integer(-300, 300));
      v.bound = g.uniform(-1.0, 1.0);
      v.margin = v.bound - v.computed;
      v.pass = g.integer(0, 1) == 1;
      v.notes = "note \\ with \n escapes";
      r.records.push_back(v);
    }
    CHECK(parse_report(emit_report(r)) == r);
  }
  Report odd{"odd", {}, {{"inf", "c", std::numeric_limits<double>::infinity(), 1.0, -1.0, false, ""}}};
  const Report back = parse_report(emit_report(odd));
  CHECK(std::isinf(back.records[0].computed));
  CHECK_THROWS_AS(parse_report("{not json"), std::runtime_error);
  CHECK_THROWS_AS(parse_report("{\"command\": 3}"), std::runtime_error);
}

TEST_CASE("exit codes for parse and configuration errors") {
  CHECK(run({}).code == kExitConfigError);
  CHECK(run({"verify"}).code == kExitConfigError);
  CHECK(run({"verify", "moon"}).code == kExitConfigError);
  CHECK(run({"frobnicate"}).code == kExitConfigError);
  CHECK(run({"verify", "profile", "--step", "-1"}).code == kExitConfigError);
  CHECK(run({"verify", "profile", "--config", "/nonexistent/file.conf"}).code == kExitConfigError);
  CHECK(run({"empirical", "sphere", "--alpha", "3"}).code == kExitConfigError);
  CHECK(run({"--help"}).code == kExitPass);
}

TEST_CASE("verify profile writes a passing report and report replays it") {
  const fs::path dir = scratch("profile");
  const Run r = run({"verify", "profile", "--out", dir.string()});
  CHECK(r.code == kExitPass);
  const fs::path json = dir / "verify_profile.json";
  REQUIRE(fs::exists(json));
  const Report rep = parse_report(slurp(json));
  CHECK(rep.pass());
  CHECK(rep.records.size() == 5);
  CHECK(rep.config.at("out") == dir.string());
  const Run replay = run({"report", json.string()});
  CHECK(replay.code == kExitPass);
  CHECK(replay.out.find("5 records, 0 failed") != std::string::npos);
}

TEST_CASE("report exit status follows the recorded verdict") {
  const fs::path dir = scratch("report");
  Report failing{"verify sphere", {}, {{"r", "c", 2.0, 1.0, -1.0, false, ""}}};
  std::ofstream(dir / "bad.json") << emit_report(failing);
  CHECK(run({"report", (dir / "bad.json").string()}).code == kExitRecordFailed);
  std::ofstream(dir / "broken.json") << "{";
  CHECK(run({"report", (dir / "broken.json").string()}).code == kExitRuntimeError);
  CHECK(run({"report", (dir / "missing.json").string()}).code == kExitRuntimeError);
}

TEST_CASE("verify torus with a short range") {
  const fs::path dir = scratch("torus");
  const Run r = run({"verify", "torus", "--a-max", "5", "--json", (dir / "t.json").string()});
  CHECK(r.code == kExitPass);
  const Report rep = parse_report(slurp(dir / "t.json"));
  CHECK(rep.config.at("a-max-torus") == "5");
  bool noted = false;
  for (const auto& rec : rep.records) noted = noted || rec.notes.find("not engaged") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("figure CSVs") {
  const fs::path dir = scratch("figures");
  REQUIRE(run({"figures", "fig1", "--a-max", "10", "--fig-step", "1", "--out", dir.string()}).code == kExitPass);
  const std::string fig1 = slurp(dir / "fig1.csv");
  CHECK(fig1.rfind("# remainder_limit=", 0) == 0);
  CHECK(fig1.find("a,H_S2,remainder_scaled") != std::string::npos);
  std::istringstream lines(fig1);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line[0] != 'a') ++rows;
  CHECK(rows == 10);
  REQUIRE(run({"figures", "fig2", "--a-max", "3", "--fig-step", "0.5", "--out", dir.string()}).code == kExitPass);
  const std::string fig2 = slurp(dir / "fig2.csv");
  CHECK(fig2.find("a,H_T2,R") != std::string::npos);
  CHECK(fig2.find("\n3,") != std::string::npos);
}

TEST_CASE("property: figure output does not depend on the thread count") {
  const fs::path one = scratch("threads1"), four = scratch("threads4");
  REQUIRE(run({"figures", "fig1", "--fig-a-max", "30", "--fig-step", "0.5", "--threads", "1", "--out", one.string()})
              .code == kExitPass);
  REQUIRE(run({"figures", "fig1", "--fig-a-max", "30", "--fig-step", "0.5", "--threads", "4", "--out", four.string()})
              .code == kExitPass);
  CHECK(slurp(one / "fig1.csv") == slurp(four / "fig1.csv"));
  RunConfig c1, c4;
  c1.a_max_sphere = c4.a_max_sphere = 5.0;
  c1.a_max_torus = c4.a_max_torus = 5.0;
  c4.threads = 4;
  CHECK(verify_sphere(c1) == verify_sphere(c4));
  CHECK(verify_torus(c1) == verify_torus(c4));
}

TEST_CASE("empirical commands") {
  const fs::path dir = scratch("empirical");
  const Run r = run({"empirical", "sphere", "--n-max", "5", "--out", dir.string(), "--json", (dir / "e.json").string()});
  CHECK(r.code == kExitPass);
  const std::string csv = slurp(dir / "empirical_sphere.csv");
  CHECK(csv.find("sphere-scalar(5)") != std::string::npos);
  CHECK(fs::exists(dir / "e.json"));
  CHECK(run({"empirical", "elongated", "--alpha", "0.25", "--out", dir.string()}).code == kExitPass);
  CHECK(run({"empirical", "torus", "--out", dir.string()}).code == kExitPass);
}

TEST_CASE("config file feeds the command line") {
  const fs::path dir = scratch("config");
  std::ofstream(dir / "run.conf") << "a-max-sphere = 4\nstep = 0.05\n";
  CHECK(run({"verify", "sphere", "--config", (dir / "run.conf").string(), "--out", dir.string()}).code == kExitPass);
  const Report rep = parse_report(slurp(dir / "verify_sphere.json"));
  CHECK(rep.config.at("a-max-sphere") == "4");
  CHECK(rep.config.at("step") == "0.05");
}
