#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ltcert/config.hpp"

using namespace ltcert;

TEST_CASE("defaults are valid") {
  const RunConfig c;
  CHECK_NOTHROW(validate(c));
  CHECK(c.a_max_sphere == 40.0);
  CHECK(c.a_max_torus == 50.0);
  CHECK(c.step == 0.01);
  CHECK(c.n_max == 20);
  CHECK(c.threads == 1);
}

TEST_CASE("config text parsing") {
  RunConfig c;
  apply_config_text(c, "# settings\n\n  step = 0.05  \nn-max=8 # inline comment\nout = results dir\nthreads = 4\n");
  CHECK(c.step == 0.05);
  CHECK(c.n_max == 8);
  CHECK(c.out == "results dir");
  CHECK(c.threads == 4);
  CHECK(c.a_max_sphere == 40.0);
}

TEST_CASE("config errors") {
  RunConfig c;
  CHECK_THROWS_AS(apply_config_text(c, "step 0.1\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(c, "colour = red\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(c, "step = fast\n"), ConfigError);
  CHECK_THROWS_AS(apply_config_text(c, "n-max = 3.5\n"), ConfigError);
  CHECK_THROWS_AS(apply_setting(c, "step", "0.1x"), ConfigError);
  CHECK_THROWS_AS(apply_config_file(c, "/nonexistent/ltcert.conf"), ConfigError);
}

TEST_CASE("validation") {
  auto invalid = [](auto mutate) {
    RunConfig c;
    mutate(c);
    CHECK_THROWS_AS(validate(c), ConfigError);
  };
  invalid([](RunConfig& c) { c.step = 0.0; });
  invalid([](RunConfig& c) { c.alpha = 1.5; });
  invalid([](RunConfig& c) { c.alpha = -0.1; });
  invalid([](RunConfig& c) { c.n_max = 1; });
  invalid([](RunConfig& c) { c.threads = 0; });
  invalid([](RunConfig& c) { c.step = 60.0; });
  invalid([](RunConfig& c) { c.fig_a_max = 0.5; });
  invalid([](RunConfig& c) { c.tol = -1.0; });
}

TEST_CASE("property: settings round-trip through config text") {
  RunConfig c;
  c.a_max_sphere = 12.5;
  c.a_max_torus = 17.0;
  c.step = 0.125;
  c.tol = 3e-11;
  c.n_max = 6;
  c.alpha = 0.2;
  c.fig_a_max = 33.0;
  c.fig_step = 0.5;
  c.out = "/tmp/x";
  c.json = "/tmp/x/r.json";
  c.threads = 2;
  std::string text;
  for (const auto& [k, v] : settings_of(c)) text += k + " = " + v + "\n";
  RunConfig back;
  apply_config_text(back, text);
  CHECK(back == c);

  const auto path = std::filesystem::temp_directory_path() / "ltcert_config_roundtrip.conf";
  std::ofstream(path) << text;
  RunConfig from_file;
  apply_config_file(from_file, path);
  CHECK(from_file == c);
  std::filesystem::remove(path);
}
