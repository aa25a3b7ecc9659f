#include "ltcert/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ltcert/verification.hpp"

namespace ltcert {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) throw ConfigError("invalid value for " + key + ": '" + value + "'");
  return out;
}

}  // namespace

void apply_setting(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "a-max-sphere") c.a_max_sphere = parse_number<double>(key, value);
  else if (key == "a-max-torus") c.a_max_torus = parse_number<double>(key, value);
  else if (key == "step") c.step = parse_number<double>(key, value);
  else if (key == "tol") c.tol = parse_number<double>(key, value);
  else if (key == "n-max") c.n_max = parse_number<int>(key, value);
  else if (key == "alpha") c.alpha = parse_number<double>(key, value);
  else if (key == "fig-a-max") c.fig_a_max = parse_number<double>(key, value);
  else if (key == "fig-step") c.fig_step = parse_number<double>(key, value);
  else if (key == "out") c.out = value;
  else if (key == "json") c.json = value;
  else if (key == "threads") c.threads = parse_number<int>(key, value);
  else throw ConfigError("unknown setting '" + key + "'");
}

void apply_config_text(RunConfig& config, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(number) + ": expected key = value");
    apply_setting(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void apply_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  apply_config_text(config, text.str());
}

void validate(const RunConfig& c) {
  auto positive = [](double v, const char* key) {
    if (!(v > 0.0)) throw ConfigError(std::string(key) + " must be positive");
  };
  positive(c.a_max_sphere, "a-max-sphere");
  positive(c.a_max_torus, "a-max-torus");
  positive(c.step, "step");
  positive(c.tol, "tol");
  positive(c.alpha, "alpha");
  positive(c.fig_a_max, "fig-a-max");
  positive(c.fig_step, "fig-step");
  if (c.alpha > 1.0) throw ConfigError("alpha must be <= 1");
  if (c.n_max < 2) throw ConfigError("n-max must be >= 2");
  if (c.threads < 1) throw ConfigError("threads must be >= 1");
  if (c.step > c.a_max_sphere || c.step > c.a_max_torus) throw ConfigError("step must not exceed a-max");
  if (c.fig_a_max < 1.0) throw ConfigError("fig-a-max must be >= 1");
}

std::map<std::string, std::string> settings_of(const RunConfig& c) {
  return {{"a-max-sphere", format_number(c.a_max_sphere)},
          {"a-max-torus", format_number(c.a_max_torus)},
          {"step", format_number(c.step)},
          {"tol", format_number(c.tol)},
          {"n-max", std::to_string(c.n_max)},
          {"alpha", format_number(c.alpha)},
          {"fig-a-max", format_number(c.fig_a_max)},
          {"fig-step", format_number(c.fig_step)},
          {"out", c.out},
          {"json", c.json},
          {"threads", std::to_string(c.threads)}};
}

}  // namespace ltcert
