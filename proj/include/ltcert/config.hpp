#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

namespace ltcert {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Run settings. Every field has a key of the same name as its command-line
/// flag (without the leading dashes).
struct RunConfig {
  double a_max_sphere = 40.0;  // a-max-sphere
  double a_max_torus = 50.0;   // a-max-torus
  double step = 0.01;          // step
  double tol = 1e-12;          // tol: series tolerance for figure data
  int n_max = 20;              // n-max: degree cutoff for empirical families
  double alpha = 0.1;          // alpha: elongated torus aspect
  double fig_a_max = 100.0;    // fig-a-max: right end of the figure grids
  double fig_step = 0.25;      // fig-step
  std::string out = ".";       // out: output directory
  std::string json;            // json: report path (empty: <out>/<command>.json)
  int threads = 1;             // threads

  bool operator==(const RunConfig&) const = default;
};

/// Sets one key from its textual value. Throws ConfigError for unknown keys
/// or unparsable values.
void apply_setting(RunConfig& config, const std::string& key, const std::string& value);

/// Flat key = value lines; '#' starts a comment; blank lines are ignored.
void apply_config_text(RunConfig& config, const std::string& text);
void apply_config_file(RunConfig& config, const std::filesystem::path& path);

/// Throws ConfigError unless every numeric setting is positive, alpha <= 1 and n-max >= 2.
void validate(const RunConfig& config);

/// key -> textual value for every setting, in a fixed order.
std::map<std::string, std::string> settings_of(const RunConfig& config);

}  // namespace ltcert
