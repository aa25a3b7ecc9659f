#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ltcert/config.hpp"
#include "ltcert/empirical.hpp"
#include "ltcert/verification.hpp"

namespace ltcert {

inline constexpr int kExitPass = 0;
inline constexpr int kExitRecordFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRuntimeError = 3;

struct Report {
  std::string command;
  std::map<std::string, std::string> config;
  RecordSet records;

  bool pass() const { return all_pass(records); }
  bool operator==(const Report&) const = default;
};

/// JSON text of a report; doubles are written in shortest round-trip form.
std::string emit_report(const Report& report);
/// Inverse of emit_report. Throws std::runtime_error on malformed input.
Report parse_report(const std::string& json_text);

/// Fixed-width table of records for the terminal.
void print_records(std::ostream& out, const RecordSet& records);

/// 17 significant digits, '.' decimal point, no locale.
std::string csv_number(double x);

RecordSet verify_sphere(const RunConfig& config);
RecordSet verify_torus(const RunConfig& config);
RecordSet verify_profile(const RunConfig& config);
RecordSet verify_empirical(const RunConfig& config);
/// target in {sphere, torus, profile, all}; all also runs the empirical checks.
RecordSet verify_target(const std::string& target, const RunConfig& config);

/// Columns a, H_S2, remainder_scaled for a = 1, 1 + fig-step, ..., fig-a-max.
std::string figure1_csv(const RunConfig& config);
/// Columns a, H_T2, R for a = fig-step, 2 fig-step, ..., a-max-torus.
std::string figure2_csv(const RunConfig& config);

/// domain in {sphere, torus, elongated}.
std::vector<LtReport> empirical_reports(const std::string& domain, const RunConfig& config);
std::string lt_reports_csv(const std::vector<LtReport>& reports);
std::string lt_reports_json(const std::vector<LtReport>& reports);

/// Entry point; args excludes the program name. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ltcert
