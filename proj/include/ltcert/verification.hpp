#pragma once

#include <string>
#include <vector>

namespace ltcert {

/// One certified claim. `pass` is always `margin > 0`.
struct VerificationRecord {
  std::string name;
  std::string claim;
  double computed = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  bool pass = false;
  std::string notes;

  bool operator==(const VerificationRecord&) const = default;
};

using RecordSet = std::vector<VerificationRecord>;

VerificationRecord make_record(std::string name, std::string claim, double computed, double bound,
                               double margin, std::string notes = {});

/// Record for "computed < bound" with margin bound - computed.
VerificationRecord upper_bound_record(std::string name, std::string claim, double computed,
                                      double bound, std::string notes = {});

/// Record for "|computed - reference| <= tolerance".
VerificationRecord agreement_record(std::string name, std::string claim, double computed,
                                    double reference, double tolerance, std::string notes = {});

/// Shortest round-trip decimal form of x, locale independent.
std::string format_number(double x);

bool all_pass(const RecordSet& records);

void append(RecordSet& into, const RecordSet& more);

}  // namespace ltcert
