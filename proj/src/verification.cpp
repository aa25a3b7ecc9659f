#include "ltcert/verification.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <utility>

namespace ltcert {

VerificationRecord make_record(std::string name, std::string claim, double computed, double bound,
                               double margin, std::string notes) {
  VerificationRecord r;
  r.name = std::move(name);
  r.claim = std::move(claim);
  r.computed = computed;
  r.bound = bound;
  r.margin = margin;
  r.pass = margin > 0.0;
  r.notes = std::move(notes);
  return r;
}

VerificationRecord upper_bound_record(std::string name, std::string claim, double computed,
                                      double bound, std::string notes) {
  return make_record(std::move(name), std::move(claim), computed, bound, bound - computed,
                     std::move(notes));
}

VerificationRecord agreement_record(std::string name, std::string claim, double computed,
                                    double reference, double tolerance, std::string notes) {
  const double deviation = std::fabs(computed - reference);
  if (!notes.empty()) notes += "; ";
  notes += "reference " + format_number(reference) + ", tolerance " + format_number(tolerance);
  // NaN deviation yields a NaN margin, which fails
  return make_record(std::move(name), std::move(claim), computed, reference, tolerance - deviation,
                     std::move(notes));
}

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

bool all_pass(const RecordSet& records) {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
}

void append(RecordSet& into, const RecordSet& more) { into.insert(into.end(), more.begin(), more.end()); }

}  // namespace ltcert
