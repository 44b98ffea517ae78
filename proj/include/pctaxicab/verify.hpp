#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pctaxicab/oracle.hpp"

namespace pct {

struct VerifyFailure {
  std::string check;
  Int r = 0;
  std::optional<Int> c;
  std::string expected;  // closed form
  std::string actual;    // oracle
};

struct VerifyReport {
  Int r_max = 0;
  Int checks_run = 0;
  std::vector<VerifyFailure> failures;  // sorted by (check, r, c)

  bool ok() const { return failures.empty(); }
};

/// Largest radius for which the all-pairs Euclidean diameter is brute-forced.
inline constexpr Int kDiameterBruteForceMax = 9;

/// Runs every closed form against one BFS from O of radius r_max: counts,
/// per-line cross-sections and cardinalities, negative parts and their
/// recursion, tangency, and the Euclidean diameter for small radii.
/// An oracle resource error is reported as a failure rather than thrown.
VerifyReport run_verify(Int r_max, const BfsOptions& options = {});

/// {"schema":1,"r_max":..,"checks_run":..,"ok":..,"failures":[...]}
void write_report_json(std::ostream& out, const VerifyReport& report);
void write_report_text(std::ostream& out, const VerifyReport& report);

}  // namespace pct
