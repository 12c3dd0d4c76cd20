#pragma once

#include <string>
#include <vector>

namespace vortexlab::repro {

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string details;
  double seconds = 0.0;
};

/// Names: census-table, sign-involution, kw-manufactured, flux-quantization,
/// h0-table, hk-theta, limit-sweep, moment-identities, fueter-index.
std::vector<std::string> criterion_names();

/// Runs one named criterion ("all" runs every one, in order).
std::vector<CriterionResult> run(const std::string& name);

/// Prints one PASS/FAIL line per result; returns the process exit code.
int report(const std::vector<CriterionResult>& results);

/// The byte-exact golden rendering of `census table`.
const char* golden_census_csv();

}  // namespace vortexlab::repro
