#pragma once

#include <string>
#include <utility>
#include <vector>

#include "inerton/cli/config.hpp"

namespace inerton::cli {

struct Check {
  std::string name;
  std::string relation;  ///< the identity or contract being tested
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string notes;
};

/// A measured disagreement between printed formulas. Reported, never graded.
struct Discrepancy {
  std::string name;
  std::string relation;
  std::string notes;
  std::vector<std::pair<std::string, double>> profile;
};

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<Discrepancy> discrepancies;

  /// AND over checks; discrepancies do not participate.
  bool passed() const;
};

/// passed = residual <= tolerance, with NaN failing.
Check make_check(std::string name, std::string relation, double residual, double tolerance,
                 std::string notes = {});

std::string render_text(const VerificationReport& rep);
std::string render_json(const VerificationReport& rep);
std::string render(const VerificationReport& rep, ReportFormat format);

}  // namespace inerton::cli
