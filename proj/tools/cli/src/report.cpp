#include "inerton/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "inerton/cli/csv.hpp"

namespace inerton::cli {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

Check make_check(std::string name, std::string relation, double residual, double tolerance,
                 std::string notes) {
  Check c;
  c.name = std::move(name);
  c.relation = std::move(relation);
  c.residual = residual;
  c.tolerance = tolerance;
  c.passed = residual <= tolerance;
  c.notes = std::move(notes);
  return c;
}

std::string render_text(const VerificationReport& rep) {
  std::ostringstream out;
  out << "verification report\n\n";
  out << "checks\n";
  for (const Check& c : rep.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << '\n';
    out << "  relation:  " << c.relation << '\n';
    out << "  residual:  " << format_short(c.residual) << '\n';
    out << "  tolerance: " << format_short(c.tolerance) << '\n';
    if (!c.notes.empty()) out << "  notes:     " << c.notes << '\n';
  }
  out << "\ndocumented discrepancies (excluded from the overall status)\n";
  for (const Discrepancy& d : rep.discrepancies) {
    out << "NOTE " << d.name << '\n';
    out << "  relation:  " << d.relation << '\n';
    out << "  notes:     " << d.notes << '\n';
    for (const auto& [label, value] : d.profile) {
      out << "  " << label << " = " << format_short(value) << '\n';
    }
  }
  const auto passed = std::count_if(rep.checks.begin(), rep.checks.end(),
                                    [](const Check& c) { return c.passed; });
  out << "\noverall: " << (rep.passed() ? "PASS" : "FAIL") << " (" << passed << "/"
      << rep.checks.size() << " checks)\n";
  return out.str();
}

std::string render_json(const VerificationReport& rep) {
  auto number = [](double v) -> nlohmann::json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  nlohmann::ordered_json doc;
  doc["overall"] = rep.passed() ? "PASS" : "FAIL";
  doc["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : rep.checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["relation"] = c.relation;
    j["residual"] = number(c.residual);
    j["tolerance"] = number(c.tolerance);
    j["status"] = c.passed ? "PASS" : "FAIL";
    j["notes"] = c.notes;
    doc["checks"].push_back(j);
  }
  doc["discrepancies"] = nlohmann::ordered_json::array();
  for (const Discrepancy& d : rep.discrepancies) {
    nlohmann::ordered_json j;
    j["name"] = d.name;
    j["relation"] = d.relation;
    j["notes"] = d.notes;
    j["profile"] = nlohmann::ordered_json::array();
    for (const auto& [label, value] : d.profile) {
      j["profile"].push_back({{"label", label}, {"value", number(value)}});
    }
    doc["discrepancies"].push_back(j);
  }
  return doc.dump(2) + "\n";
}

std::string render(const VerificationReport& rep, ReportFormat format) {
  return format == ReportFormat::Json ? render_json(rep) : render_text(rep);
}

}  // namespace inerton::cli
