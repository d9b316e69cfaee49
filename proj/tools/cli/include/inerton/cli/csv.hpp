#pragma once

#include <filesystem>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "inerton/trajectory.hpp"

namespace inerton::cli {

/// 17 significant digits in scientific notation with a bare exponent:
/// 0.0000000000000000e0, 5.0000000000000000e-1, -1.2500000000000000e2.
/// Non-finite values print as nan, inf, -inf.
std::string format_double(double v);

/// Short human-readable form for reports (7 significant digits).
std::string format_short(double v);

/// Shortest round-trip form for labels: 10, 0.001, 0.125.
std::string format_compact(double v);

/// Header `t,X,Xdot,x,xdot,H_eff,L17,radical`. Diagnostics columns are taken
/// from series.diagnostics; the series must carry them.
void write_trajectory_csv(std::ostream& out, const TrajectorySeries& series);

/// Generic numeric table with the same number format.
void write_table_csv(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

/// Writes `content` to `path` in binary mode. Throws IoError on failure.
void write_file(const std::filesystem::path& path, const std::string& content);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace inerton::cli
