#include "inerton/cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>

#include "inerton/errors.hpp"

namespace inerton::cli {
namespace {

std::string scientific(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::scientific, precision);
  std::string s(buf.data(), res.ptr);
  const auto e = s.find('e');
  std::string mantissa = s.substr(0, e);
  std::string exponent = s.substr(e + 1);
  bool negative = false;
  if (!exponent.empty() && (exponent[0] == '+' || exponent[0] == '-')) {
    negative = exponent[0] == '-';
    exponent.erase(0, 1);
  }
  const auto nz = exponent.find_first_not_of('0');
  exponent = nz == std::string::npos ? "0" : exponent.substr(nz);
  return mantissa + "e" + (negative && exponent != "0" ? "-" : "") + exponent;
}

}  // namespace

std::string format_double(double v) { return scientific(v, 16); }

std::string format_short(double v) { return scientific(v, 6); }

std::string format_compact(double v) {
  if (!std::isfinite(v)) return scientific(v, 0);
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

void write_trajectory_csv(std::ostream& out, const TrajectorySeries& series) {
  if (series.samples.empty()) {
    throw PreconditionError("cannot emit an empty series");
  }
  if (!series.has_diagnostics()) {
    throw PreconditionError("series must be annotated with diagnostics before emission");
  }
  out << "t,X,Xdot,x,xdot,H_eff,L17,radical\n";
  for (std::size_t i = 0; i < series.samples.size(); ++i) {
    const SystemState& s = series.samples[i];
    const Diagnostics& d = series.diagnostics[i];
    out << format_double(s.t) << ',' << format_double(s.X) << ',' << format_double(s.Xdot)
        << ',' << format_double(s.x) << ',' << format_double(s.xdot) << ','
        << format_double(d.heff) << ',' << format_double(d.l17) << ','
        << format_double(d.radical) << '\n';
  }
}

void write_table_csv(std::ostream& out, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    out << (i ? "," : "") << header[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << format_double(row[i]);
    }
    out << '\n';
  }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

}  // namespace inerton::cli
