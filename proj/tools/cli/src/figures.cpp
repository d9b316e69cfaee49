#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "inerton/cli/scenarios.hpp"
#include "inerton/trajectory.hpp"

namespace inerton::cli {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPeriods = 4;
constexpr double kWidth = 720.0;
constexpr double kPanelHeight = 150.0;
constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 30.0;
constexpr double kGap = 40.0;

std::string fixed(double v) {
  std::array<char, 48> buf{};
  const auto res =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 2);
  std::string s(buf.data(), res.ptr);
  return s == "-0.00" ? "0.00" : s;
}

struct Panel {
  std::string label;
  std::function<double(double)> f;
  double lo;
  double hi;
};

void axes(std::ostringstream& svg, double top, const Panel& p) {
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double bottom = top + kPanelHeight;
  auto y_of = [&](double v) { return bottom - (v - p.lo) / (p.hi - p.lo) * kPanelHeight; };
  svg << "<rect x=\"" << fixed(kMarginLeft) << "\" y=\"" << fixed(top) << "\" width=\""
      << fixed(plot_w) << "\" height=\"" << fixed(kPanelHeight)
      << "\" fill=\"none\" stroke=\"#999\"/>\n";
  if (p.lo < 0.0 && p.hi > 0.0) {
    svg << "<line x1=\"" << fixed(kMarginLeft) << "\" y1=\"" << fixed(y_of(0.0)) << "\" x2=\""
        << fixed(kMarginLeft + plot_w) << "\" y2=\"" << fixed(y_of(0.0))
        << "\" stroke=\"#ccc\" stroke-dasharray=\"4 3\"/>\n";
  }
  for (int n = 1; n < kPeriods; ++n) {
    const double x = kMarginLeft + plot_w * n / kPeriods;
    svg << "<line x1=\"" << fixed(x) << "\" y1=\"" << fixed(top) << "\" x2=\"" << fixed(x)
        << "\" y2=\"" << fixed(bottom) << "\" stroke=\"#eee\"/>\n";
  }
  for (int n = 0; n <= kPeriods; ++n) {
    const double x = kMarginLeft + plot_w * n / kPeriods;
    svg << "<text x=\"" << fixed(x) << "\" y=\"" << fixed(bottom + 14.0)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << n << "T</text>\n";
  }
  svg << "<text x=\"" << fixed(kMarginLeft - 8.0) << "\" y=\"" << fixed(top + 4.0)
      << "\" font-size=\"11\" text-anchor=\"end\">" << fixed(p.hi) << "</text>\n";
  svg << "<text x=\"" << fixed(kMarginLeft - 8.0) << "\" y=\"" << fixed(bottom)
      << "\" font-size=\"11\" text-anchor=\"end\">" << fixed(p.lo) << "</text>\n";
  svg << "<text x=\"" << fixed(kMarginLeft + 6.0) << "\" y=\"" << fixed(top + 14.0)
      << "\" font-size=\"13\" font-style=\"italic\">" << p.label << "</text>\n";
}

void curve(std::ostringstream& svg, double top, double t_max, const Panel& p,
           const std::vector<double>& grid) {
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double bottom = top + kPanelHeight;
  svg << "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = kMarginLeft + grid[i] / t_max * plot_w;
    const double y = bottom - (p.f(grid[i]) - p.lo) / (p.hi - p.lo) * kPanelHeight;
    svg << (i ? " " : "") << fixed(x) << ',' << fixed(y);
  }
  svg << "\"/>\n";
}

}  // namespace

std::string trajectory_figure(const DerivedQuantities& dq, int samples_per_period) {
  const double t_max = kPeriods * dq.T;
  const std::vector<double> grid = uniform_grid(0.0, t_max, std::max(samples_per_period, 50), dq.T);
  const double X_end = particle_position(t_max, dq);
  const std::vector<Panel> panels{
      {"X'(t)", [&](double t) { return particle_velocity(t, dq); }, 0.0, dq.v0},
      {"X(t)", [&](double t) { return particle_position(t, dq); }, 0.0, X_end},
      {"x(t)", [&](double t) { return cloud_position(t, dq); }, 0.0, dq.Lambda / kPi},
      {"x'(t)", [&](double t) { return cloud_velocity(t, dq); }, -dq.c, dq.c},
  };
  const double height = kMarginTop + panels.size() * (kPanelHeight + kGap);
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth)
      << "\" height=\"" << fixed(height) << "\" viewBox=\"0 0 " << fixed(kWidth) << ' '
      << fixed(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"18\" font-size=\"14\" "
      << "text-anchor=\"middle\">particle and inerton cloud over four half-periods</text>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const double top = kMarginTop + i * (kPanelHeight + kGap);
    axes(svg, top, panels[i]);
    curve(svg, top, t_max, panels[i], grid);
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string period_schematic(const DerivedQuantities& dq, int samples_per_period) {
  const double t_max = kPeriods * dq.T;
  const std::vector<double> grid = uniform_grid(0.0, t_max, std::max(samples_per_period, 50), dq.T);
  const double X_end = particle_position(t_max, dq);
  const double amp = dq.Lambda / kPi;
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double height = 270.0;
  const double base = 180.0;
  const double arc_h = 120.0;
  auto x_of = [&](double X) { return kMarginLeft + X / X_end * plot_w; };
  auto y_of = [&](double x) { return base - x / amp * arc_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth)
      << "\" height=\"" << fixed(height) << "\" viewBox=\"0 0 " << fixed(kWidth) << ' '
      << fixed(height) << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << fixed(kWidth / 2) << "\" y=\"18\" font-size=\"14\" "
      << "text-anchor=\"middle\">cloud distance along the particle path</text>\n";
  svg << "<line x1=\"" << fixed(kMarginLeft) << "\" y1=\"" << fixed(base) << "\" x2=\""
      << fixed(kMarginLeft + plot_w) << "\" y2=\"" << fixed(base) << "\" stroke=\"black\"/>\n";
  svg << "<polyline fill=\"none\" stroke=\"#9c1f4e\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const SystemState s = analytic_state(grid[i], dq);
    svg << (i ? " " : "") << fixed(x_of(s.X)) << ',' << fixed(y_of(s.x));
  }
  svg << "\"/>\n";
  for (int n = 0; n <= kPeriods; ++n) {
    const double X = particle_position(n * dq.T, dq);
    svg << "<line x1=\"" << fixed(x_of(X)) << "\" y1=\"" << fixed(base - 6.0) << "\" x2=\""
        << fixed(x_of(X)) << "\" y2=\"" << fixed(base + 6.0) << "\" stroke=\"black\"/>\n";
    svg << "<circle cx=\"" << fixed(x_of(X)) << "\" cy=\"" << fixed(base)
        << "\" r=\"3\" fill=\"black\"/>\n";
    svg << "<text x=\"" << fixed(x_of(X)) << "\" y=\"" << fixed(base + 22.0)
        << "\" font-size=\"11\" text-anchor=\"middle\">X(" << n << "T)</text>\n";
  }
  const double ruler_y = base + 48.0;
  svg << "<line x1=\"" << fixed(x_of(0.0)) << "\" y1=\"" << fixed(ruler_y) << "\" x2=\""
      << fixed(x_of(dq.lambda)) << "\" y2=\"" << fixed(ruler_y)
      << "\" stroke=\"#1f4e9c\" stroke-width=\"2\"/>\n";
  for (double X : {0.0, dq.lambda}) {
    svg << "<line x1=\"" << fixed(x_of(X)) << "\" y1=\"" << fixed(ruler_y - 5.0) << "\" x2=\""
        << fixed(x_of(X)) << "\" y2=\"" << fixed(ruler_y + 5.0) << "\" stroke=\"#1f4e9c\"/>\n";
  }
  svg << "<text x=\"" << fixed(x_of(dq.lambda) + 8.0) << "\" y=\"" << fixed(ruler_y + 4.0)
      << "\" font-size=\"12\">lambda = v0 T = " << fixed(dq.lambda) << "</text>\n";
  const double peak_x = x_of(particle_position(0.5 * dq.T, dq));
  svg << "<line x1=\"" << fixed(peak_x) << "\" y1=\"" << fixed(base) << "\" x2=\""
      << fixed(peak_x) << "\" y2=\"" << fixed(y_of(amp))
      << "\" stroke=\"#555\" stroke-dasharray=\"3 3\"/>\n";
  svg << "<text x=\"" << fixed(peak_x + 6.0) << "\" y=\"" << fixed(y_of(amp) + 12.0)
      << "\" font-size=\"12\">Lambda/pi = " << fixed(amp) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace inerton::cli
