#pragma once

// Text, CSV and SVG renderings used by the command-line tool.

#include "tridiag/aberth.hpp"
#include "tridiag/ellipse_fit.hpp"
#include "tridiag/fibexplore.hpp"
#include "tridiag/int_poly.hpp"
#include "tridiag/spectrum.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <span>
#include <sstream>
#include <string>

namespace tridiag {

/// Descending-degree form, e.g. "-x^7 + 6x^5 - 10x^3 + 4x".
inline std::string render_polynomial(const IntPoly& p, bool unicode = false) {
  if (p.is_zero()) return "0";
  const std::string var = unicode ? "λ" : "x";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t idx = c.size(); idx-- > 0;) {
    if (c[idx] == 0) continue;
    const bool neg = c[idx] < 0;
    const BigInt mag = abs(c[idx]);
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1 || idx == 0) out += mag.get_str();
    if (idx >= 1) out += var;
    if (idx >= 2) out += '^' + std::to_string(idx);
  }
  return out;
}

inline void write_roots_csv(std::ostream& os, const RootSet& rs) {
  os << "re,im,residual\n";
  for (std::size_t i = 0; i < rs.roots.size(); ++i) {
    os << rs.roots[i].re.to_string() << ',' << rs.roots[i].im.to_string() << ','
       << rs.residuals[i].to_string() << '\n';
  }
}

inline void write_extrema_csv(std::ostream& os, std::span<const CriticalPoint> pts) {
  os << "lambda,f_value\n";
  for (const auto& p : pts) os << p.lambda.to_string() << ',' << p.value.to_string() << '\n';
}

inline void write_eigs_csv(std::ostream& os, const EigenvalueSet& set) {
  os << "s,angle_num,angle_den,value\n";
  std::ostringstream num;
  num << std::setprecision(17);
  for (std::size_t i = 0; i < set.values.size(); ++i) {
    const auto r = set.angles[i].reduced();
    num.str("");
    num << set.values[i];
    os << set.angles[i].num << ',' << r.num << ',' << r.den << ',' << num.str() << '\n';
  }
}

inline void write_scan_csv(std::ostream& os, const ScanReport& rep) {
  os << "n,real_root_count,min_real_root,max_abs_imag,violations\n";
  for (const auto& r : rep.rows) {
    os << r.n << ',' << r.real_root_count << ',' << (r.min_real_root ? r.min_real_root->to_string() : "")
       << ',' << r.max_abs_imag.to_string() << ',';
    for (std::size_t i = 0; i < r.violations.size(); ++i) os << (i ? ";" : "") << r.violations[i];
    os << '\n';
  }
}

/// Scatter plot: one <circle> per point, equal aspect ratio, viewBox fitted
/// to the data with a 5% margin. SVG y grows downwards, so y is negated.
inline void write_scatter_svg(std::ostream& os, std::span<const Point2> pts, const std::string& title = "") {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  if (!pts.empty()) {
    xmin = xmax = pts[0].x;
    ymin = ymax = pts[0].y;
    for (const auto& p : pts) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  }
  double w = xmax - xmin;
  double h = ymax - ymin;
  const double extent = std::max({w, h, 1e-9});
  if (w <= 0) w = extent;
  if (h <= 0) h = extent;
  const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
  const double vw = 1.1 * w, vh = 1.1 * h;
  const double r = 0.01 * extent;

  std::ostringstream f;
  f << std::setprecision(10);
  f << R"(<?xml version="1.0" encoding="UTF-8"?>)" << '\n';
  const double px = 800.0;
  f << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << px << R"(" height=")" << px * vh / vw
    << R"(" viewBox=")" << cx - vw / 2 << ' ' << -cy - vh / 2 << ' ' << vw << ' ' << vh << R"(">)" << '\n';
  if (!title.empty()) f << "  <title>" << title << "</title>\n";
  f << R"(  <line x1=")" << cx - vw / 2 << R"(" y1="0" x2=")" << cx + vw / 2
    << R"(" y2="0" stroke="#bbb" stroke-width=")" << r / 4 << R"("/>)" << '\n';
  f << R"(  <line x1="0" y1=")" << -cy - vh / 2 << R"(" x2="0" y2=")" << -cy + vh / 2
    << R"(" stroke="#bbb" stroke-width=")" << r / 4 << R"("/>)" << '\n';
  for (const auto& p : pts) {
    f << R"(  <circle cx=")" << p.x << R"(" cy=")" << (0.0 - p.y) << R"(" r=")" << r << R"(" fill="#1f4e9c"/>)"
      << '\n';
  }
  f << "</svg>\n";
  os << f.str();
}

}  // namespace tridiag
