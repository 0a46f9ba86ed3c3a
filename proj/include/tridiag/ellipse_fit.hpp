#pragma once

#include "tridiag/errors.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace tridiag {

struct Point2 {
  double x;
  double y;
};

enum class ConicKind { Ellipse, Parabola, Hyperbola };

inline const char* to_string(ConicKind k) {
  switch (k) {
    case ConicKind::Ellipse: return "ellipse";
    case ConicKind::Parabola: return "parabola";
    case ConicKind::Hyperbola: return "hyperbola";
  }
  return "?";
}

inline constexpr double kDefaultEllipseTol = 1e-6;

/// Least-squares conic Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0 with A + C = 1.
struct EllipseFit {
  /// {A, B, C, D, E, F}
  std::array<double, 6> conic{};
  /// B^2 - 4AC
  double discriminant = 0;
  /// Root mean square Sampson distance of the points to the conic.
  double rms_residual = 0;

  ConicKind kind() const {
    if (discriminant < 0) return ConicKind::Ellipse;
    if (discriminant > 0) return ConicKind::Hyperbola;
    return ConicKind::Parabola;
  }

  /// Ellipse-shaped and fitting the points within tol.
  bool is_ellipse(double tol = kDefaultEllipseTol) const {
    return kind() == ConicKind::Ellipse && rms_residual <= tol;
  }

  double evaluate(double x, double y) const {
    const auto& [a, b, c, d, e, f] = conic;
    return a * x * x + b * x * y + c * y * y + d * x + e * y + f;
  }

  /// First-order geometric distance |Q| / |grad Q|.
  double sampson_distance(double x, double y) const {
    const auto& [a, b, c, d, e, f] = conic;
    const double gx = 2 * a * x + b * y + d;
    const double gy = b * x + 2 * c * y + e;
    const double g = std::hypot(gx, gy);
    const double q = evaluate(x, y);
    return g > 0 ? std::abs(q) / g : std::abs(q);
  }
};

/// Fits a conic under A + C = 1: substituting C = 1 - A leaves the linear
/// system A(x^2 - y^2) + Bxy + Dx + Ey + F = -y^2 in five unknowns.
inline EllipseFit ellipse_fit(std::span<const Point2> points) {
  if (points.size() < 6) throw std::invalid_argument("ellipse_fit: need at least 6 points");
  const auto rows = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd design(rows, 5);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto [x, y] = points[static_cast<std::size_t>(r)];
    design.row(r) << x * x - y * y, x * y, x, y, 1.0;
    rhs(r) = -y * y;
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-12);
  if (qr.rank() < 5) {
    throw DegenerateConfiguration("ellipse_fit: conic system has rank " + std::to_string(qr.rank()) +
                                  " < 5");
  }
  const Eigen::VectorXd sol = qr.solve(rhs);

  EllipseFit fit;
  fit.conic = {sol(0), sol(1), 1.0 - sol(0), sol(2), sol(3), sol(4)};
  fit.discriminant = fit.conic[1] * fit.conic[1] - 4 * fit.conic[0] * fit.conic[2];
  double sum = 0;
  for (const auto& p : points) {
    const double d = fit.sampson_distance(p.x, p.y);
    sum += d * d;
  }
  fit.rms_residual = std::sqrt(sum / static_cast<double>(points.size()));
  return fit;
}

}  // namespace tridiag
