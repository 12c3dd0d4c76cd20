#include "vortexlab/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vortexlab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Reduce w to rw + (kx + i ky) with rw in [-1/2, 1/2)^2.
void reduce(double wx, double wy, double& rx, double& ry, int& kx, int& ky) {
  kx = int(std::floor(wx + 0.5));
  ky = int(std::floor(wy + 0.5));
  rx = wx - kx;
  ry = wy - ky;
}

// Unitary-gauge degree-1 base section with zero at the origin:
// u0(z) = exp(-pi y^2 - i pi x - i pi y) theta1(z).
// Exact wrap: u0(z + 1) = u0(z), u0(z + i) = exp(-2 pi i x) u0(z).
cd u0(double rx, double ry, int truncation) {
  const cd th = jacobi_theta1(cd(rx, ry), truncation);
  return std::exp(cd(-kPi * ry * ry, -kPi * (rx + ry))) * th;
}
}  // namespace

cd jacobi_theta1(cd z, int truncation) {
  // theta1(z | tau = i) = 2 sum_{k>=0} (-1)^k e^{-pi (k+1/2)^2} sin((2k+1) pi z)
  cd s{0.0, 0.0};
  double sign = 1.0;
  for (int k = 0; k < truncation; ++k) {
    const double a = 2.0 * sign * std::exp(-kPi * (k + 0.5) * (k + 0.5));
    s += a * std::sin((2.0 * k + 1.0) * kPi * z);
    sign = -sign;
  }
  return s;
}

std::pair<TwistedField, LatticeConnection> theta_section(const TorusGrid& grid,
                                                         const ThetaSpec& spec) {
  const int n = grid.n();
  const int m = spec.degree;
  if (spec.truncation < 6) throw std::invalid_argument("theta_section: truncation must be >= 6");
  if (m < 1) throw std::invalid_argument("theta_section: degree must be positive");
  if (int(spec.zero_points.size()) != m)
    throw std::invalid_argument("theta_section: zero count must equal the degree");
  const double h = grid.spacing();
  for (size_t a = 0; a < spec.zero_points.size(); ++a)
    for (size_t b = a + 1; b < spec.zero_points.size(); ++b) {
      double dx = std::abs(spec.zero_points[a][0] - spec.zero_points[b][0]);
      double dy = std::abs(spec.zero_points[a][1] - spec.zero_points[b][1]);
      dx = std::min(dx, 1.0 - dx);
      dy = std::min(dy, 1.0 - dy);
      if (std::hypot(dx, dy) < h)
        throw std::invalid_argument(
            "theta_section: zero points coincide within one grid spacing "
            "(multiplicity not supported on the grid)");
    }

  TwistedField field(n, m);
  for (int i = 0; i < n; ++i) {
    const double x = double(i) / n;
    for (int j = 0; j < n; ++j) {
      const double y = double(j) / n;
      cd val{1.0, 0.0};
      for (const auto& p : spec.zero_points) {
        double rx, ry;
        int kx, ky;
        reduce(x - p[0], y - p[1], rx, ry, kx, ky);
        cd factor = u0(rx, ry, spec.truncation);
        // undo the reduction: per unit of +i crossing, u0 picks e^{-2 pi i rx}
        if (ky != 0) factor *= std::polar(1.0, -kTwoPi * ky * rx);
        // the per-zero Wilson correction e^{-2 pi i p_x y} keeps the wrap
        // rule of the product at exp(-2 pi i m x)
        factor *= std::polar(1.0, -kTwoPi * p[0] * y);
        val *= factor;
      }
      field(i, j) = val;
    }
  }

  // Compatible constant-curvature connection: per zero p the continuum
  // potential is a1 = pi + 2 pi (y - p_y), a2 = pi + 2 pi p_x; edge angles
  // are the exact edge integrals (a constant along each edge here).
  LatticeConnection conn(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double y = double(j) / n;
      double ax = 0.0, ay = 0.0;
      for (const auto& p : spec.zero_points) {
        ax += kPi + kTwoPi * (y - p[1]);
        ay += kPi + kTwoPi * p[0];
      }
      conn.theta_x[size_t(i) * n + j] = ax / n;
      conn.theta_y[size_t(i) * n + j] = ay / n;
    }
  return {std::move(field), std::move(conn)};
}

}  // namespace vortexlab
