#include "vortexlab/connection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vortexlab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

int floordiv(int a, int b) {
  int q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
int imod(int a, int b) { return a - floordiv(a, b) * b; }
}  // namespace

LatticeConnection::LatticeConnection(int n_, int degree_)
    : n(n_), degree(degree_), theta_x(size_t(n_) * n_, 0.0), theta_y(size_t(n_) * n_, 0.0) {}

double LatticeConnection::angle_x(int i, int j) const {
  const int qy = floordiv(j, n);
  const int ii = imod(i, n), jj = imod(j, n);
  // crossing the y-seam twists x-links by the transition t(x) = e^{-2 pi i d x}
  return theta_x[size_t(ii) * n + jj] + kTwoPi * degree * qy / n;
}

double LatticeConnection::angle_y(int i, int j) const {
  const int ii = imod(i, n), jj = imod(j, n);
  return theta_y[size_t(ii) * n + jj];
}

cd LatticeConnection::link_x(int i, int j) const { return std::polar(1.0, angle_x(i, j)); }
cd LatticeConnection::link_y(int i, int j) const { return std::polar(1.0, angle_y(i, j)); }

double LatticeConnection::plaquette_angle(int i, int j) const {
  return angle_x(i, j) + angle_y(i + 1, j) - angle_x(i, j + 1) - angle_y(i, j);
}

bool LatticeConnection::row_invariant(double tol) const {
  for (int j = 0; j < n; ++j)
    for (int i = 1; i < n; ++i) {
      if (std::abs(theta_x[size_t(i) * n + j] - theta_x[j]) > tol) return false;
      if (std::abs(theta_y[size_t(i) * n + j] - theta_y[j]) > tol) return false;
    }
  return true;
}

LatticeConnection base_connection(const TorusGrid& grid, int d) {
  const int n = grid.n();
  LatticeConnection c(n, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      c.theta_x[size_t(i) * n + j] = kTwoPi * d * j / (double(n) * n);
  return c;
}

LatticeConnection base_connection_with_class(const TorusGrid& grid, int d,
                                             std::array<double, 2> cls) {
  LatticeConnection c = base_connection(grid, d);
  const int n = c.n;
  const double ax = kTwoPi * cls[0] / n, ay = kTwoPi * cls[1] / n;
  for (auto& t : c.theta_x) t += ax;
  for (auto& t : c.theta_y) t += ay;
  return c;
}

double flux_raw(const LatticeConnection& conn) {
  // Kahan-summed plaquette angles; exact telescoping leaves -2 pi d.
  double s = 0.0, comp = 0.0;
  for (int i = 0; i < conn.n; ++i)
    for (int j = 0; j < conn.n; ++j) {
      const double x = conn.plaquette_angle(i, j);
      const double y = x - comp, t = s + y;
      comp = (t - s) - y;
      s = t;
    }
  return s / (-kTwoPi);
}

double flux_deviation(const LatticeConnection& conn) {
  const double raw = flux_raw(conn);
  return std::abs(raw - std::round(raw));
}

int flux(const LatticeConnection& conn) {
  const double raw = flux_raw(conn);
  const double dev = std::abs(raw - std::round(raw));
  if (dev > 1e-8) throw std::runtime_error("non-quantized flux");
  return int(std::lround(raw));
}

LatticeConnection compose(const LatticeConnection& a, const LatticeConnection& b) {
  if (a.n != b.n) throw std::invalid_argument("compose: grid mismatch");
  LatticeConnection c(a.n, a.degree + b.degree);
  for (size_t k = 0; k < a.theta_x.size(); ++k) {
    c.theta_x[k] = a.theta_x[k] + b.theta_x[k];
    c.theta_y[k] = a.theta_y[k] + b.theta_y[k];
  }
  return c;
}

LatticeConnection inverse(const LatticeConnection& a) {
  LatticeConnection c(a.n, -a.degree);
  for (size_t k = 0; k < a.theta_x.size(); ++k) {
    c.theta_x[k] = -a.theta_x[k];
    c.theta_y[k] = -a.theta_y[k];
  }
  return c;
}

LatticeConnection unitary_gauge(const LatticeConnection& conn,
                                const std::vector<double>& phi) {
  const int n = conn.n;
  if (phi.size() != size_t(n) * n) throw std::invalid_argument("unitary_gauge: size mismatch");
  LatticeConnection c = conn;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const size_t k = size_t(i) * n + j;
      c.theta_x[k] += phi[k] - phi[size_t((i + 1) % n) * n + j];
      c.theta_y[k] += phi[k] - phi[size_t(i) * n + (j + 1) % n];
    }
  return c;
}

}  // namespace vortexlab
