#include "vortexlab/field.hpp"

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

cd TwistedField::at(int i, int j) const {
  const int ii = imod(i, n);
  const int qy = floordiv(j, n);
  const int jj = j - qy * n;
  cd val = v[size_t(ii) * n + jj];
  if (qy != 0 && degree != 0)
    val *= std::polar(1.0, -kTwoPi * degree * double(ii) * qy / n);
  return val;
}

double TwistedField::l2_norm() const {
  double s = 0.0;
  for (const cd& z : v) s += std::norm(z);
  return std::sqrt(s / (double(n) * n));
}

double TwistedField::linf_norm() const {
  double s = 0.0;
  for (const cd& z : v) s = std::max(s, std::abs(z));
  return s;
}

void TwistedField::normalize() {
  const double nr = l2_norm();
  if (nr == 0.0) throw std::runtime_error("normalize: zero field");
  const double s = 1.0 / nr;
  for (cd& z : v) z *= s;
}

void TwistedField::scale(cd s) {
  for (cd& z : v) z *= s;
}

bool TwistedField::is_zero(double tol) const {
  for (const cd& z : v)
    if (std::abs(z) > tol) return false;
  return true;
}

TwistedField dbar(const TorusGrid& grid, const LatticeConnection& conn,
                  const TwistedField& field) {
  if (field.degree != conn.degree)
    throw std::invalid_argument("dbar: field/connection degree mismatch");
  if (field.n != conn.n || field.n != grid.n())
    throw std::invalid_argument("dbar: grid mismatch");
  const int n = field.n;
  TwistedField out(n, field.degree);
  const double half_n = 0.5 * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // centered covariant differences twisted by link phases
      const cd dx = half_n * (conn.link_x(i, j) * field.at(i + 1, j) -
                              std::conj(conn.link_x(i - 1, j)) * field.at(i - 1, j));
      const cd dy = half_n * (conn.link_y(i, j) * field.at(i, j + 1) -
                              std::conj(conn.link_y(i, j - 1)) * field.at(i, j - 1));
      out(i, j) = 0.5 * (dx + cd(0.0, 1.0) * dy);
    }
  return out;
}

TwistedField laplacian(const TorusGrid& grid, const TwistedField& field) {
  if (field.degree != 0) throw std::invalid_argument("laplacian: field degree must be 0");
  TwistedField out(field.n, 0);
  grid.laplacian(field.v.data(), out.v.data());
  return out;
}

TwistedField operator+(const TwistedField& a, const TwistedField& b) {
  TwistedField c = a;
  for (size_t k = 0; k < c.v.size(); ++k) c.v[k] += b.v[k];
  return c;
}

TwistedField operator-(const TwistedField& a, const TwistedField& b) {
  TwistedField c = a;
  for (size_t k = 0; k < c.v.size(); ++k) c.v[k] -= b.v[k];
  return c;
}

TwistedField operator*(cd s, const TwistedField& a) {
  TwistedField c = a;
  c.scale(s);
  return c;
}

cd inner(const TwistedField& a, const TwistedField& b) {
  cd s{0.0, 0.0};
  for (size_t k = 0; k < a.v.size(); ++k) s += std::conj(a.v[k]) * b.v[k];
  return s / cd(double(a.n) * a.n, 0.0);
}

}  // namespace vortexlab
