#pragma once

#include <complex>
#include <vector>

#include "vortexlab/connection.hpp"
#include "vortexlab/grid.hpp"

namespace vortexlab {

/// Grid-sampled section of a degree-d line bundle with the quasi-periodic
/// wrap rule f(x, y+1) = exp(-2 pi i d x) f(x, y).
struct TwistedField {
  int n = 0;
  int degree = 0;
  std::vector<cd> v;  // v[i*n + j]

  TwistedField() = default;
  TwistedField(int n_, int degree_) : n(n_), degree(degree_), v(size_t(n_) * n_) {}

  bool empty() const { return v.empty(); }
  cd& operator()(int i, int j) { return v[size_t(i) * n + j]; }
  cd operator()(int i, int j) const { return v[size_t(i) * n + j]; }

  /// Wrap-aware accessor for arbitrary integer (i, j).
  cd at(int i, int j) const;

  double l2_norm() const;        // sqrt( sum |v|^2 / n^2 )
  double linf_norm() const;
  void normalize();              // L2 norm 1; throws on the zero field
  void scale(cd s);
  bool is_zero(double tol = 0.0) const;
};

/// Covariant Cauchy-Riemann operator (d/dx + i d/dy)/2 realized with
/// link-phase-twisted centered differences. Requires field.degree ==
/// conn.degree; second-order accurate, gauge covariant.
TwistedField dbar(const TorusGrid& grid, const LatticeConnection& conn,
                  const TwistedField& field);

/// Spectral Laplacian Delta = -(dxx + dyy) for strictly periodic fields.
/// Throws on nonzero degree.
TwistedField laplacian(const TorusGrid& grid, const TwistedField& field);

TwistedField operator+(const TwistedField& a, const TwistedField& b);
TwistedField operator-(const TwistedField& a, const TwistedField& b);
TwistedField operator*(cd s, const TwistedField& a);

/// L2 inner product sum conj(a) b / n^2.
cd inner(const TwistedField& a, const TwistedField& b);

}  // namespace vortexlab
