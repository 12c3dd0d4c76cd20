#pragma once

#include <array>
#include <vector>

#include "vortexlab/field.hpp"
#include "vortexlab/kazdan_warner.hpp"
#include "vortexlab/theta.hpp"

namespace vortexlab {

/// Holomorphic triple (L, alpha, beta) over the split background
/// E = M (+) M^{-1}, deg M = m. Component bundles:
///   alpha[0] in M   (x) L      (degree  m + d)
///   alpha[1] in M^-1(x) L      (degree -m + d)
///   beta [0] in M^-1(x) L^-1   (degree -m - d)
///   beta [1] in M   (x) L^-1   (degree  m - d)
/// The pairing alpha beta = alpha0 beta0 + alpha1 beta1 lands in H^0(K) = C.
struct HolomorphicTriple {
  int n = 0;
  int d = 0;  // deg L
  int m = 0;  // deg M of the background
  LatticeConnection conn;    // connection on L
  LatticeConnection conn_m;  // absorbed background connection on M
  std::array<TwistedField, 2> alpha;
  std::array<TwistedField, 2> beta;
  double holo_residual = 0.0;  // recorded construction residual constant C

  LatticeConnection alpha_connection(int k) const;
  LatticeConnection beta_connection(int k) const;
  bool alpha_zero() const;
  bool beta_zero() const;
};

/// Builds a triple from theta sections with prescribed zero divisors, one
/// list per component (empty list = zero section; a nonempty list must have
/// exactly the component degree many zeros, so that component degree >= 1).
/// Components are L2-normalized and scaled by `amplitude`. The default 2.5
/// puts the vortex core scale near t/2.5 in the concentration sweep, well
/// inside the default measurement ball at the smallest sweep t.
HolomorphicTriple theta_triple(const TorusGrid& grid, int m, int d,
                               const std::array<std::vector<std::array<double, 2>>, 2>& alpha_zeros,
                               const std::array<std::vector<std::array<double, 2>>, 2>& beta_zeros,
                               double amplitude = 2.5, int truncation = 8);

struct VortexState {
  HolomorphicTriple triple;    // gauged representative
  double tau = 0.0;
  std::array<double, 4> residuals{};  // dbar alpha, dbar beta, pairing, curvature
  std::array<double, 4> floors{};     // measured discretization floors
  double degree_identity_defect = 0.0;
  double gauge_sup = 0.0;      // sup |f| of the applied complex gauge
  KWSolution kw;
};

/// Sup-norms of the four discrete vortex residuals at (conn, alpha, beta):
/// the two holomorphicity residuals, the pairing, and
/// i*F_A + |alpha|^2 - |beta|^2 - i*eta with eta the constant form of
/// integral 2 pi tau.
std::array<double, 4> vortex_residual(const TorusGrid& grid,
                                      const HolomorphicTriple& triple, double tau);

/// Complex gauge flow by a real field f: sections scale by e^{+f}/e^{-f},
/// link angles shift by discrete (d - dbar) f edge factors built from
/// edge-midpoint spectral derivatives plus an exact curl correction, so the
/// plaquette angles shift by exactly -(1/n^2) Delta f and the flux is
/// invariant to round-off.
HolomorphicTriple complex_gauge_apply(const TorusGrid& grid,
                                      const std::vector<double>& f,
                                      const HolomorphicTriple& triple);

/// Hitchin-Kobayashi step: finds the complex gauge e^f taking the triple to
/// a solution of the vortex system at the given tau, via the Kazdan-Warner
/// equation with P = |alpha|^2, Q = |beta|^2, w = -i*(F_A - eta).
/// Verifies the integrated identity
/// |2 pi (d - tau) + |alpha'|^2_{L2} - |beta'|^2_{L2}| <= 1e-8.
/// Throws "case mismatch" when the nonvanishing precondition of the
/// sign(d - tau) case fails; propagates Kazdan-Warner errors.
VortexState hk_solve(const TorusGrid& grid, const HolomorphicTriple& triple,
                     double tau, double tol);

}  // namespace vortexlab
