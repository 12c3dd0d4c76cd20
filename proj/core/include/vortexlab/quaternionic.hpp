#pragma once

#include <complex>
#include <vector>

namespace vortexlab {

using cd = std::complex<double>;

/// Point of M = H (x) C^n in the splitting M = C^n (+) conj(C^n).
struct SpinorPair {
  std::vector<cd> x;
  std::vector<cd> y;

  SpinorPair() = default;
  SpinorPair(std::vector<cd> x_, std::vector<cd> y_);

  size_t dim() const { return x.size(); }
  double norm_sq() const;
  void normalize();
};

/// Values of the real and complex moment maps. mu_r is purely imaginary and
/// stored as its imaginary part; mu_c lives in the complexified u(1).
struct MomentValue {
  double mu_r_im = 0.0;  // mu_r = i * mu_r_im
  cd mu_c{0.0, 0.0};
};

/// mu_r = i(|x|^2 - |y|^2); mu_c(x, y) = y^* x, the pairing of y in the
/// conjugate summand against x. On stored coordinates the pairing is
/// bilinear, sum_k x_k y_k, which is what makes it invariant under the
/// unit-scalar gauge action (x, y) -> (u x, conj(u) y).
MomentValue moment(const SpinorPair& p);

/// Real-bilinear symmetric polarization with moment_polarized(p, p) == moment(p).
MomentValue moment_polarized(const SpinorPair& p, const SpinorPair& q);

/// Deviation |<mu_c(p) j p, p> - |mu_c(p)|^2| of the moment identity, where
/// j acts by (x, y) -> (-conj(y), conj(x)), mu_c acts through the
/// complexified gauge representation c.(u, v) = (-c u, c v), and <.,.> is
/// the half-normalized Euclidean pairing Re(.)/2. Always <= 1e-12 norm^4.
double moment_identity_check(const SpinorPair& p);

/// One su(2) (x) su(n) basis element sigma_k (x) T_a, possibly sign-flipped;
/// realized as a dense 2n x 2n matrix acting on C^2 (x) C^n.
struct PairingElement {
  int pauli_index = 0;  // 0..2
  int su_index = 0;     // 0..n^2-2
  double sign = 1.0;
  int n = 0;
  std::vector<cd> matrix;  // row-major 2n x 2n

  std::vector<cd> apply(const std::vector<cd>& v) const;
};

/// Finds b in su(2) (x) su(n) with Re<b v, w> > 0 by scanning the
/// 3(n^2 - 1)-element product basis and flipping signs. Throws
/// "pairing degenerate" only when every basis pairing is below
/// 1e-14 |v| |w| and rejects v = 0 or w = 0 up front.
PairingElement find_positive_pairing(const std::vector<cd>& v,
                                     const std::vector<cd>& w);

}  // namespace vortexlab
