#include "vortexlab/quaternionic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace vortexlab {

SpinorPair::SpinorPair(std::vector<cd> x_, std::vector<cd> y_)
    : x(std::move(x_)), y(std::move(y_)) {
  if (x.size() != y.size()) throw std::invalid_argument("SpinorPair: size mismatch");
}

double SpinorPair::norm_sq() const {
  double s = 0.0;
  for (const cd& z : x) s += std::norm(z);
  for (const cd& z : y) s += std::norm(z);
  return s;
}

void SpinorPair::normalize() {
  const double s = std::sqrt(norm_sq());
  if (s == 0.0) throw std::runtime_error("SpinorPair::normalize: zero pair");
  for (cd& z : x) z /= s;
  for (cd& z : y) z /= s;
}

MomentValue moment(const SpinorPair& p) {
  MomentValue m;
  double nx = 0.0, ny = 0.0;
  cd c{0.0, 0.0};
  for (size_t k = 0; k < p.x.size(); ++k) {
    nx += std::norm(p.x[k]);
    ny += std::norm(p.y[k]);
    c += p.x[k] * p.y[k];  // conjugate-summand pairing: bilinear in the coordinates
  }
  m.mu_r_im = nx - ny;
  m.mu_c = c;
  return m;
}

MomentValue moment_polarized(const SpinorPair& p, const SpinorPair& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("moment_polarized: dimension mismatch");
  MomentValue m;
  double rx = 0.0, ry = 0.0;
  cd c{0.0, 0.0};
  for (size_t k = 0; k < p.x.size(); ++k) {
    rx += (std::conj(p.x[k]) * q.x[k]).real();
    ry += (std::conj(p.y[k]) * q.y[k]).real();
    c += 0.5 * (p.x[k] * q.y[k] + q.x[k] * p.y[k]);
  }
  m.mu_r_im = rx - ry;
  m.mu_c = c;
  return m;
}

double moment_identity_check(const SpinorPair& p) {
  const cd c = moment(p).mu_c;
  // j p = (-conj(y), conj(x)); the complexified gauge action of c is
  // c.(u, v) = (-c u, c v), so c.(j p) = (c conj(y), c conj(x)).
  // <.,.> is Re(sum u conj(p))/2.
  cd acc{0.0, 0.0};
  for (size_t k = 0; k < p.x.size(); ++k) {
    acc += (c * std::conj(p.y[k])) * std::conj(p.x[k]);
    acc += (c * std::conj(p.x[k])) * std::conj(p.y[k]);
  }
  const double lhs = 0.5 * acc.real();
  return std::abs(lhs - std::norm(c));
}

namespace {
// Anti-Hermitian su(n) basis, n^2 - 1 elements: antisymmetric real pairs,
// symmetric imaginary pairs, imaginary traceless diagonals.
std::vector<cd> su_basis_element(int n, int a) {
  std::vector<cd> T(size_t(n) * n, cd(0.0, 0.0));
  const int pairs = n * (n - 1) / 2;
  if (a < pairs) {  // A_pq = e_p e_q^T - e_q e_p^T
    int idx = a, p = 0;
    while (idx >= n - 1 - p) idx -= n - 1 - p, ++p;
    const int q = p + 1 + idx;
    T[size_t(p) * n + q] = 1.0;
    T[size_t(q) * n + p] = -1.0;
  } else if (a < 2 * pairs) {  // S_pq = i(e_p e_q^T + e_q e_p^T)
    int idx = a - pairs, p = 0;
    while (idx >= n - 1 - p) idx -= n - 1 - p, ++p;
    const int q = p + 1 + idx;
    T[size_t(p) * n + q] = cd(0.0, 1.0);
    T[size_t(q) * n + p] = cd(0.0, 1.0);
  } else {  // D_p = i(e_p e_p^T - e_{p+1} e_{p+1}^T)
    const int p = a - 2 * pairs;
    T[size_t(p) * n + p] = cd(0.0, 1.0);
    T[size_t(p + 1) * n + p + 1] = cd(0.0, -1.0);
  }
  return T;
}

// su(2) basis i sigma_k (anti-Hermitian).
std::array<std::array<cd, 4>, 3> su2_basis() {
  const cd I(0.0, 1.0);
  return {{{cd(0, 0), I, I, cd(0, 0)},          // i sigma_x
           {cd(0, 0), cd(1, 0), cd(-1, 0), cd(0, 0)},  // i sigma_y
           {I, cd(0, 0), cd(0, 0), -I}}};       // i sigma_z
}
}  // namespace

std::vector<cd> PairingElement::apply(const std::vector<cd>& v) const {
  const size_t dim = size_t(2) * n;
  std::vector<cd> out(dim, cd(0.0, 0.0));
  for (size_t r = 0; r < dim; ++r)
    for (size_t c = 0; c < dim; ++c) out[r] += matrix[r * dim + c] * v[c];
  return out;
}

PairingElement find_positive_pairing(const std::vector<cd>& v, const std::vector<cd>& w) {
  if (v.size() != w.size() || v.size() % 2 != 0)
    throw std::invalid_argument("find_positive_pairing: need C^2 (x) C^n vectors");
  const int n = int(v.size() / 2);
  if (n < 2) throw std::invalid_argument("find_positive_pairing: n must be >= 2");
  double nv = 0.0, nw = 0.0;
  for (const cd& z : v) nv += std::norm(z);
  for (const cd& z : w) nw += std::norm(z);
  if (nv == 0.0 || nw == 0.0)
    throw std::invalid_argument("find_positive_pairing: zero vector");

  const auto s2 = su2_basis();
  const double tol = 1e-14 * std::sqrt(nv) * std::sqrt(nw);
  for (int k = 0; k < 3; ++k) {
    for (int a = 0; a < n * n - 1; ++a) {
      const auto T = su_basis_element(n, a);
      // Re<(sigma_k (x) T) v, w> with v indexed (spin, component)
      cd acc{0.0, 0.0};
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) {
          const cd sig = s2[k][size_t(s) * 2 + t];
          if (sig == cd(0.0, 0.0)) continue;
          for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
              const cd tt = T[size_t(p) * n + q];
              if (tt == cd(0.0, 0.0)) continue;
              acc += std::conj(w[size_t(s) * n + p]) * sig * tt * v[size_t(t) * n + q];
            }
        }
      if (std::abs(acc.real()) > tol) {
        PairingElement b;
        b.pauli_index = k;
        b.su_index = a;
        b.sign = acc.real() > 0 ? 1.0 : -1.0;
        b.n = n;
        b.matrix.assign(size_t(4) * n * n, cd(0.0, 0.0));
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t)
            for (int p = 0; p < n; ++p)
              for (int q = 0; q < n; ++q)
                b.matrix[(size_t(s) * n + p) * (2 * n) + size_t(t) * n + q] =
                    b.sign * s2[k][size_t(s) * 2 + t] * T[size_t(p) * n + q];
        return b;
      }
    }
  }
  throw std::runtime_error("pairing degenerate");
}

}  // namespace vortexlab
