#include "vortexlab/dolbeault.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <lapacke.h>

namespace vortexlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kRho = 1.0;  // overlap projection point, in (0, 2r)
constexpr double kWilsonR = 1.0;

// Dense column-major complex matrix.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<cd> a;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, cd(0, 0)) {}
  cd& at(int r, int c) { return a[size_t(c) * rows + r]; }
};

void hermitian_evd(Mat& H, std::vector<double>& w) {
  w.resize(H.rows);
  const int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, 'V', 'L', H.rows,
      reinterpret_cast<lapack_complex_double*>(H.a.data()), H.rows, w.data());
  if (info != 0) throw std::runtime_error("h0: eigensolve failed");
}

// Eigenpairs in (vl, vu]; returns the count. The operator norm of the
// Wilson-based H is below 7, so vl = -8 captures the whole negative side.
int hermitian_evd_range(Mat& H, double vl, double vu, std::vector<double>& w, Mat& Z) {
  const int n = H.rows;
  w.assign(n, 0.0);
  std::vector<int> isuppz(size_t(2) * std::max(1, n));
  int found = 0;
  const int info = LAPACKE_zheevr(
      LAPACK_COL_MAJOR, 'V', 'V', 'L', n,
      reinterpret_cast<lapack_complex_double*>(H.a.data()), n, vl, vu, 0, 0,
      0.0, &found, w.data(), reinterpret_cast<lapack_complex_double*>(Z.a.data()),
      n, isuppz.data());
  if (info != 0) throw std::runtime_error("h0: ranged eigensolve failed");
  return found;
}

std::vector<double> singular_values(Mat& B) {
  const int k = std::min(B.rows, B.cols);
  std::vector<double> s(std::max(k, 1), 0.0);
  if (k == 0) return {};
  const int info = LAPACKE_zgesdd(
      LAPACK_COL_MAJOR, 'N', B.rows, B.cols,
      reinterpret_cast<lapack_complex_double*>(B.a.data()), B.rows, s.data(),
      nullptr, 1, nullptr, 1);
  if (info != 0) throw std::runtime_error("h0: svd failed");
  s.resize(k);
  return s;
}

struct BlockResult {
  int dim_half = 0;       // dim of one chirality sector in the block
  int n_neg = 0;          // negative eigenvalues of H_W
  std::vector<double> chi_minus_svals;  // singular values of the chi=-1 rows of W_-
  double hw_gap = 0.0;    // min |eigenvalue(H_W)|
};

// Analyzes one Hermitian block of H_W = gamma5 (D_W - rho). The basis is
// (spin, site) with the chi = +1 sector first. zero modes of positive
// chirality = nullity of the chi=-1 row block of the negative eigenspace.
BlockResult analyze_block(Mat& H) {
  BlockResult out;
  const int dim = H.rows;
  out.dim_half = dim / 2;
  int nneg = 0;
  const Mat* vecs = nullptr;
  Mat Z(0, 0);
  std::vector<double> w;
  if (dim >= 512) {
    // only the negative side feeds the kernel counts; a small positive
    // window rides along as the sign-function conditioning guard
    const double guard = 1e-10 * (4.0 + kRho);
    Z = Mat(dim, dim);
    const int found = hermitian_evd_range(H, -8.0, guard, w, Z);
    out.hw_gap = std::numeric_limits<double>::infinity();
    nneg = 0;
    for (int k = 0; k < found; ++k) {
      out.hw_gap = std::min(out.hw_gap, std::abs(w[k]));
      if (w[k] < 0.0) ++nneg;
    }
    if (nneg != found) out.hw_gap = 0.0;  // an eigenvalue inside (0, guard]
    vecs = &Z;
  } else {
    hermitian_evd(H, w);
    out.hw_gap = std::numeric_limits<double>::infinity();
    for (double x : w) out.hw_gap = std::min(out.hw_gap, std::abs(x));
    nneg = 0;
    while (nneg < dim && w[nneg] < 0.0) ++nneg;
    vecs = &H;
  }
  out.n_neg = nneg;
  if (nneg > 0) {
    Mat B(out.dim_half, nneg);
    for (int c = 0; c < nneg; ++c)
      for (int r = 0; r < out.dim_half; ++r)
        B.at(r, c) = vecs->a[size_t(c) * dim + out.dim_half + r];  // chi = -1 rows
    out.chi_minus_svals = singular_values(B);
  }
  return out;
}

// Hopping data of one component connection, reduced to a ring: the
// assembled operator couples ring site t to t+1 with y-links and carries
// x-links plus Wilson mass on the diagonal.
struct RingSpec {
  std::vector<cd> zdiag;  // u_x e^{2 pi i k/n} at each ring site
  std::vector<cd> ynext;  // u_y on the (t -> t+1) bond (periodic)
};

Mat assemble_ring(const RingSpec& ring) {
  const int L = int(ring.zdiag.size());
  Mat H(2 * L, 2 * L);
  // D_W = 1/2 g1 (Z - Z*) - r/2 (Z + Z* - 2) + 1/2 g2 (C - C^H) - r/2 (C + C^H - 2)
  // with g1 = sigma_x, g2 = sigma_y, spin blocks [up, down]; then
  // H = g5 (D_W - rho), g5 = diag(1, -1) on spin.
  auto add = [&](int sr, int sc, int tr, int tc, cd val) {
    const double g5 = (sr == 0) ? 1.0 : -1.0;
    H.at(sr * L + tr, sc * L + tc) += g5 * val;
  };
  for (int t = 0; t < L; ++t) {
    const cd z = ring.zdiag[t];
    const cd dx = 0.5 * (z - std::conj(z));  // gamma1 coefficient
    const double wx = -0.5 * kWilsonR * (2.0 * z.real() - 2.0);
    add(0, 1, t, t, dx);
    add(1, 0, t, t, dx);
    add(0, 0, t, t, cd(wx - kRho + kWilsonR, 0.0));
    add(1, 1, t, t, cd(wx - kRho + kWilsonR, 0.0));
    const int tn = (t + 1) % L;
    const cd u = ring.ynext[t];
    add(0, 1, t, tn, 0.5 * cd(0.0, -1.0) * u);
    add(1, 0, t, tn, 0.5 * cd(0.0, 1.0) * u);
    add(0, 1, tn, t, -0.5 * cd(0.0, -1.0) * std::conj(u));
    add(1, 0, tn, t, -0.5 * cd(0.0, 1.0) * std::conj(u));
    add(0, 0, t, tn, cd(-0.5 * kWilsonR, 0.0) * u);
    add(1, 1, t, tn, cd(-0.5 * kWilsonR, 0.0) * u);
    add(0, 0, tn, t, cd(-0.5 * kWilsonR, 0.0) * std::conj(u));
    add(1, 1, tn, t, cd(-0.5 * kWilsonR, 0.0) * std::conj(u));
  }
  return H;
}

// Column Fourier transform blocks for a row-invariant connection: the x-hop
// is diagonal at column frequency k and the y-seam advances k by the bundle
// degree, so frequencies decompose into gcd(|d|, n) rings of length
// (n / gcd) * n.
std::vector<BlockResult> analyze_row_invariant(const LatticeConnection& conn) {
  const int n = conn.n;
  const int d = conn.degree;
  std::vector<cd> ux(n), uy(n);
  for (int j = 0; j < n; ++j) {
    ux[j] = std::polar(1.0, conn.theta_x[j]);
    uy[j] = std::polar(1.0, conn.theta_y[j]);
  }
  std::vector<char> seen(n, 0);
  std::vector<BlockResult> results;
  for (int k0 = 0; k0 < n; ++k0) {
    if (seen[k0]) continue;
    // orbit of k0 under k -> k + d (mod n)
    std::vector<int> orbit;
    int k = k0;
    do {
      seen[k] = 1;
      orbit.push_back(k);
      k = ((k + d) % n + n) % n;
    } while (k != k0);
    const int L = int(orbit.size());
    RingSpec ring;
    ring.zdiag.resize(size_t(L) * n);
    ring.ynext.resize(size_t(L) * n);
    for (int s = 0; s < L; ++s) {
      const cd phase = std::polar(1.0, kTwoPi * orbit[s] / n);
      for (int j = 0; j < n; ++j) {
        ring.zdiag[size_t(s) * n + j] = ux[j] * phase;
        ring.ynext[size_t(s) * n + j] = uy[j];
      }
    }
    Mat H = assemble_ring(ring);
    results.push_back(analyze_block(H));
  }
  return results;
}

// Dense route for arbitrary link data (use small grids).
BlockResult analyze_dense(const LatticeConnection& conn) {
  const int n = conn.n;
  const int N = n * n;
  const int d = conn.degree;
  Mat H(2 * N, 2 * N);
  auto site = [&](int i, int j) { return i * n + j; };
  auto add = [&](int sr, int sc, int a, int b, cd val) {
    const double g5 = (sr == 0) ? 1.0 : -1.0;
    H.at(sr * N + a, sc * N + b) += g5 * val;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int t = site(i, j);
      const cd ux = std::polar(1.0, conn.theta_x[size_t(i) * n + j]);
      const cd uy = std::polar(1.0, conn.theta_y[size_t(i) * n + j]);
      const int txn = site((i + 1) % n, j);
      // the y-seam carries the section wrap factor e^{-2 pi i d i / n}
      cd wrap{1.0, 0.0};
      if (j + 1 == n && d != 0) wrap = std::polar(1.0, -kTwoPi * d * double(i) / n);
      const int tyn = site(i, (j + 1) % n);
      const cd uyw = uy * wrap;
      // x bonds: gamma1 = sigma_x
      add(0, 1, t, txn, 0.5 * ux);
      add(1, 0, t, txn, 0.5 * ux);
      add(0, 1, txn, t, -0.5 * std::conj(ux));
      add(1, 0, txn, t, -0.5 * std::conj(ux));
      add(0, 0, t, txn, cd(-0.5 * kWilsonR, 0.0) * ux);
      add(1, 1, t, txn, cd(-0.5 * kWilsonR, 0.0) * ux);
      add(0, 0, txn, t, cd(-0.5 * kWilsonR, 0.0) * std::conj(ux));
      add(1, 1, txn, t, cd(-0.5 * kWilsonR, 0.0) * std::conj(ux));
      // y bonds: gamma2 = sigma_y
      add(0, 1, t, tyn, 0.5 * cd(0.0, -1.0) * uyw);
      add(1, 0, t, tyn, 0.5 * cd(0.0, 1.0) * uyw);
      add(0, 1, tyn, t, -0.5 * cd(0.0, -1.0) * std::conj(uyw));
      add(1, 0, tyn, t, -0.5 * cd(0.0, 1.0) * std::conj(uyw));
      add(0, 0, t, tyn, cd(-0.5 * kWilsonR, 0.0) * uyw);
      add(1, 1, t, tyn, cd(-0.5 * kWilsonR, 0.0) * uyw);
      add(0, 0, tyn, t, cd(-0.5 * kWilsonR, 0.0) * std::conj(uyw));
      add(1, 1, tyn, t, cd(-0.5 * kWilsonR, 0.0) * std::conj(uyw));
      // site-diagonal Wilson (+2 per direction) and the mass -rho
      add(0, 0, t, t, cd(2.0 * kWilsonR - kRho, 0.0));
      add(1, 1, t, t, cd(2.0 * kWilsonR - kRho, 0.0));
    }
  return analyze_block(H);
}

}  // namespace

DolbeaultProblem::DolbeaultProblem(const TorusGrid& grid,
                                   std::vector<LatticeConnection> comps)
    : n(grid.n()), components(std::move(comps)) {
  if (components.empty()) throw std::invalid_argument("DolbeaultProblem: no components");
  for (const auto& c : components) {
    if (c.n != n) throw std::invalid_argument("DolbeaultProblem: grid mismatch");
    degrees.push_back(c.degree);
  }
  if (degrees.size() == 2) {
    // split rank-2 background: det E trivial <=> component degrees sum to 2 deg(L)
    // (the caller encodes deg(L) in the components; nothing to check beyond parity)
    if ((degrees[0] + degrees[1]) % 2 != 0)
      throw std::invalid_argument("DolbeaultProblem: split degrees must sum evenly");
  }
}

CohomologyReport h0(const DolbeaultProblem& problem, double rank_tol) {
  if (problem.n < 16) throw std::invalid_argument("h0: grid n must be >= 16");
  for (int d : problem.degrees)
    if (std::abs(d) > problem.n / 8)
      throw std::invalid_argument("h0: |component degree| exceeds n/8 resolution guard");

  std::vector<BlockResult> blocks;
  for (const auto& conn : problem.components) {
    if (conn.row_invariant()) {
      auto b = analyze_row_invariant(conn);
      blocks.insert(blocks.end(), b.begin(), b.end());
    } else {
      blocks.push_back(analyze_dense(conn));
    }
  }

  double hw_scale = 0.0, hw_gap = std::numeric_limits<double>::infinity();
  for (const auto& b : blocks) hw_gap = std::min(hw_gap, b.hw_gap);
  hw_scale = 4.0 + kRho;  // Wilson operator norm bound
  if (hw_gap < 1e-10 * hw_scale)
    throw std::runtime_error("unreliable rank: kernel projector ill-defined");

  double sv_max = 0.0;
  for (const auto& b : blocks)
    for (double s : b.chi_minus_svals) sv_max = std::max(sv_max, s);
  if (sv_max == 0.0) sv_max = 1.0;
  const double tol = rank_tol * sv_max;

  CohomologyReport rep;
  int n_neg_total = 0, half_total = 0;
  double largest_dropped = 0.0;
  double smallest_kept = std::numeric_limits<double>::infinity();
  std::vector<double> all_svals;
  for (const auto& b : blocks) {
    n_neg_total += b.n_neg;
    half_total += b.dim_half;
    int rank = 0;
    for (double s : b.chi_minus_svals) {
      all_svals.push_back(s);
      if (s >= tol) {
        ++rank;
        smallest_kept = std::min(smallest_kept, s);
      } else {
        largest_dropped = std::max(largest_dropped, s);
      }
    }
    rep.h0 += b.n_neg - rank;
  }
  const int index = n_neg_total - half_total;  // exact integer index h0 - h1
  rep.h1 = rep.h0 - index;
  if (rep.h1 < 0) throw std::runtime_error("unreliable rank: negative h1");

  std::sort(all_svals.begin(), all_svals.end());
  const size_t keep = std::min<size_t>(all_svals.size(), 16);
  rep.singular_values.assign(all_svals.begin(), all_svals.begin() + keep);
  std::reverse(rep.singular_values.begin(), rep.singular_values.end());
  rep.gap_ratio = (largest_dropped > 0.0)
                      ? smallest_kept / largest_dropped
                      : std::numeric_limits<double>::infinity();
  if (rep.gap_ratio < 1e3) throw std::runtime_error("unreliable rank");
  return rep;
}

int riemann_roch_expected(int genus, const std::vector<int>& degrees) {
  if (genus < 0 || genus > 2) throw std::invalid_argument("riemann_roch_expected: genus must be 0, 1, or 2");
  // chi(fields) - chi(O): each line-bundle summand contributes deg + 1 - g.
  int s = -(1 - genus);
  for (int d : degrees) s += d + 1 - genus;
  return s;
}

int fueter_complex_index(int genus, int k) {
  // chi(O) - chi(F) - chi(T^2) with F = E^* (x) K^{1/2} (x) T^{-1} rank 2 of
  // degree 2g - 2 - 2k and T^2 of degree 2k; vanishes identically.
  const int chi_o = 1 - genus;
  const int chi_f = (2 * genus - 2 - 2 * k) + 2 * (1 - genus);
  const int chi_t2 = 2 * k + (1 - genus);
  return chi_o - chi_f - chi_t2;
}

FueterObstructionReport fueter_obstruction(int m, std::array<double, 2> cls) {
  if (m < 0) throw std::invalid_argument("fueter_obstruction: deg M must be >= 0");
  FueterObstructionReport rep;
  // Degree cap on the auxiliary bundle N: deg N <= h0(E) + 2g - 2 with
  // g = 1 and h0(E) = h0(M) + h0(M^{-1}) computed by divisor arithmetic.
  auto is_torsion2 = [&](double u) {
    const double f = u - std::floor(u);
    const double r = std::min({std::abs(f), std::abs(f - 0.5), std::abs(f - 1.0)});
    return r < 1e-12;
  };
  const bool trivial = std::abs(cls[0] - std::round(cls[0])) < 1e-12 &&
                       std::abs(cls[1] - std::round(cls[1])) < 1e-12;
  const int h0_e = (m > 0) ? m : (trivial ? 2 : 0);
  rep.degree_cap = std::max(h0_e, 0);

  // Search k = deg N from 0 to the cap. For k = 0 the first condition
  // h0(N^2) > 0 forces N^2 = O; for k >= 1 it always holds (h0 = 2k).
  // The second condition asks for sections of (M (+) M^{-1}) (x) N^{-1}.
  for (int k = 0; k <= rep.degree_cap; ++k) {
    if (k == 0) {
      if (m > 0) {
        rep.exists = true;  // N = O: h0(O) = 1 and h0(M) = m > 0
        return rep;
      }
      // m = 0: N must be 2-torsion and equal A or A^{-1}; possible iff
      // the class itself is 2-torsion (A^2 = O), including the trivial one.
      if (is_torsion2(cls[0]) && is_torsion2(cls[1])) {
        rep.exists = true;
        return rep;
      }
    } else {
      // deg(M (x) N^{-1}) = m - k; a section exists iff m - k > 0, or
      // m - k = 0 with the choice N = M. deg(M^{-1} N^{-1}) < 0 never works.
      if (m - k > 0 || m - k == 0) {
        rep.exists = true;
        return rep;
      }
    }
  }
  rep.exists = false;
  return rep;
}

bool fueter_obstruction_exists(int m, std::array<double, 2> cls) {
  return fueter_obstruction(m, cls).exists;
}

}  // namespace vortexlab
