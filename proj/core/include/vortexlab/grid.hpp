#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace vortexlab {

using cd = std::complex<double>;

/// Uniform n x n sample of the flat torus R^2/Z^2 (modulus i, unit area).
///
/// Sites are (i/n, j/n), row-major index i*n + j. The grid owns the FFT
/// plans and the Fourier multiplier table of the positive Hodge Laplacian
/// Delta = -(d^2/dx^2 + d^2/dy^2), which is exact on band-limited data.
class TorusGrid {
 public:
  /// Requires n even and n >= 8; throws std::invalid_argument otherwise.
  explicit TorusGrid(int n);
  ~TorusGrid();

  TorusGrid(const TorusGrid&) = delete;
  TorusGrid& operator=(const TorusGrid&) = delete;

  int n() const { return n_; }
  int sites() const { return n_ * n_; }
  double spacing() const { return 1.0 / n_; }
  double area_element() const { return 1.0 / (double(n_) * n_); }

  /// Integer frequency of row/column index k, in [-n/2, n/2).
  int freq(int k) const { return k < n_ / 2 ? k : k - n_; }

  /// Multiplier of Delta at mode (kx, ky): 4 pi^2 (kx^2 + ky^2).
  double laplace_multiplier(int i, int j) const { return lap_mul_[size_t(i) * n_ + j]; }

  // ---- spectral kernels on complex n*n arrays (row-major) ----
  void fft(const cd* in, cd* out) const;        // forward, unnormalized
  void ifft(const cd* in, cd* out) const;       // inverse, normalized by 1/n^2

  /// Delta f for complex data; exact on band-limited fields.
  void laplacian(const cd* f, cd* out) const;
  void laplacian(const std::vector<double>& f, std::vector<double>& out) const;

  /// Mean-zero solution of Delta v = g - mean(g).
  void poisson(const std::vector<double>& g, std::vector<double>& v) const;

  /// (Delta + kappa)^{-1} g, kappa > 0.
  void helmholtz_inverse(const std::vector<double>& g, double kappa,
                         std::vector<double>& v) const;

  /// Spectral partial derivatives sampled at edge midpoints:
  /// out(i,j) ~ (d f/dx)(i + 1/2, j)/n resp. (d f/dy)(i, j + 1/2).
  void ddx_at_x_edge(const std::vector<double>& f, std::vector<double>& out) const;
  void ddy_at_x_edge(const std::vector<double>& f, std::vector<double>& out) const;
  void ddx_at_y_edge(const std::vector<double>& f, std::vector<double>& out) const;
  void ddy_at_y_edge(const std::vector<double>& f, std::vector<double>& out) const;

  double mean(const std::vector<double>& f) const;

 private:
  int n_;
  std::vector<double> lap_mul_;
  struct Plans;
  std::unique_ptr<Plans> plans_;

  void derivative_midpoint(const std::vector<double>& f, int axis, int shift_axis,
                           std::vector<double>& out) const;
};

/// Factory with the spec'd precondition message.
std::shared_ptr<TorusGrid> make_grid(int n);

}  // namespace vortexlab
