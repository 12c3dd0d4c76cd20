#include "vortexlab/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace vortexlab {

namespace {
// FFTW planning is not thread-safe; execution with the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

struct TorusGrid::Plans {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
  fftw_complex* buf_in = nullptr;
  fftw_complex* buf_out = nullptr;
  ~Plans() {
    std::lock_guard<std::mutex> lk(planner_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
    if (buf_in) fftw_free(buf_in);
    if (buf_out) fftw_free(buf_out);
  }
};

TorusGrid::TorusGrid(int n) : n_(n) {
  if (n < 8 || n % 2 != 0) throw std::invalid_argument("grid size must be even >= 8");
  lap_mul_.resize(size_t(n_) * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const double kx = freq(i), ky = freq(j);
      lap_mul_[size_t(i) * n_ + j] = kTwoPi * kTwoPi * (kx * kx + ky * ky);
    }
  plans_ = std::make_unique<Plans>();
  std::lock_guard<std::mutex> lk(planner_mutex());
  plans_->buf_in = fftw_alloc_complex(size_t(n_) * n_);
  plans_->buf_out = fftw_alloc_complex(size_t(n_) * n_);
  // FFTW_ESTIMATE keeps planning deterministic run to run.
  plans_->fwd = fftw_plan_dft_2d(n_, n_, plans_->buf_in, plans_->buf_out,
                                 FFTW_FORWARD, FFTW_ESTIMATE);
  plans_->bwd = fftw_plan_dft_2d(n_, n_, plans_->buf_in, plans_->buf_out,
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
}

TorusGrid::~TorusGrid() = default;

std::shared_ptr<TorusGrid> make_grid(int n) { return std::make_shared<TorusGrid>(n); }

void TorusGrid::fft(const cd* in, cd* out) const {
  fftw_execute_dft(plans_->fwd,
                   reinterpret_cast<fftw_complex*>(const_cast<cd*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void TorusGrid::ifft(const cd* in, cd* out) const {
  fftw_execute_dft(plans_->bwd,
                   reinterpret_cast<fftw_complex*>(const_cast<cd*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
  const double s = 1.0 / (double(n_) * n_);
  for (size_t k = 0; k < size_t(n_) * n_; ++k) out[k] *= s;
}

void TorusGrid::laplacian(const cd* f, cd* out) const {
  const size_t m = size_t(n_) * n_;
  std::vector<cd> hat(m);
  fft(f, hat.data());
  for (size_t k = 0; k < m; ++k) hat[k] *= lap_mul_[k];
  ifft(hat.data(), out);
}

void TorusGrid::laplacian(const std::vector<double>& f, std::vector<double>& out) const {
  const size_t m = size_t(n_) * n_;
  std::vector<cd> tmp(m), res(m);
  for (size_t k = 0; k < m; ++k) tmp[k] = f[k];
  laplacian(tmp.data(), res.data());
  out.resize(m);
  for (size_t k = 0; k < m; ++k) out[k] = res[k].real();
}

void TorusGrid::poisson(const std::vector<double>& g, std::vector<double>& v) const {
  const size_t m = size_t(n_) * n_;
  std::vector<cd> tmp(m), hat(m);
  for (size_t k = 0; k < m; ++k) tmp[k] = g[k];
  fft(tmp.data(), hat.data());
  hat[0] = 0.0;  // project out the mean; mean-zero solution
  for (size_t k = 1; k < m; ++k) hat[k] /= lap_mul_[k];
  ifft(hat.data(), tmp.data());
  v.resize(m);
  for (size_t k = 0; k < m; ++k) v[k] = tmp[k].real();
}

void TorusGrid::helmholtz_inverse(const std::vector<double>& g, double kappa,
                                  std::vector<double>& v) const {
  const size_t m = size_t(n_) * n_;
  std::vector<cd> tmp(m), hat(m);
  for (size_t k = 0; k < m; ++k) tmp[k] = g[k];
  fft(tmp.data(), hat.data());
  for (size_t k = 0; k < m; ++k) hat[k] /= (lap_mul_[k] + kappa);
  ifft(hat.data(), tmp.data());
  v.resize(m);
  for (size_t k = 0; k < m; ++k) v[k] = tmp[k].real();
}

double TorusGrid::mean(const std::vector<double>& f) const {
  double s = 0.0, c = 0.0;
  for (double x : f) {  // Kahan
    double y = x - c, t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s / (double(n_) * n_);
}

// Derivative along `axis`, sampled at the midpoint of the edge that points
// along `shift_axis` (half-site shift there). Exact for band-limited data.
void TorusGrid::derivative_midpoint(const std::vector<double>& f, int axis,
                                    int shift_axis, std::vector<double>& out) const {
  const size_t m = size_t(n_) * n_;
  std::vector<cd> tmp(m), hat(m);
  for (size_t k = 0; k < m; ++k) tmp[k] = f[k];
  fft(tmp.data(), hat.data());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const double kx = freq(i), ky = freq(j);
      const double kd = (axis == 0) ? kx : ky;
      const double ks = (shift_axis == 0) ? kx : ky;
      cd mul = cd(0.0, kTwoPi * kd) * std::polar(1.0, std::numbers::pi * ks / n_);
      // Nyquist mode of the differentiated axis has no consistent odd
      // derivative; it is absent from band-limited data and dropped here.
      if ((axis == 0 && i == n_ / 2) || (axis == 1 && j == n_ / 2)) mul = 0.0;
      hat[size_t(i) * n_ + j] *= mul;
    }
  ifft(hat.data(), tmp.data());
  out.resize(m);
  for (size_t k = 0; k < m; ++k) out[k] = tmp[k].real();
}

void TorusGrid::ddx_at_x_edge(const std::vector<double>& f, std::vector<double>& out) const {
  derivative_midpoint(f, 0, 0, out);
}
void TorusGrid::ddy_at_x_edge(const std::vector<double>& f, std::vector<double>& out) const {
  derivative_midpoint(f, 1, 0, out);
}
void TorusGrid::ddx_at_y_edge(const std::vector<double>& f, std::vector<double>& out) const {
  derivative_midpoint(f, 0, 1, out);
}
void TorusGrid::ddy_at_y_edge(const std::vector<double>& f, std::vector<double>& out) const {
  derivative_midpoint(f, 1, 1, out);
}

}  // namespace vortexlab
