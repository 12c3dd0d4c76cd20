#include <cmath>
#include <numbers>

#include "doctest.h"
#include "test_util.hpp"
#include "vortexlab/field.hpp"
#include "vortexlab/grid.hpp"

using namespace vortexlab;
namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("make_grid sizes and area") {
  auto g16 = make_grid(16);
  CHECK(g16->sites() == 256);
  CHECK(g16->area_element() == doctest::Approx(1.0 / 256).epsilon(1e-15));
  auto g64 = make_grid(64);
  CHECK(g64->sites() == 4096);
  // total area sums to 1 exactly
  CHECK(g16->sites() * g16->area_element() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("make_grid rejects odd or small n") {
  CHECK_THROWS_WITH(TorusGrid(7), "grid size must be even >= 8");
  CHECK_THROWS(TorusGrid(6));
  CHECK_THROWS(TorusGrid(9));
}

TEST_CASE("laplacian eigenfunction cos(2 pi x)") {
  TorusGrid g(32);
  TwistedField f(32, 0);
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j) f(i, j) = std::cos(kTwoPi * i / 32.0);
  const TwistedField lf = laplacian(g, f);
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j)
      CHECK(lf(i, j).real() ==
            doctest::Approx(4 * std::numbers::pi * std::numbers::pi * std::cos(kTwoPi * i / 32.0))
                .epsilon(1e-12));
}

TEST_CASE("laplacian kernel and divergence theorem") {
  TorusGrid g(32);
  TwistedField c(32, 0);
  for (auto& z : c.v) z = 3.25;
  CHECK(laplacian(g, c).linf_norm() < 1e-12);

  auto rng = test_rng();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TwistedField f(32, 0);
  for (auto& z : f.v) z = cd(u(rng), u(rng));
  const TwistedField lf = laplacian(g, f);
  cd total{0.0, 0.0};
  for (const auto& z : lf.v) total += z;
  CHECK(std::abs(total) * g.area_element() < 1e-12);
}

TEST_CASE("laplacian self-adjointness on random periodic fields") {
  TorusGrid g(32);
  auto rng = test_rng();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  TwistedField f(32, 0), h(32, 0);
  for (auto& z : f.v) z = cd(u(rng), u(rng));
  for (auto& z : h.v) z = cd(u(rng), u(rng));
  const cd a = inner(laplacian(g, f), h);
  const cd b = inner(f, laplacian(g, h));
  CHECK(std::abs(a - b) < 1e-12 * (1.0 + std::abs(a)));
}

TEST_CASE("poisson solves Delta v = g - mean(g)") {
  TorusGrid g(32);
  auto rng = test_rng();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> rhs(g.sites());
  for (auto& x : rhs) x = u(rng);
  std::vector<double> v, lap;
  g.poisson(rhs, v);
  g.laplacian(v, lap);
  const double mean = g.mean(rhs);
  for (int k = 0; k < g.sites(); ++k)
    CHECK(lap[k] == doctest::Approx(rhs[k] - mean).epsilon(1e-10).scale(1.0));
  CHECK(std::abs(g.mean(v)) < 1e-13);
}

TEST_CASE("edge-midpoint derivatives are spectral") {
  TorusGrid g(32);
  std::vector<double> f(g.sites());
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j)
      f[size_t(i) * 32 + j] = std::sin(kTwoPi * i / 32.0) * std::cos(2 * kTwoPi * j / 32.0);
  std::vector<double> dx;
  g.ddx_at_y_edge(f, dx);
  for (int i = 0; i < 32; ++i)
    for (int j = 0; j < 32; ++j) {
      const double want =
          kTwoPi * std::cos(kTwoPi * i / 32.0) * std::cos(2 * kTwoPi * (j + 0.5) / 32.0);
      CHECK(dx[size_t(i) * 32 + j] == doctest::Approx(want).epsilon(1e-11).scale(1.0));
    }
}
