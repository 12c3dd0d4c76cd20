#include <cmath>

#include "doctest.h"
#include "test_util.hpp"
#include "vortexlab/io.hpp"
#include "vortexlab/theta.hpp"

using namespace vortexlab;

TEST_CASE("wrap rule: degree-0 fields strictly periodic, degree-d twisted") {
  TwistedField f(16, 0);
  auto rng = test_rng();
  std::uniform_real_distribution<double> u(-1, 1);
  for (auto& z : f.v) z = cd(u(rng), u(rng));
  CHECK(f.at(3, 16 + 5) == f.at(3, 5));
  CHECK(f.at(16 + 3, 5) == f.at(3, 5));

  TwistedField h(16, 2);
  for (auto& z : h.v) z = cd(u(rng), u(rng));
  const cd expect = h.at(3, 5) * std::polar(1.0, -2 * std::numbers::pi * 2 * (3 / 16.0));
  CHECK(std::abs(h.at(3, 16 + 5) - expect) < 1e-14);
  // two crossings compose
  const cd expect2 = h.at(3, 5) * std::polar(1.0, -2 * std::numbers::pi * 2 * 2 * (3 / 16.0));
  CHECK(std::abs(h.at(3, 2 * 16 + 5) - expect2) < 1e-14);
}

TEST_CASE("normalize makes the L2 norm one") {
  TwistedField f(16, 0);
  auto rng = test_rng();
  std::uniform_real_distribution<double> u(-2, 2);
  for (auto& z : f.v) z = cd(u(rng), u(rng));
  f.normalize();
  CHECK(f.l2_norm() == doctest::Approx(1.0).epsilon(1e-13));
  TwistedField z(16, 0);
  CHECK_THROWS(z.normalize());
}

TEST_CASE("blob round trip is exact") {
  TorusGrid g(16);
  auto [f, c] = theta_section(g, ThetaSpec{1, {{0.25, 0.75}}, 8});
  const auto blob = field_to_blob(f);
  CHECK(blob.size() == 8 + size_t(16) * 16 * 16);
  const TwistedField back = field_from_blob(blob);
  CHECK(back.n == f.n);
  CHECK(back.degree == f.degree);
  for (size_t k = 0; k < f.v.size(); ++k) CHECK(back.v[k] == f.v[k]);
}

TEST_CASE("blob header is little-endian n then degree") {
  TwistedField f(16, -3);
  const auto blob = field_to_blob(f);
  CHECK(blob[0] == 16);
  CHECK(blob[1] == 0);
  CHECK(blob[4] == 0xFD);  // -3 as two's complement LE
  CHECK(blob[7] == 0xFF);
}

TEST_CASE("base64 round trip") {
  auto rng = test_rng();
  std::uniform_int_distribution<int> b(0, 255);
  for (int len : {0, 1, 2, 3, 4, 57}) {
    std::vector<std::uint8_t> data(len);
    for (auto& x : data) x = std::uint8_t(b(rng));
    CHECK(base64_decode(base64_encode(data)) == data);
  }
}

TEST_CASE("json wrapper records norm and provenance") {
  TwistedField f(16, 1);
  for (auto& z : f.v) z = cd(0.5, 0.25);
  const std::string j = field_to_json(f, "computed");
  CHECK(j.find("\"provenance\": \"computed\"") != std::string::npos);
  const TwistedField back = field_from_json(j);
  for (size_t k = 0; k < f.v.size(); ++k) CHECK(back.v[k] == f.v[k]);
}
