#include <doctest.h>

#include "knotmm/flype.hpp"
#include "knotmm/planar.hpp"
#include "knotmm/virtual_genus.hpp"

using namespace knotmm;

namespace {
QSeries ints(std::vector<long> v, int order) {
  std::vector<Q> c;
  for (long x : v) c.emplace_back(x);
  return QSeries(order, c);
}
}  // namespace

TEST_CASE("free energy coefficients") {
  auto f = complex_free_energy_coefficients(3, 2);
  REQUIRE(f.size() == 4);
  // planar parts are twice the Hermitean closed sum at t = 1
  auto closed = free_energy_closed(QSeries::constant(1, 3));
  for (int n = 1; n <= 3; ++n) CHECK(f[n].coeff(0) == closed[n] * Q(2));
  CHECK(f[1] == Poly(1));
}

TEST_CASE("genus-stratified prime tangles") {
  VirtualGenus v(4, 3);
  CHECK(v.gamma_h(0) == ints({0, 1, 2, 6, 22}, 4));
  CHECK(v.gamma_h(1) == ints({0, 1, 8, 59, 420}, 4));
  CHECK(v.gamma_h(2) == ints({0, 0, 0, 17, 456}, 4));
  CHECK(v.gamma_h(3).is_zero());

  CHECK(v.flype_quotient_h(0) == gamma_tilde(4));
  CHECK(v.flype_quotient_h(1) == ints({0, 1, 8, 57, 384}, 4));
  CHECK(v.flype_quotient_h(2) == ints({0, 0, 0, 17, 456}, 4));
  for (int h = 0; h <= 2; ++h) {
    auto a = v.gamma_h(h), b = v.flype_quotient_h(h);
    for (int n = 0; n <= 4; ++n) {
      CHECK(b[n] >= 0);
      CHECK(b[n] <= a[n]);
      CHECK(b[n].get_den() == 1);
    }
  }
}

TEST_CASE("planar stratum of t") {
  VirtualGenus v(4, 2);
  auto t0 = v.t().map([](const Poly& p) { return p.coeff(0); });
  CHECK(t0 == renormalize_t(4).t);
  CHECK(v.t()[0] == Poly(1));
}

TEST_CASE("explicit coefficients and json") {
  auto f = complex_free_energy_coefficients(3, 1);
  VirtualGenus v(f, 2, 1);
  CHECK(v.gamma_h(0) == ints({0, 1, 2}, 2));
  auto j = v.to_json();
  CHECK(j["max_g"] == 2);
  CHECK(j["gamma"].size() == 2);
  CHECK_THROWS(VirtualGenus(f, 5, 1));
}
