#include <doctest.h>

#include <cmath>

#include "knotmm/asymptotics.hpp"
#include "knotmm/flype.hpp"
#include "knotmm/planar.hpp"

using namespace knotmm;

namespace {
QSeries central_binomials(int n, bool catalan) {
  std::vector<Q> c;
  for (int p = 0; p <= n; ++p) {
    Z b;
    mpz_bin_uiui(b.get_mpz_t(), 2 * p, p);
    Q q(b);
    if (catalan) q /= p + 1;
    c.push_back(q);
  }
  return QSeries(n, c);
}
}  // namespace

TEST_CASE("ratio fit on known sequences") {
  auto f = fit_tail(central_binomials(120, false), 40);
  CHECK(f.growth == doctest::Approx(4).epsilon(1e-5));
  CHECK(f.exponent == doctest::Approx(-0.5).epsilon(1e-3));
  auto c = fit_tail(central_binomials(120, true), 40);
  CHECK(c.growth == doctest::Approx(4).epsilon(1e-5));
  CHECK(c.exponent == doctest::Approx(-1.5).epsilon(1e-3));
  CHECK(c.hi == 120);
  CHECK(c.lo == 81);
  CHECK(std::abs(c.shifted_exponent - c.exponent) < 1e-3);
}

TEST_CASE("fit errors") {
  auto s = central_binomials(10, false);
  CHECK_THROWS_AS(fit_growth_exponent(s, 5, 11), std::domain_error);
  CHECK_THROWS_AS(fit_growth_exponent(s, 8, 9), std::domain_error);
  QSeries alt(10, {1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1});
  CHECK_THROWS_AS(fit_tail(alt, 5), std::domain_error);
}

TEST_CASE("planar series") {
  auto F = free_energy_closed(QSeries::constant(1, 200));
  auto f = fit_tail(F, 40);
  CHECK(f.growth == doctest::Approx(12).epsilon(1e-4));
  CHECK(std::abs(f.exponent + 3.5) < 0.01);
  auto g = fit_tail(gamma_tilde(100), 30);
  CHECK(g.growth == doctest::Approx((101 + std::sqrt(21001.0)) / 40).epsilon(1e-4));
  CHECK(std::abs(g.exponent + 2.5) < 0.01);
  // deeper windows move toward the exact value
  auto far = fit_growth_exponent(F, 40, 60), near = fit_growth_exponent(F, 160, 200);
  CHECK(std::abs(near.exponent + 3.5) <= std::abs(far.exponent + 3.5));
}

TEST_CASE("conjectured exponents") {
  auto e0 = conjectured_exponent(0);
  CHECK(e0.in_regime);
  CHECK(*e0.gamma == doctest::Approx((-2 - std::sqrt(52.0)) / 12));
  CHECK(*e0.tangle_exponent == doctest::Approx(*e0.gamma - 2));
  auto e2 = conjectured_exponent(2);
  CHECK(!e2.in_regime);
  CHECK(*e2.gamma == doctest::Approx(0));
  auto e1 = conjectured_exponent(1);
  CHECK(*e1.gamma == doctest::Approx((-1 - 5) / 12.0));
  auto e5 = conjectured_exponent(5);
  CHECK(!e5.gamma);
  CHECK(exponent_to_json(e5)["gamma"].is_null());
  CHECK(knot_exponent() == doctest::Approx(-(19 + std::sqrt(13.0)) / 6));
  // the tangle exponent at tau = 0 and the knot exponent differ by one
  CHECK(*e0.tangle_exponent - knot_exponent() == doctest::Approx(1));
}

TEST_CASE("reference constants and json") {
  auto r = reference_constants();
  bool found = false;
  for (auto& c : r)
    if (c.value == 6.28329764) found = true;
  CHECK(found);
  auto j = fit_to_json("F", fit_tail(central_binomials(30, true), 10));
  CHECK(j["window"][1] == 30);
  CHECK(j["diagnostics"].contains("rms_residual"));
}
