#include <doctest.h>

#include <cmath>

#include "knotmm/planar.hpp"

using namespace knotmm;

namespace {
Z binom(long n, long k) {
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}
Q fact(long n) {
  Z r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Q(r);
}
QSeries ints(std::vector<long> v, int order) {
  std::vector<Q> c;
  for (long x : v) c.emplace_back(x);
  return QSeries(order, c);
}
double eval(const QSeries& s, double x) {
  double r = 0;
  for (int i = s.order(); i >= 0; --i) r = r * x + s[i].get_d();
  return r;
}
}  // namespace

TEST_CASE("a^2 at t = 1") {
  auto a2 = solve_a2(QSeries::constant(1, 10));
  CHECK(a2.agrees_with(ints({1, 3, 18}, 2), 2));
  // a^2 = 1 + 3g a^4 is the Catalan equation in 3g
  for (int n = 0; n <= 10; ++n) {
    Z p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, n);
    CHECK(a2[n] == Q(binom(2 * n, n) * p3) / (n + 1));
  }
  CHECK(solve_a2(QSeries::constant(1, 0))[0] == 1);
}

TEST_CASE("free energy: closed sum vs a^2 form") {
  auto t = QSeries::constant(1, 10);
  auto f1 = free_energy_closed(t);
  CHECK(f1[1] == Q(1, 2));
  CHECK(f1[2] == Q(9) * fact(3) / (fact(2) * fact(4)));
  CHECK(f1[2] == Q(9, 8));
  CHECK(f1 == free_energy_a2(planar_state(t)));
  // agreement also holds at a non-trivial t
  auto t2 = ints({2, 1, -1}, 8);
  CHECK(free_energy_closed(t2) == free_energy_a2(planar_state(t2)));
}

TEST_CASE("two- and four-point functions") {
  auto s = planar_state(QSeries::constant(1, 6));
  auto d = two_point(s);
  CHECK(d[0] == 1);
  CHECK(d[1] == 2);
  auto g4 = four_point(s);
  CHECK(g4[0] == 0);
}

TEST_CASE("wave-function renormalization") {
  CHECK(renormalize_t(0).t == QSeries::constant(1, 0));
  int n = 10;
  auto r = renormalize_t(n);
  auto s = planar_state(r.t);
  CHECK(s.a2 == r.a2);
  CHECK(two_point(s) == QSeries::constant(1, n));
  // fixed-point oracle: t <- t * Delta(t)
  QSeries t = QSeries::constant(1, n);
  for (int it = 0; it <= n + 1; ++it) t = t * two_point(planar_state(t));
  CHECK(t == r.t);
}

TEST_CASE("renormalized Gamma and F") {
  int n = 8;
  auto gam = renormalized_gamma(n);
  CHECK(gam.agrees_with(ints({0, 1, 2, 6, 22, 91}, 5), 5));
  CHECK(gam == four_point(planar_state(renormalize_t(n).t)));
  auto f = renormalized_free_energy(n + 1);
  QSeries expect(6);
  expect[2] = Q(1, 4);
  expect[3] = Q(1, 3);
  expect[4] = Q(3, 4);
  expect[5] = Q(11, 5);
  expect[6] = Q(91, 12);
  CHECK(f.agrees_with(expect, 6));
  CHECK(derivative(f) * Q(2) == gam);
  CHECK(integral(gam) * Q(1, 2) == f);
  for (int i = 2; i <= n; ++i) CHECK(f[i] > 0);
  for (int i = 1; i <= n; ++i) CHECK(gam[i] > 0);
}

TEST_CASE("c_l recursion") {
  CHECK(c_coefficient(1) == 1);
  CHECK(c_coefficient(2) == Q(1, 2));
  CHECK(c_coefficient(3) == Q(3, 2));
  CHECK_THROWS(gamma_2l(1, QSeries::constant(2, 3)));
}

TEST_CASE("density quadrature at g = 1/100") {
  Density u(0.01);
  CHECK(std::abs(u.moment(0) - 1) < 1e-10);
  double delta = u.a2 * (4 - u.a2) / 3;
  CHECK(std::abs(u.moment(1) - delta) < 1e-10);
  // the series for Delta at t = 1 summed numerically
  auto d = two_point(planar_state(QSeries::constant(1, 40)));
  CHECK(std::abs(eval(d, 0.01) - u.moment(1)) < 1e-10);
  CHECK_THROWS(Density(0.2));
}
