#include <doctest.h>

#include <random>

#include "knotmm/json_io.hpp"
#include "knotmm/series.hpp"

using namespace knotmm;

namespace {
QSeries from_ints(std::vector<long> v, int order) {
  std::vector<Q> c;
  for (long x : v) c.emplace_back(x);
  return QSeries(order, c);
}

Z binom(long n, long k) {
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

QSeries random_series(std::mt19937& rng, int order, bool zero_const) {
  std::uniform_int_distribution<int> d(-5, 5);
  QSeries s(order);
  for (int i = 0; i <= order; ++i) {
    s[i] = Q(d(rng), 1 + (d(rng) + 5) % 3);
    s[i].canonicalize();
  }
  if (zero_const) s[0] = 0;
  return s;
}
}  // namespace

TEST_CASE("truncated arithmetic") {
  auto a = from_ints({1, 1}, 6), b = from_ints({1, -1}, 6);
  CHECK(a * b == from_ints({1, 0, -1}, 6));
  CHECK(a * QSeries::constant(1, 6) == a);
  QSeries geo(10);
  for (int i = 0; i <= 10; ++i) geo[i] = Q(Z(1) << i);
  CHECK(geo * from_ints({1, -2}, 10) == QSeries::constant(1, 10));
  // min rule on truncation
  CHECK((a * from_ints({1, 1}, 3)).order() == 3);
  CHECK((a + from_ints({1}, 2)).order() == 2);
  CHECK_THROWS(a.truncated(9));
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto x = random_series(rng, 8, false), y = random_series(rng, 8, false), z = random_series(rng, 8, false);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    if (x[0] != 0) CHECK(x * inverse(x) == QSeries::constant(1, 8));
  }
}

TEST_CASE("compose") {
  auto f = from_ints({0, 1, 1}, 5);
  CHECK(compose(f, from_ints({0, 2}, 5)) == from_ints({0, 2, 4}, 5));
  CHECK(compose(f, QSeries::var(5)) == f);
  CHECK_THROWS(compose(f, from_ints({1, 1}, 5)));
}

TEST_CASE("reversion") {
  CHECK(reversion(QSeries::var(6)) == QSeries::var(6));
  // g - g^2 inverts to the Catalan generating function shifted by one
  auto r = reversion(from_ints({0, 1, -1}, 8));
  for (int n = 1; n <= 8; ++n) CHECK(r[n] == Q(binom(2 * n - 2, n - 1)) / n);
  CHECK(r.agrees_with(from_ints({0, 1, 1, 2, 5}, 4), 4));
  QSeries geo(9);
  for (int i = 1; i <= 9; ++i) geo[i] = 1;
  auto inv = reversion(geo);
  for (int i = 1; i <= 9; ++i) CHECK(inv[i] == (i % 2 ? 1 : -1));
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    auto f = random_series(rng, 7, true);
    if (f[1] == 0) f[1] = 1;
    CHECK(compose(reversion(f), f) == QSeries::var(7));
  }
  CHECK_THROWS(reversion(from_ints({0, 0, 1}, 4)));
}

TEST_CASE("solve_algebraic") {
  int n = 12;
  // y = 1 + g y^2
  std::vector<QSeries> p{QSeries::constant(1, n), QSeries::constant(-1, n), QSeries::var(n)};
  auto y = solve_algebraic(p, Q(1));
  for (int k = 0; k <= n; ++k) CHECK(y[k] == Q(binom(2 * k, k)) / (k + 1));
  CHECK(eval_poly(p, y).is_zero());
  std::vector<QSeries> lin{QSeries::constant(-3, 5), QSeries::constant(1, 5)};
  CHECK(solve_algebraic(lin, Q(3)) == QSeries::constant(3, 5));
  CHECK_THROWS(solve_algebraic(p, Q(2)));
  // y^2 - g = 0 has a singular derivative at y=0
  std::vector<QSeries> sing{-QSeries::var(4), QSeries(4), QSeries::constant(1, 4)};
  CHECK_THROWS(solve_algebraic(sing, Q(0)));
}

TEST_CASE("log, exp, integral") {
  auto f = from_ints({1, -1}, 8);  // log(1-g) = -sum g^n/n
  auto l = log_series(f);
  for (int i = 1; i <= 8; ++i) CHECK(l[i] == Q(-1, i));
  CHECK(exp_series(l) == f);
  CHECK(derivative(integral(f)) == f);
}

TEST_CASE("polynomial coefficients") {
  TauSeries s(3);
  s[0] = Poly::x();
  s[1] = Poly(std::vector<Q>{1, 1});
  auto sq = s * s;
  CHECK(sq[0] == Poly::x() * Poly::x());
  CHECK(sq[2] == Poly(std::vector<Q>{1, 2, 1}));
  // truncated-in-epsilon ring allows inverting 1 + eps
  Poly e = Poly(std::vector<Q>{1, 1}, 3);
  CHECK(inverse(e) * e == Poly(Q(1)).with_cap(3));
  CHECK(interpolate({1, 2, 3}, {1, 4, 9}) == Poly(std::vector<Q>{0, 0, 1}));
}

TEST_CASE("rational functions") {
  RatFunc t = RatFunc::tau();
  RatFunc a = (t + RatFunc(1)) / (t * (t - RatFunc(1)));
  RatFunc b = RatFunc(1) / t;
  CHECK((a - b) == RatFunc(2) / (t * (t - RatFunc(1))));
  CHECK(((t * t - RatFunc(1)) / (t - RatFunc(1))).is_polynomial());
  CHECK(a.eval(2) == Q(3, 2));
  CHECK_THROWS(a.eval(1));
}

TEST_CASE("series json round trip") {
  auto s = from_ints({0, 1, 2}, 3);
  s[3] = Q(91, 12);
  auto j = series_to_json(s);
  CHECK(j["coeffs"][3] == "91/12");
  CHECK(qseries_from_json(j) == s);
  json bad = {{"truncation_order", 3}, {"coeffs", {"1"}}};
  CHECK_THROWS(qseries_from_json(bad));
  TauSeries ts(1);
  ts[1] = Poly(std::vector<Q>{2, 0, Q(1, 3)});
  CHECK(tauseries_from_json(series_to_json(ts)) == ts);
}
