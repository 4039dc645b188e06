#include "knotmm/planar.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace knotmm {

namespace {
Q factorial(long n) {
  Z r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Q(r);
}

QSeries g_over_t2(const QSeries& t) {
  QSeries ti = inverse(t);
  return QSeries::var(t.order()) * ti * ti;
}
}  // namespace

QSeries solve_a2(const QSeries& t) {
  if (t[0] == 0) throw std::domain_error("solve_a2: t(0) must be nonzero");
  int n = t.order();
  std::vector<QSeries> p{QSeries::constant(1, n), QSeries::constant(-1, n), g_over_t2(t) * Q(3)};
  return solve_algebraic(p, Q(1));
}

PlanarState planar_state(const QSeries& t) { return {t, solve_a2(t)}; }

QSeries free_energy_closed(const QSeries& t) {
  int n = t.order();
  QSeries x = g_over_t2(t) * Q(3);
  QSeries f(n);
  QSeries xp = QSeries::constant(1, n);
  for (int p = 1; p <= n; ++p) {
    xp = xp * x;
    f += xp * (factorial(2 * p - 1) / (factorial(p) * factorial(p + 2)));
  }
  return f;
}

QSeries free_energy_a2(const PlanarState& s) {
  int n = s.a2.order();
  QSeries one = QSeries::constant(1, n);
  return log_series(s.a2) * Q(1, 2) - (s.a2 - one) * (QSeries::constant(9, n) - s.a2) * Q(1, 24);
}

QSeries two_point(const PlanarState& s) {
  int n = s.a2.order();
  return s.a2 * (QSeries::constant(4, n) - s.a2) * inverse(s.t) * Q(1, 3);
}

QSeries four_point(const PlanarState& s) {
  int n = s.a2.order();
  QSeries a4 = s.a2 * s.a2;
  QSeries ti = inverse(s.t);
  return a4 * (QSeries::constant(1, n) - s.a2) * (s.a2 * Q(2) - QSeries::constant(5, n)) * ti * ti * Q(1, 9);
}

PlanarState renormalize_t(int order) {
  // (y-1)(4-y)^2 - 27g = y^3 - 9y^2 + 24y - 16 - 27g
  std::vector<QSeries> p{QSeries::constant(-16, order) - QSeries::var(order) * Q(27), QSeries::constant(24, order),
                         QSeries::constant(-9, order), QSeries::constant(1, order)};
  QSeries a2 = solve_algebraic(p, Q(1));
  QSeries t = a2 * (QSeries::constant(4, order) - a2) * Q(1, 3);
  return {t, a2};
}

QSeries renormalized_gamma(int order) {
  QSeries a2 = renormalize_t(order).a2;
  QSeries d = QSeries::constant(4, order) - a2;
  return (QSeries::constant(5, order) - a2 * Q(2)) * (a2 - QSeries::constant(1, order)) * inverse(d * d);
}

QSeries renormalized_free_energy(int order) {
  QSeries a2 = renormalize_t(order).a2;
  QSeries d = (QSeries::constant(4, order) - a2) * Q(1, 3);
  QSeries a4 = a2 * a2, a6 = a4 * a2;
  QSeries poly = a6 * Q(4) - a4 * Q(9) + a2 * Q(42) - QSeries::constant(37, order);
  return -log_series(d) - poly * Q(1, 108);
}

Q c_coefficient(int l) {
  if (l < 1) throw std::domain_error("c_l needs l >= 1");
  static std::mutex mu;
  static std::map<int, Q> memo;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = memo.find(l); it != memo.end()) return it->second;
  long m = l - 1;  // c_{m+1} from the sum over m/2 <= q <= m
  Q s = 0;
  for (long q = (m + 1) / 2; q <= m; ++q) {
    Q term = factorial(m + q) / (factorial(2 * q - m) * factorial(m - q));
    Z p4;
    mpz_ui_pow_ui(p4.get_mpz_t(), 4, m - q);
    term /= Q(p4);
    if ((m - q) % 2) term = -term;
    s += term;
  }
  Q c = s / Q(3 * m + 1);
  memo[l] = c;
  return c;
}

QSeries gamma_2l(int l, const QSeries& A) {
  if (l < 2) throw std::domain_error("gamma_2l needs l >= 2");
  int n = A.order();
  QSeries am2 = A - QSeries::constant(2, n);
  QSeries lin = QSeries::constant(3 * l - 2, n) - A * Q(l - 1);
  return pow_int(am2, l - 1) * lin * (c_coefficient(l) / factorial(l));
}

Density::Density(double gg) : g(gg) {
  if (!(gg > 0 && gg < 1.0 / 12)) throw std::domain_error("density needs 0 < g < 1/12");
  a2 = (1 - std::sqrt(1 - 12 * g)) / (6 * g);
}

double Density::edge() const { return 2 * std::sqrt(a2); }

double Density::operator()(double x) const {
  double r = 4 * a2 - x * x;
  if (r <= 0) return 0;
  return (1 - 2 * g * a2 - g * x * x) * std::sqrt(r) / (2 * M_PI);
}

double Density::moment(int p) const {
  boost::math::quadrature::tanh_sinh<double> ts;
  double e = edge();
  return ts.integrate([&](double x) { return (*this)(x) * std::pow(x, 2 * p); }, -e, e);
}

}  // namespace knotmm
