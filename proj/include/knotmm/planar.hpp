#pragma once

#include "knotmm/series.hpp"

namespace knotmm {

// Planar quartic one-matrix model with weight exp N[-t/2 tr M^2 + g/4 tr M^4].
struct PlanarState {
  QSeries t;
  QSeries a2;
};

// a^2 from 3(g/t^2) a^4 - a^2 + 1 = 0, branch with a^2(0) = 1.
QSeries solve_a2(const QSeries& t);
PlanarState planar_state(const QSeries& t);

// Closed sum over p of (3g/t^2)^p (2p-1)!/(p!(p+2)!).
QSeries free_energy_closed(const QSeries& t);
// 1/2 log a^2 - (a^2-1)(9-a^2)/24.
QSeries free_energy_a2(const PlanarState& s);

QSeries two_point(const PlanarState& s);   // a^2(4-a^2)/(3t)
QSeries four_point(const PlanarState& s);  // a^4(1-a^2)(2a^2-5)/(9t^2)

// t(g) with two_point == 1.  Uses the eliminant (a^2-1)(4-a^2)^2 = 27g for
// a^2 and then t = a^2(4-a^2)/3.
PlanarState renormalize_t(int order);

// Renormalized Gamma(g) = (5-2a^2)(a^2-1)/(4-a^2)^2 and the matching
// free energy F(g) with 2 dF/dg = Gamma, in closed form
// log(3/(4-a^2)) - (4a^6 - 9a^4 + 42a^2 - 37)/108.
QSeries renormalized_gamma(int order);
QSeries renormalized_free_energy(int order);

// c_l of the 2l-point flype-class formula (memoized, exact).
Q c_coefficient(int l);
// Gamma_{2l} = (c_l/l!) (A-2)^{l-1} (3l-2-(l-1)A), l >= 2.
QSeries gamma_2l(int l, const QSeries& A);

// Eigenvalue density at t = 1 and a real coupling g in (0, 1/12):
// u(x) = (1 - 2g a^2 - g x^2) sqrt(4a^2 - x^2) / (2 pi) on [-2a, 2a].
struct Density {
  double g;
  double a2;
  explicit Density(double g);
  double operator()(double x) const;
  double edge() const;
  // Integral of u(x) x^{2p} by tanh-sinh quadrature.
  double moment(int p) const;
};

}  // namespace knotmm
