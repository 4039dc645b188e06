#include "knotmm/flype.hpp"

#include "knotmm/planar.hpp"

namespace knotmm {

std::vector<QSeries> A_quintic(int order) {
  QSeries g = QSeries::var(order);
  QSeries one = QSeries::constant(1, order);
  // (g^2-2g-1)/(g-1) expanded around g = 0
  QSeries num = g * g - g * Q(2) - one;
  QSeries rat = num * inverse(g - one);
  return {QSeries::constant(-32, order), QSeries::constant(64, order), QSeries::constant(-32, order), rat * Q(4),
          g * Q(-6), g};
}

QSeries solve_A(int order) { return solve_algebraic(A_quintic(order), Q(2)); }

QSeries gamma_tilde_of(const QSeries& A) {
  int n = A.order();
  return (A - QSeries::constant(2, n)) * (QSeries::constant(4, n) - A) * Q(1, 4);
}

QSeries g0_of(const QSeries& A) {
  int n = A.order();
  QSeries ai = inverse(A);
  return (A - QSeries::constant(2, n)) * ai * ai * ai * Q(4);
}

QSeries gamma_tilde(int order) { return gamma_tilde_of(solve_A(order)); }
QSeries g0_of_g(int order) { return g0_of(solve_A(order)); }

H2PI h2pi_decomposition(int order) {
  QSeries one = QSeries::constant(1, order);
  QSeries g = QSeries::var(order);
  QSeries gam = renormalized_gamma(order);
  QSeries H = gam * inverse(one + gam);
  QSeries gt = gamma_tilde(order);
  QSeries x = gt - g - g * gt;
  return {H, x * inverse(one + x)};
}

FlypeState flype_state(int order) {
  QSeries A = solve_A(order);
  return {A, g0_of(A), gamma_tilde_of(A), h2pi_decomposition(order).H_tilde_prime};
}

QSeries g00_residual(const QSeries& g0, const QSeries& gamma) {
  int n = std::min(g0.order(), gamma.order());
  QSeries one = QSeries::constant(1, n);
  QSeries g = QSeries::var(n);
  QSeries gc = compose(gamma.truncated(n), g0.truncated(n));
  QSeries rhs = g * (inverse((one - g) * (one + gc)) * Q(2) - one);
  return g0.truncated(n) - rhs;
}

}  // namespace knotmm
