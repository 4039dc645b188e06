#pragma once

#include "knotmm/series.hpp"

namespace knotmm {

struct FlypeState {
  QSeries A;              // 6/(4-a^2) in the renormalized model
  QSeries g0;             // bare coupling as a function of the flype-class coupling
  QSeries gamma_tilde;    // flype classes of prime 2-tangles
  QSeries H_tilde_prime;  // nontrivial H2PI flype classes
};

// Root A(g) -> 2 of
// A^5 g - 6A^4 g + 4A^3 (g^2-2g-1)/(g-1) - 32A^2 + 64A - 32 = 0.
QSeries solve_A(int order);
// The quintic's coefficient list (ascending powers of A).
std::vector<QSeries> A_quintic(int order);

QSeries gamma_tilde_of(const QSeries& A);  // (A-2)(4-A)/4
QSeries g0_of(const QSeries& A);           // 4(A-2)/A^3

QSeries gamma_tilde(int order);
QSeries g0_of_g(int order);

struct H2PI {
  QSeries H;              // Gamma/(1+Gamma) from the planar model
  QSeries H_tilde_prime;  // from Gamma~ = g + g Gamma~ + H~'/(1-H~')
};
H2PI h2pi_decomposition(int order);

FlypeState flype_state(int order);

// g0 - g(-1 + 2/((1-g)(1+Gamma(g0)))), zero when the flype map is consistent.
QSeries g00_residual(const QSeries& g0, const QSeries& gamma);

}  // namespace knotmm
