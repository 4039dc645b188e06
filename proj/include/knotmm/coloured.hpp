#pragma once

#include <map>
#include <string>

#include "knotmm/json_io.hpp"
#include "knotmm/loop_solver.hpp"
#include "knotmm/ratfunc.hpp"
#include "knotmm/series.hpp"

namespace knotmm {

// Bare two-coupling correlators E_pi(g1, g2) for the 2-, 4- and (optionally)
// 6-point classes, keyed by canonical pattern.  g2 enters the renormalized
// model at order g^3, so the truncation weights it by w2 = 3.
struct BareCorrelators {
  int order = 0;
  int w2 = 3;
  std::map<Pattern, BiSeries<Poly>> E;
  const BiSeries<Poly>& at(const Pattern& p) const;
};
BareCorrelators bare_correlators(int order, bool six_point = true, int w2 = 3);
BareCorrelators bare_correlators_at(const Q& tau, int order, bool six_point = true, int w2 = 3);

// Renormalized O(tau) model: (g1, g2, t) as series in the renormalized g with
// Delta = 1, g1 = g(1 - H+ - H-), g2 = -g(H0/tau + (1/2 - 1/tau)H+ - H-/2).
// C = RatFunc keeps tau symbolic; C = Q works at one tau (not 0, 1 or -2).
template <class C>
struct ColouredRenorm {
  int order = 0;
  C tau;
  Series<C> g1, g2, t;
  Series<C> x1, x2;  // g1/t^2, g2/t^2
  Series<C> Delta, Gamma0, GammaPlus, GammaMinus;
  Series<C> I1234, I1324;  // I_(12)(34), I_(13)(24)
  int iterations = 0;
};

ColouredRenorm<RatFunc> renormalize(const BareCorrelators& bare, int order);
ColouredRenorm<Q> renormalize_at(const BareCorrelators& bare, const Q& tau, int order);

// Connected flype-class series I^c_pi for 4- and 6-point patterns: I_pi = W E
// (E composed with the bare couplings), minus products of connected parts
// over splittings of pi into mutually non-interleaved blocks.
Series<RatFunc> connected_series(const ColouredRenorm<RatFunc>& r, const BareCorrelators& bare, const Pattern& pi);
QSeries connected_series_at(const ColouredRenorm<Q>& r, const BareCorrelators& bare, const Pattern& pi);
// Generic result as polynomials in tau (throws if a coefficient is not).
TauSeries flype_class_series(const ColouredRenorm<RatFunc>& r, const BareCorrelators& bare, const Pattern& pi);
Series<Poly> to_tau_series(const Series<RatFunc>& s);

// The 4- and 6-point classes reported in the coloured output.
std::vector<Pattern> coloured_classes();

struct TauOneReport {
  int order = 0;
  QSeries two_tangle_lhs, two_tangle_rhs;  // 2 I^c(12)(34) + I^c(13)(24) vs Gamma-tilde
  QSeries six_lhs, six_rhs;                // six-point combination vs Gamma_6
  bool two_tangle_ok = false, six_ok = false;
};
TauOneReport tau_one_crosschecks(const ColouredRenorm<RatFunc>& r, const BareCorrelators& bare, int order);

json coloured_json(const ColouredRenorm<RatFunc>& r, const BareCorrelators& bare);
json coloured_json_at(const ColouredRenorm<Q>& r, const BareCorrelators& bare);

}  // namespace knotmm
