#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotmm/json_io.hpp"
#include "knotmm/series.hpp"

namespace knotmm {

// c_p ~ C mu^p p^alpha.  Ratios r_p = c_p / c_(p-1) are fitted by least squares
// to mu (1 + alpha/p + beta/p^2) over p in [lo, hi].
struct AsymptoticFit {
  int lo = 0, hi = 0;
  double growth = 0;    // mu
  double exponent = 0;  // alpha
  double beta = 0;
  double rms_residual = 0;
  // same fit with the window moved down by 2
  double shifted_growth = 0, shifted_exponent = 0;
};

AsymptoticFit fit_growth_exponent(const QSeries& s, int lo, int hi);
// Window [order - width + 1, order].
AsymptoticFit fit_tail(const QSeries& s, int width);

// gamma(tau) = (tau - 2 - sqrt((2 - tau)(26 - tau)))/12, conjectured for
// |tau| < 2; the value is real for tau <= 2 and tau >= 26.
struct ConjecturedExponent {
  double tau = 0;
  bool in_regime = false;
  std::optional<double> gamma;          // string susceptibility
  std::optional<double> tangle_exponent;  // gamma - 2
};
ConjecturedExponent conjectured_exponent(double tau);
double knot_exponent();  // -(19 + sqrt 13)/6

struct ReferenceConstant {
  std::string name;
  std::string exact;  // empty when only a decimal is known
  double value;
};
std::vector<ReferenceConstant> reference_constants();

json fit_to_json(const std::string& name, const AsymptoticFit& f);
json exponent_to_json(const ConjecturedExponent& e);

}  // namespace knotmm
