#include "knotmm/asymptotics.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace knotmm {

namespace {

void fit_window(const QSeries& s, int lo, int hi, double& mu, double& alpha, double& beta, double& rms) {
  if (lo < 2 || hi > s.order() || hi - lo + 1 < 3)
    throw std::domain_error("ratio fit needs at least 3 ratios inside the series");
  int m = hi - lo + 1;
  Eigen::MatrixXd A(m, 3);
  Eigen::VectorXd b(m);
  for (int p = lo; p <= hi; ++p) {
    const Q &a = s[p - 1], &c = s[p];
    if (a <= 0 || c <= 0) throw std::domain_error("non-positive coefficient in the fit window");
    Q r = c / a;
    int i = p - lo;
    A(i, 0) = 1;
    A(i, 1) = 1.0 / p;
    A(i, 2) = 1.0 / (static_cast<double>(p) * p);
    b(i) = r.get_d();
  }
  Eigen::Vector3d x = A.colPivHouseholderQr().solve(b);
  mu = x(0);
  alpha = x(1) / mu;
  beta = x(2) / mu;
  rms = std::sqrt((A * x - b).squaredNorm() / m);
}

}  // namespace

AsymptoticFit fit_growth_exponent(const QSeries& s, int lo, int hi) {
  AsymptoticFit f;
  f.lo = lo;
  f.hi = hi;
  fit_window(s, lo, hi, f.growth, f.exponent, f.beta, f.rms_residual);
  double b, r;
  fit_window(s, lo - 2, hi - 2, f.shifted_growth, f.shifted_exponent, b, r);
  return f;
}

AsymptoticFit fit_tail(const QSeries& s, int width) {
  return fit_growth_exponent(s, s.order() - width + 1, s.order());
}

ConjecturedExponent conjectured_exponent(double tau) {
  ConjecturedExponent e;
  e.tau = tau;
  e.in_regime = std::abs(tau) < 2;
  double d = (2 - tau) * (26 - tau);
  if (d >= 0) {
    e.gamma = (tau - 2 - std::sqrt(d)) / 12;
    e.tangle_exponent = *e.gamma - 2;
  }
  return e;
}

double knot_exponent() { return -(19 + std::sqrt(13.0)) / 6; }

std::vector<ReferenceConstant> reference_constants() {
  return {
      {"bare free energy growth", "12", 12.0},
      {"renormalized free energy growth", "27/4", 6.75},
      {"flype-class 2-tangle growth", "(101+sqrt(21001))/40", (101 + std::sqrt(21001.0)) / 40},
      {"tau=2 growth", "", 6.28329764},
      {"knot exponent", "-(19+sqrt(13))/6", knot_exponent()},
  };
}

json fit_to_json(const std::string& name, const AsymptoticFit& f) {
  return json{{"series", name},
              {"growth", f.growth},
              {"exponent", f.exponent},
              {"window", {f.lo, f.hi}},
              {"diagnostics",
               {{"beta", f.beta},
                {"rms_residual", f.rms_residual},
                {"shifted_growth", f.shifted_growth},
                {"shifted_exponent", f.shifted_exponent}}}};
}

json exponent_to_json(const ConjecturedExponent& e) {
  json j{{"tau", e.tau}, {"in_regime", e.in_regime}};
  j["gamma"] = e.gamma ? json(*e.gamma) : json(nullptr);
  j["tangle_exponent"] = e.tangle_exponent ? json(*e.tangle_exponent) : json(nullptr);
  return j;
}

}  // namespace knotmm
