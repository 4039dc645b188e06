#include "knotmm/virtual_genus.hpp"

#include <stdexcept>

#include "knotmm/flype.hpp"

namespace knotmm {

std::vector<Poly> complex_free_energy_coefficients(int max_n, int max_h, int threads) {
  GenusSeries F = vacuum_free_energy(VacuumModel::Complex, max_n, threads);
  std::vector<Poly> f(max_n + 1, Poly(std::vector<Q>{}, max_h));
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Q> c(max_h + 1);
    for (auto& [e, v] : F[n].terms()) {
      if (e > 0 || e % 2) throw std::logic_error("free energy has an N power outside N^(-2h)");
      if (-e / 2 <= max_h) c[-e / 2] = v;
    }
    f[n] = Poly(c, max_h);
  }
  return f;
}

VirtualGenus::VirtualGenus(int max_g, int max_h, int threads) : max_g_(max_g), max_h_(max_h) {
  if (max_g < 0 || max_h < 0) throw std::domain_error("negative truncation");
  f_ = complex_free_energy_coefficients(max_g + 1, max_h, threads);
  build();
}

VirtualGenus::VirtualGenus(std::vector<Poly> f, int max_g, int max_h)
    : max_g_(max_g), max_h_(max_h), f_(std::move(f)) {
  if (static_cast<int>(f_.size()) < max_g + 2) throw std::domain_error("need f_n up to n = max_g + 1");
  for (auto& p : f_) p = p.with_cap(max_h);
  build();
}

void VirtualGenus::build() {
  int n = max_g_ + 1;
  Poly one = Poly(std::vector<Q>{1}, max_h_);
  // u = 1/t solves u + sum 2n f_n g^n u^(2n+1) - 1 = 0
  std::vector<DoubleSeries> P(2 * n + 2, DoubleSeries(n));
  P[0][0] = -one;
  P[1][0] = one;
  for (int k = 1; k <= n; ++k) P[2 * k + 1][k] = f_[k] * Q(2 * k);
  DoubleSeries u = solve_algebraic(P, one);
  t_ = inverse(u).truncated(max_g_);
  // Gamma = 2 sum n f_n g^(n-1) u^(2n) - 2
  DoubleSeries un = u.truncated(max_g_), u2 = un * un, pw = DoubleSeries::constant(one, max_g_);
  gamma_ = DoubleSeries::constant(one * Q(-2), max_g_);
  for (int k = 1; k <= n; ++k) {
    pw = pw * u2;
    DoubleSeries term(max_g_);
    term[k - 1] = f_[k] * Q(2 * k);
    gamma_ += term * pw;
  }
}

QSeries VirtualGenus::gamma_h(int h) const {
  if (h < 0 || h > max_h_) throw std::domain_error("genus outside the computed range");
  return gamma_.map([h](const Poly& p) { return p.coeff(h); });
}

QSeries VirtualGenus::flype_quotient_h(int h) const { return compose(gamma_h(h), g0_of_g(max_g_)); }

json VirtualGenus::to_json() const {
  json gam = json::array(), flyped = json::array(), fs = json::array();
  for (int h = 0; h <= max_h_; ++h) {
    gam.push_back({{"h", h}, {"series", series_to_json(gamma_h(h))}});
    flyped.push_back({{"h", h}, {"series", series_to_json(flype_quotient_h(h))}});
  }
  for (int k = 1; k < static_cast<int>(f_.size()); ++k) fs.push_back({{"n", k}, {"eps_polynomial", to_json_value(f_[k])}});
  return json{{"model", "complex"},
              {"max_g", max_g_},
              {"max_h", max_h_},
              {"free_energy", fs},
              {"gamma", gam},
              {"gamma_tilde", flyped}};
}

}  // namespace knotmm
