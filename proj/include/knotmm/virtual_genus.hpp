#pragma once

#include "knotmm/json_io.hpp"
#include "knotmm/oracle.hpp"
#include "knotmm/series.hpp"

namespace knotmm {

// Series in g whose coefficients are polynomials in eps = 1/N^2 truncated at
// eps^max_h (Poly with cap = max_h).
using DoubleSeries = Series<Poly>;

// Complex-matrix-model data for virtual tangles: f_n(eps) from the oracle,
// t(g, N) from Delta = 1, and Gamma = 2 dF/dg - 2 Delta^2.
class VirtualGenus {
 public:
  // Needs the oracle up to max_g + 1 vertices (so max_g <= 5).
  VirtualGenus(int max_g, int max_h, int threads = 1);
  // Build from given free-energy coefficients f[n] (f[0] unused).
  VirtualGenus(std::vector<Poly> f, int max_g, int max_h);

  int max_g() const { return max_g_; }
  int max_h() const { return max_h_; }
  const std::vector<Poly>& free_energy_coefficients() const { return f_; }
  const DoubleSeries& t() const { return t_; }
  const DoubleSeries& gamma() const { return gamma_; }
  QSeries gamma_h(int h) const;
  // Generalized flype map applied genus by genus: Gamma^(h)(g0(g)).
  QSeries flype_quotient_h(int h) const;
  json to_json() const;

 private:
  void build();
  int max_g_, max_h_;
  std::vector<Poly> f_;
  DoubleSeries t_, gamma_;
};

// F = sum_n f_n g^n, f_n in eps, from the complex-model oracle.
std::vector<Poly> complex_free_energy_coefficients(int max_n, int max_h, int threads = 1);

}  // namespace knotmm
