#pragma once

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotmm/json_io.hpp"
#include "knotmm/patterns.hpp"
#include "knotmm/series.hpp"
#include "knotmm/weingarten.hpp"

namespace knotmm {

// Series in two couplings g1, g2 truncated by weight a + w2*b <= order.
// coeffs[m][b] is the coefficient of g1^(m - w2*b) g2^b.
template <class C>
struct BiSeries {
  int order = 0;
  int w2 = 1;
  std::vector<std::vector<C>> coeffs;

  BiSeries() = default;
  BiSeries(int n, int weight) : order(n), w2(weight), coeffs(n + 1) {
    for (int m = 0; m <= n; ++m) coeffs[m].assign(m / w2 + 1, C(0));
  }
  C at(int a, int b) const {
    int m = a + w2 * b;
    if (a < 0 || b < 0 || m > order) return C(0);
    return coeffs[m][b];
  }
  // g2 = 0 slice as a series in g1
  Series<C> g1_series() const {
    std::vector<C> c;
    for (int m = 0; m <= order; ++m) c.push_back(coeffs[m][0]);
    return Series<C>(order, c);
  }
  friend bool operator==(const BiSeries& x, const BiSeries& y) {
    return x.order == y.order && x.w2 == y.w2 && x.coeffs == y.coeffs;
  }
};

// Planar loop equations for the external-connectivity correlators E_pi at
// one value of tau (Fixed), in the tau -> 0 limit (Zero, returning E/tau), or
// with the additional tangency coupling g2 (two_coupling).
class LoopSolver {
 public:
  struct Options {
    WMode mode = WMode::Fixed;
    Q tau = 0;
    bool two_coupling = false;
    int w2 = 1;  // weight of g2 in the truncation
    const WeingartenCache* cache = nullptr;
  };
  explicit LoopSolver(Options opt);

  // coefficient vector over b at weight m
  const std::vector<Q>& coefficient(const Pattern& p, int m);
  QSeries solve(const Pattern& p, int order);  // g2 = 0
  BiSeries<Q> solve_bivariate(const Pattern& p, int order);

  size_t pattern_count() const { return entries_.size(); }
  const Options& options() const { return opt_; }

 private:
  struct Term {
    int c1, c2;
    Q w;
  };
  struct Entry {
    Pattern p;
    bool has_recipe = false;
    int arch = -1, tang_a = -1, tang_b = -1;
    Q constant0 = 0;  // extra order-0 term (tau -> 0 limit of the closed loop)
    std::vector<Term> terms;
    std::deque<std::vector<Q>> coef;
  };

  int id_of(const Pattern& canon);
  void build_recipe(int id);
  const std::vector<Q>& get(int id, int m);
  const WeingartenTable& table(int k);

  Options opt_;
  std::deque<Entry> entries_;
  std::unordered_map<std::string, int> ids_;
  std::map<int, WeingartenTable> tables_;
};

// Boundary moves used by the loop equation (0-based, leg 0 is "leg 1").
Pattern arch_insert(const Pattern& p);
Pattern tangency_a(const Pattern& p);
Pattern tangency_b(const Pattern& p);

QSeries solve_E(const Pattern& p, int order, const Q& tau);
QSeries solve_E_tau_zero(const Pattern& p, int order);
BiSeries<Q> solve_E_two_coupling(const Pattern& p, int order, const Q& tau, int w2 = 1);

// Generic tau by exact interpolation over sample values of tau at which every
// Gram matrix involved is invertible.  Each coefficient of E_pi with k pairs at
// g1^a g2^b has degree <= k + a + b in tau; the interpolant is rejected if it
// exceeds that bound.
std::vector<Q> generic_sample_points(int count);
std::vector<TauSeries> solve_E_generic(const std::vector<Pattern>& ps, int order);
std::vector<BiSeries<Poly>> solve_E_two_coupling_generic(const std::vector<Pattern>& ps, int order, int w2);

// I = W E over all (2k-1)!! patterns of size 2k.
std::map<Pattern, QSeries> E_to_I(const std::map<Pattern, QSeries>& E, int k, const Q& tau);
std::map<Pattern, TauSeries> E_to_I_generic(const std::map<Pattern, TauSeries>& E, int k);

json bi_series_to_json(const BiSeries<Q>& s);
json bi_series_to_json(const BiSeries<Poly>& s);

struct CorrelatorEntry {
  Pattern pattern;
  json series;
};
json correlator_table_json(const std::string& model, const std::string& tau, int order,
                           const std::vector<CorrelatorEntry>& entries);

}  // namespace knotmm
