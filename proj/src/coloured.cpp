#include "knotmm/coloured.hpp"

#include <algorithm>
#include <stdexcept>

#include "knotmm/flype.hpp"
#include "knotmm/planar.hpp"
#include "knotmm/weingarten.hpp"

namespace knotmm {

namespace {

Pattern pat(const char* s) { return canonical(pattern_from_string(s)); }

std::vector<Pattern> six_point_classes() {
  std::vector<Pattern> seen;
  for (auto& p : enumerate_patterns(3)) {
    auto c = canonical(p);
    if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
  }
  return seen;
}

std::vector<Pattern> required_patterns(bool six_point) {
  std::vector<Pattern> ps{pat("(12)"), pat("(12)(34)"), pat("(13)(24)")};
  if (six_point)
    for (auto& c : six_point_classes()) ps.push_back(c);
  return ps;
}

Q coef(const Poly& p, const Q& tau) { return p.eval(tau); }
RatFunc coef(const Poly& p, const RatFunc&) { return RatFunc(p); }

template <class C>
struct Composer {
  int n;
  C tau;
  std::vector<Series<C>> x1p, x2p;
  Composer(const Series<C>& x1, const Series<C>& x2, int n_, int w2, const C& t) : n(n_), tau(t) {
    if (x1.valuation() < 1) throw std::logic_error("g1/t^2 must vanish at g = 0");
    if (!x2.is_zero() && x2.valuation() < w2)
      throw std::logic_error("g2/t^2 starts below the order assumed by the g2-weighted truncation");
    x1p.push_back(Series<C>::constant(C(1), n));
    x2p.push_back(Series<C>::constant(C(1), n));
    for (int i = 1; i <= n; ++i) x1p.push_back(x1p.back() * x1);
    for (int i = 1; i * w2 <= n; ++i) x2p.push_back(x2p.back() * x2);
  }
  Series<C> operator()(const BiSeries<Poly>& E) const {
    Series<C> r(n);
    for (int m = 0; m <= n; ++m)
      for (int b = 0; b < static_cast<int>(E.coeffs[m].size()); ++b) {
        const Poly& c = E.coeffs[m][b];
        if (c.is_zero()) continue;
        int a = m - E.w2 * b;
        r += x1p[a] * x2p[b] * coef(c, tau);
      }
    return r;
  }
};

template <class C>
bool is_zero_c(const C& x) {
  return coeff_is_zero(x);
}

template <class C>
ColouredRenorm<C> renormalize_impl(const BareCorrelators& bare, const C& tau, int n) {
  if (n < 1) throw std::domain_error("renormalization needs order >= 1");
  if (bare.order < n) throw std::domain_error("bare correlators are truncated below the requested order");
  C det = tau * tau * (tau - C(1)) * (tau + C(2));
  if (is_zero_c(det) || is_zero_c(tau))
    throw std::domain_error("the 4-point Gram matrix is singular at this tau (tau = 0, 1, -2)");
  C inv_tau = inverse(tau), inv_det = inverse(det);
  using S = Series<C>;
  S g = S::var(n), one = S::constant(C(1), n);
  S g1 = g, g2(n), t = one;
  const auto& E2 = bare.at(pat("(12)"));
  const auto& Ea = bare.at(pat("(12)(34)"));
  const auto& Ec = bare.at(pat("(13)(24)"));
  ColouredRenorm<C> r;
  r.order = n;
  r.tau = tau;
  for (int it = 1; it <= n + 6; ++it) {
    S tinv = inverse(t), tinv2 = tinv * tinv;
    S x1 = g1 * tinv2, x2 = g2 * tinv2;
    Composer<C> comp(x1, x2, n, bare.w2, tau);
    S e2 = comp(E2) * tinv, ea = comp(Ea) * tinv2, ec = comp(Ec) * tinv2;
    S Delta = e2 * inv_tau;
    S Ia = (ea * (tau * tau) - ec * tau) * inv_det;
    S Ic = (ec * (tau * tau + tau) - ea * (C(2) * tau)) * inv_det;
    S D2 = Delta * Delta;
    S G0 = (ea - D2 * (tau * (tau + C(1)))) * inv_tau;
    S Gp = Ia - D2 + Ic, Gm = Ia - D2 - Ic;
    auto H = [&](const S& Gam, int sign) {
      S lin = one - g * C(sign);
      return one - inverse(lin * (one + Gam));
    };
    S H0 = H(G0, 1), Hp = H(Gp, 1), Hm = H(Gm, -1);
    S g1n = g * (one - Hp - Hm);
    S g2n = -(g * (H0 * inv_tau + Hp * (C(Q(1, 2)) - inv_tau) - Hm * C(Q(1, 2))));
    S tn = t * Delta;
    r.iterations = it;
    if (g1n == g1 && g2n == g2 && tn == t) {
      if (Delta != one) throw std::logic_error("renormalization converged without Delta = 1");
      r.g1 = g1;
      r.g2 = g2;
      r.t = t;
      r.x1 = x1;
      r.x2 = x2;
      r.Delta = Delta;
      r.Gamma0 = G0;
      r.GammaPlus = Gp;
      r.GammaMinus = Gm;
      r.I1234 = Ia;
      r.I1324 = Ic;
      return r;
    }
    g1 = g1n;
    g2 = g2n;
    t = tn;
  }
  throw std::logic_error("renormalization did not reach a fixed point");
}

// chords of p as (a, b) with a < b, in order of a
std::vector<std::pair<int, int>> chords(const Pattern& p) {
  std::vector<std::pair<int, int>> c;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] > i) c.emplace_back(i, p[i]);
  return c;
}

Pattern sub_pattern(const std::vector<std::pair<int, int>>& cs) {
  std::vector<int> pts;
  for (auto [a, b] : cs) {
    pts.push_back(a);
    pts.push_back(b);
  }
  std::sort(pts.begin(), pts.end());
  auto pos = [&](int x) { return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin()); };
  Pattern q(pts.size());
  for (auto [a, b] : cs) {
    q[pos(a)] = static_cast<uint8_t>(pos(b));
    q[pos(b)] = static_cast<uint8_t>(pos(a));
  }
  return q;
}

bool interleaved(const std::vector<std::pair<int, int>>& A, const std::vector<std::pair<int, int>>& B) {
  std::vector<int> pa, pb;
  for (auto [a, b] : A) {
    pa.push_back(a);
    pa.push_back(b);
  }
  for (auto [a, b] : B) {
    pb.push_back(a);
    pb.push_back(b);
  }
  // A and B are non-interleaved iff all of B lies in one gap between
  // consecutive points of A (cyclically).
  std::sort(pa.begin(), pa.end());
  auto gap = [&](int x) { return static_cast<int>(std::lower_bound(pa.begin(), pa.end(), x) - pa.begin()) % static_cast<int>(pa.size()); };
  int g0 = gap(pb[0]);
  for (int x : pb)
    if (gap(x) != g0) return true;
  return false;
}

void set_partitions(int n, std::vector<std::vector<std::vector<int>>>& out) {
  std::vector<std::vector<int>> cur;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      self(self, i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    self(self, i + 1);
    cur.pop_back();
  };
  rec(rec, 0);
}

template <class C>
Series<C> six_point_I(const ColouredRenorm<C>& r, const BareCorrelators& bare, const Pattern& pi,
                      const std::vector<C>& w, const CosetAlgebra& alg) {
  int n = r.order;
  Composer<C> comp(r.x1, r.x2, n, bare.w2, r.tau);
  Series<C> tinv = inverse(r.t), tinv3 = tinv * tinv * tinv;
  std::map<Pattern, Series<C>> classes;
  Series<C> acc(n);
  for (auto& s : enumerate_patterns(3)) {
    auto c = canonical(s);
    auto it = classes.find(c);
    if (it == classes.end()) it = classes.emplace(c, comp(bare.at(c)) * tinv3).first;
    const C& wv = w[alg.index_of(coset_type(pi, s))];
    if (!is_zero_c(wv)) acc += it->second * wv;
  }
  return acc;
}

template <class C>
Series<C> connected_impl(const ColouredRenorm<C>& r, const BareCorrelators& bare, const Pattern& pi,
                         const std::vector<C>& w3, const CosetAlgebra& alg3) {
  auto cs = chords(pi);
  int k = static_cast<int>(cs.size());
  Series<C> I;
  if (k == 1) {
    I = r.Delta;
  } else if (k == 2) {
    I = canonical(pi) == pat("(13)(24)") ? r.I1324 : r.I1234;
  } else if (k == 3) {
    I = six_point_I(r, bare, pi, w3, alg3);
  } else {
    throw std::domain_error("connected series implemented for up to 6 legs");
  }
  std::vector<std::vector<std::vector<int>>> parts;
  set_partitions(k, parts);
  for (auto& blocks : parts) {
    if (blocks.size() < 2) continue;
    std::vector<std::vector<std::pair<int, int>>> bc;
    for (auto& b : blocks) {
      bc.emplace_back();
      for (int i : b) bc.back().push_back(cs[i]);
    }
    bool ok = true;
    for (size_t i = 0; i < bc.size() && ok; ++i)
      for (size_t j = i + 1; j < bc.size() && ok; ++j)
        if (interleaved(bc[i], bc[j])) ok = false;
    if (!ok) continue;
    Series<C> prod = Series<C>::constant(C(1), r.order);
    for (auto& b : bc) prod = prod * connected_impl(r, bare, sub_pattern(b), w3, alg3);
    I -= prod;
  }
  return I;
}

}  // namespace

const BiSeries<Poly>& BareCorrelators::at(const Pattern& p) const {
  auto it = E.find(canonical(p));
  if (it == E.end()) throw std::invalid_argument("bare correlator not computed: " + pattern_to_string(p));
  return it->second;
}

BareCorrelators bare_correlators(int order, bool six_point, int w2) {
  BareCorrelators b;
  b.order = order;
  b.w2 = w2;
  auto ps = required_patterns(six_point);
  auto es = solve_E_two_coupling_generic(ps, order, w2);
  for (size_t i = 0; i < ps.size(); ++i) b.E[ps[i]] = es[i];
  return b;
}

BareCorrelators bare_correlators_at(const Q& tau, int order, bool six_point, int w2) {
  BareCorrelators b;
  b.order = order;
  b.w2 = w2;
  LoopSolver s({WMode::Fixed, tau, true, w2});
  for (auto& p : required_patterns(six_point)) {
    auto e = s.solve_bivariate(p, order);
    BiSeries<Poly> c(order, w2);
    for (int m = 0; m <= order; ++m)
      for (size_t j = 0; j < e.coeffs[m].size(); ++j) c.coeffs[m][j] = Poly(e.coeffs[m][j]);
    b.E[p] = c;
  }
  return b;
}

ColouredRenorm<RatFunc> renormalize(const BareCorrelators& bare, int order) {
  return renormalize_impl<RatFunc>(bare, RatFunc::tau(), order);
}

ColouredRenorm<Q> renormalize_at(const BareCorrelators& bare, const Q& tau, int order) {
  return renormalize_impl<Q>(bare, tau, order);
}

Series<RatFunc> connected_series(const ColouredRenorm<RatFunc>& r, const BareCorrelators& bare, const Pattern& pi) {
  auto w = weingarten(3, WMode::Generic);
  return connected_impl(r, bare, pi, w.generic, *w.algebra);
}

QSeries connected_series_at(const ColouredRenorm<Q>& r, const BareCorrelators& bare, const Pattern& pi) {
  std::vector<Q> w3;
  auto alg = coset_algebra(3);
  if (pi.size() == 6) {
    auto w = weingarten(3, WMode::Fixed, r.tau);
    if (w.pseudo_inverse)
      throw std::domain_error("the 6-point Gram matrix is singular at tau = " + q_to_string(r.tau));
    w3 = w.values;
  }
  return connected_impl(r, bare, pi, w3, *alg);
}

Series<Poly> to_tau_series(const Series<RatFunc>& s) {
  return s.map([](const RatFunc& x) { return x.to_poly(); });
}

TauSeries flype_class_series(const ColouredRenorm<RatFunc>& r, const BareCorrelators& bare, const Pattern& pi) {
  return to_tau_series(connected_series(r, bare, pi));
}

std::vector<Pattern> coloured_classes() {
  std::vector<Pattern> out;
  for (const char* s : {"(12)(34)", "(13)(24)", "(14)(25)(36)", "(14)(26)(35)", "(12)(35)(46)", "(14)(23)(56)",
                        "(12)(34)(56)"})
    out.push_back(pattern_from_string(s));
  return out;
}

TauOneReport tau_one_crosschecks(const ColouredRenorm<RatFunc>& r, const BareCorrelators& bare, int order) {
  if (order > r.order) throw std::domain_error("cross-check order beyond the renormalized order");
  auto at1 = [&](const char* s) {
    return flype_class_series(r, bare, pattern_from_string(s)).truncated(order).map([](const Poly& p) {
      return p.eval(Q(1));
    });
  };
  TauOneReport rep;
  rep.order = order;
  rep.two_tangle_lhs = at1("(12)(34)") * Q(2) + at1("(13)(24)");
  rep.two_tangle_rhs = gamma_tilde(order);
  rep.six_lhs = at1("(14)(25)(36)") + at1("(14)(26)(35)") * Q(3) + at1("(12)(35)(46)") * Q(6) +
                at1("(14)(23)(56)") * Q(3) + at1("(12)(34)(56)") * Q(2);
  rep.six_rhs = gamma_2l(3, solve_A(order));
  rep.two_tangle_ok = rep.two_tangle_lhs == rep.two_tangle_rhs;
  rep.six_ok = rep.six_lhs == rep.six_rhs;
  return rep;
}

json coloured_json(const ColouredRenorm<RatFunc>& r, const BareCorrelators& bare) {
  json classes = json::array();
  for (auto& p : coloured_classes()) {
    if (p.size() == 6 && bare.E.find(canonical(p)) == bare.E.end()) continue;
    classes.push_back({{"pattern", pattern_to_one_based(p)}, {"series", series_to_json(flype_class_series(r, bare, p))}});
  }
  return json{{"model", "coloured"},
              {"tau", "generic"},
              {"order", r.order},
              {"g1", series_to_json(to_tau_series(r.g1))},
              {"g2", series_to_json(to_tau_series(r.g2))},
              {"t", series_to_json(to_tau_series(r.t))},
              {"classes", classes}};
}

json coloured_json_at(const ColouredRenorm<Q>& r, const BareCorrelators& bare) {
  json classes = json::array();
  bool six = weingarten(3, WMode::Fixed, r.tau).pseudo_inverse == false;
  for (auto& p : coloured_classes()) {
    if (p.size() == 6 && (!six || bare.E.find(canonical(p)) == bare.E.end())) continue;
    classes.push_back({{"pattern", pattern_to_one_based(p)}, {"series", series_to_json(connected_series_at(r, bare, p))}});
  }
  return json{{"model", "coloured"},
              {"tau", q_to_string(r.tau)},
              {"order", r.order},
              {"g1", series_to_json(r.g1)},
              {"g2", series_to_json(r.g2)},
              {"t", series_to_json(r.t)},
              {"six_point_gram_singular", !six},
              {"classes", classes}};
}

}  // namespace knotmm
