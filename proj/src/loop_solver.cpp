#include "knotmm/loop_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotmm {

namespace {

std::string key_of(const Pattern& p) { return std::string(p.begin(), p.end()); }

// copy p[1..] into q shifted by two, leaving slots 0..2 and p[0]+2 to the caller
Pattern shifted_body(const Pattern& p) {
  int n = static_cast<int>(p.size());
  Pattern q(n + 2, 0);
  for (int i = 1; i < n; ++i)
    if (p[i] != 0) q[i + 2] = static_cast<uint8_t>(p[i] + 2);
  return q;
}

}  // namespace

Pattern arch_insert(const Pattern& p) {
  if (p.empty()) throw std::invalid_argument("arch_insert: empty pattern");
  Pattern q = shifted_body(p);
  q[0] = 2;
  q[2] = 0;
  q[1] = static_cast<uint8_t>(p[0] + 2);
  q[p[0] + 2] = 1;
  return q;
}

Pattern tangency_a(const Pattern& p) {
  if (p.empty()) throw std::invalid_argument("tangency_a: empty pattern");
  Pattern q = shifted_body(p);
  q[1] = 2;
  q[2] = 1;
  q[0] = static_cast<uint8_t>(p[0] + 2);
  q[p[0] + 2] = 0;
  return q;
}

Pattern tangency_b(const Pattern& p) {
  if (p.empty()) throw std::invalid_argument("tangency_b: empty pattern");
  Pattern q = shifted_body(p);
  q[0] = 1;
  q[1] = 0;
  q[2] = static_cast<uint8_t>(p[0] + 2);
  q[p[0] + 2] = 2;
  return q;
}

LoopSolver::LoopSolver(Options opt) : opt_(std::move(opt)) {
  if (opt_.w2 < 1) throw std::invalid_argument("g2 weight must be >= 1");
  if (opt_.mode == WMode::Generic) throw std::invalid_argument("LoopSolver works at one tau; use solve_E_generic");
  if (opt_.mode == WMode::Zero) opt_.tau = 0;
}

int LoopSolver::id_of(const Pattern& canon) {
  auto key = key_of(canon);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  int id = static_cast<int>(entries_.size());
  entries_.emplace_back();
  entries_.back().p = canon;
  ids_.emplace(key, id);
  return id;
}

const WeingartenTable& LoopSolver::table(int k) {
  auto it = tables_.find(k);
  if (it != tables_.end()) return it->second;
  WeingartenTable t = opt_.cache ? opt_.cache->get(k, opt_.mode, opt_.tau) : weingarten(k, opt_.mode, opt_.tau);
  return tables_.emplace(k, std::move(t)).first->second;
}

void LoopSolver::build_recipe(int id) {
  Pattern p = entries_[id].p;
  int n = static_cast<int>(p.size());
  bool zero = opt_.mode == WMode::Zero;
  int arch = -1, ta = -1, tb = -1;
  Q constant0 = 0;
  std::map<std::pair<int, int>, Q> acc;
  if (n > 0) {
    arch = id_of(canonical(arch_insert(p)));
    if (opt_.two_coupling) {
      ta = id_of(canonical(tangency_a(p)));
      tb = id_of(canonical(tangency_b(p)));
    }
  }
  for (int j = 1; j < n; j += 2) {
    bool closed = p[0] == j;
    if (zero && closed) {
      if (n == 2) constant0 += 1;
      continue;
    }
    Q fac = closed ? opt_.tau : Q(1);
    Pattern eff = p;
    if (!closed) {
      eff[p[0]] = p[j];
      eff[p[j]] = p[0];
    }
    int nl = j - 1, nr = n - j - 1;
    std::vector<int> xs, ys;
    for (int x = 1; x < j; ++x)
      if (eff[x] > j) {
        xs.push_back(x);
        ys.push_back(eff[x]);
      }
    int l2 = static_cast<int>(xs.size());
    if (l2 == 0 && zero && nl > 0 && nr > 0) continue;
    // sub-blobs with internal pairs kept and the cut strands re-paired by rho
    Pattern left(nl), right(nr);
    for (int x = 1; x < j; ++x)
      if (eff[x] < j) left[x - 1] = static_cast<uint8_t>(eff[x] - 1);
    for (int x = j + 1; x < n; ++x)
      if (eff[x] > j) right[x - j - 1] = static_cast<uint8_t>(eff[x] - j - 1);
    if (l2 == 0) {
      acc[{id_of(canonical(left)), id_of(canonical(right))}] += fac;
      continue;
    }
    const WeingartenTable& w = table(l2 / 2);
    auto rhos = enumerate_patterns(l2 / 2);
    std::vector<int> c1(rhos.size()), c2(rhos.size());
    for (size_t r = 0; r < rhos.size(); ++r) {
      Pattern q1 = left, q2 = right;
      for (int a = 0; a < l2; ++a) {
        q1[xs[a] - 1] = static_cast<uint8_t>(xs[rhos[r][a]] - 1);
        q2[ys[a] - j - 1] = static_cast<uint8_t>(ys[rhos[r][a]] - j - 1);
      }
      c1[r] = id_of(canonical(q1));
      c2[r] = id_of(canonical(q2));
    }
    for (size_t r1 = 0; r1 < rhos.size(); ++r1)
      for (size_t r2 = 0; r2 < rhos.size(); ++r2) {
        Q v = w.value(rhos[r1], rhos[r2]);
        if (v != 0) acc[{c1[r1], c2[r2]}] += fac * v;
      }
  }
  Entry& e = entries_[id];
  e.arch = arch;
  e.tang_a = ta;
  e.tang_b = tb;
  e.constant0 = constant0;
  for (auto& [k, v] : acc)
    if (v != 0) e.terms.push_back({k.first, k.second, v});
  e.has_recipe = true;
}

const std::vector<Q>& LoopSolver::get(int id, int m) {
  if (!entries_[id].has_recipe) build_recipe(id);
  Entry& e = entries_[id];
  auto nb = [&](int w) { return opt_.two_coupling ? w / opt_.w2 + 1 : 1; };
  while (static_cast<int>(e.coef.size()) <= m) {
    int w = static_cast<int>(e.coef.size());
    std::vector<Q> res(nb(w), Q(0));
    if (e.p.empty()) {
      if (w == 0) res[0] = 1;
    } else {
      if (w == 0) res[0] += e.constant0;
      if (w >= 1) {
        const auto& a = get(e.arch, w - 1);
        for (size_t b = 0; b < a.size(); ++b) res[b] += a[b];
      }
      if (opt_.two_coupling && w >= opt_.w2) {
        for (int t : {e.tang_a, e.tang_b}) {
          const auto& a = get(t, w - opt_.w2);
          for (size_t b = 0; b < a.size(); ++b) res[b + 1] += a[b];
        }
      }
      for (const Term& t : e.terms) {
        for (int i = 0; i <= w; ++i) {
          const auto& x = get(t.c1, i);
          const auto& y = get(t.c2, w - i);
          for (size_t b1 = 0; b1 < x.size(); ++b1) {
            if (x[b1] == 0) continue;
            Q xw = t.w * x[b1];
            for (size_t b2 = 0; b2 < y.size(); ++b2)
              if (y[b2] != 0) res[b1 + b2] += xw * y[b2];
          }
        }
      }
    }
    e.coef.push_back(std::move(res));
  }
  return e.coef[m];
}

const std::vector<Q>& LoopSolver::coefficient(const Pattern& p, int m) {
  if (!is_pattern(p)) throw std::invalid_argument("not a link pattern");
  if (m < 0) throw std::domain_error("negative order");
  return get(id_of(canonical(p)), m);
}

QSeries LoopSolver::solve(const Pattern& p, int order) {
  std::vector<Q> c;
  for (int m = 0; m <= order; ++m) c.push_back(coefficient(p, m)[0]);
  return QSeries(order, c);
}

BiSeries<Q> LoopSolver::solve_bivariate(const Pattern& p, int order) {
  BiSeries<Q> s(order, opt_.two_coupling ? opt_.w2 : order + 1);
  for (int m = 0; m <= order; ++m) {
    const auto& c = coefficient(p, m);
    for (size_t b = 0; b < c.size(); ++b) s.coeffs[m][b] = c[b];
  }
  return s;
}

QSeries solve_E(const Pattern& p, int order, const Q& tau) {
  LoopSolver s({WMode::Fixed, tau});
  return s.solve(p, order);
}

QSeries solve_E_tau_zero(const Pattern& p, int order) {
  LoopSolver s({WMode::Zero, 0});
  return s.solve(p, order);
}

BiSeries<Q> solve_E_two_coupling(const Pattern& p, int order, const Q& tau, int w2) {
  LoopSolver s({WMode::Fixed, tau, true, w2});
  return s.solve_bivariate(p, order);
}

std::vector<Q> generic_sample_points(int count) {
  // integers >= 8 keep every Gram matrix with k <= 8 invertible
  std::vector<Q> xs;
  for (int i = 0; i < count; ++i) xs.emplace_back(8 + i);
  return xs;
}

namespace {

int max_k(const std::vector<Pattern>& ps) {
  int k = 0;
  for (auto& p : ps) k = std::max(k, static_cast<int>(p.size()) / 2);
  return k;
}

Poly interpolate_checked(const std::vector<Q>& xs, const std::vector<Q>& ys, int bound) {
  Poly r = interpolate(xs, ys);
  if (r.degree() > bound)
    throw std::logic_error("tau interpolation exceeded its degree bound; sample count too small");
  return r;
}

}  // namespace

std::vector<TauSeries> solve_E_generic(const std::vector<Pattern>& ps, int order) {
  int bound = max_k(ps) + order;
  auto xs = generic_sample_points(bound + 2);
  std::vector<std::vector<QSeries>> samples(ps.size());
  for (auto& x : xs) {
    LoopSolver s({WMode::Fixed, x});
    for (size_t i = 0; i < ps.size(); ++i) samples[i].push_back(s.solve(ps[i], order));
  }
  std::vector<TauSeries> out;
  for (size_t i = 0; i < ps.size(); ++i) {
    int k = static_cast<int>(ps[i].size()) / 2;
    TauSeries r(order);
    for (int m = 0; m <= order; ++m) {
      std::vector<Q> ys;
      for (auto& s : samples[i]) ys.push_back(s[m]);
      r[m] = interpolate_checked(xs, ys, k + m);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<BiSeries<Poly>> solve_E_two_coupling_generic(const std::vector<Pattern>& ps, int order, int w2) {
  int bound = max_k(ps) + order;
  auto xs = generic_sample_points(bound + 2);
  std::vector<std::vector<BiSeries<Q>>> samples(ps.size());
  for (auto& x : xs) {
    LoopSolver s({WMode::Fixed, x, true, w2});
    for (size_t i = 0; i < ps.size(); ++i) samples[i].push_back(s.solve_bivariate(ps[i], order));
  }
  std::vector<BiSeries<Poly>> out;
  for (size_t i = 0; i < ps.size(); ++i) {
    int k = static_cast<int>(ps[i].size()) / 2;
    BiSeries<Poly> r(order, w2);
    for (int m = 0; m <= order; ++m)
      for (int b = 0; b <= m / w2; ++b) {
        std::vector<Q> ys;
        for (auto& s : samples[i]) ys.push_back(s.coeffs[m][b]);
        int a = m - w2 * b;
        r.coeffs[m][b] = interpolate_checked(xs, ys, k + a + b);
      }
    out.push_back(r);
  }
  return out;
}

namespace {

template <class S>
const S& lookup(const std::map<Pattern, S>& E, const Pattern& p) {
  auto it = E.find(p);
  if (it == E.end()) it = E.find(canonical(p));
  if (it == E.end()) throw std::invalid_argument("E_to_I: missing correlator " + pattern_to_string(p));
  return it->second;
}

}  // namespace

std::map<Pattern, QSeries> E_to_I(const std::map<Pattern, QSeries>& E, int k, const Q& tau) {
  auto w = weingarten(k, WMode::Fixed, tau);
  if (w.pseudo_inverse)
    throw std::domain_error("Gram matrix is singular at tau = " + q_to_string(tau) +
                            "; the E are linearly dependent and I is not determined");
  auto pats = enumerate_patterns(k);
  std::map<Pattern, QSeries> out;
  for (auto& p : pats) {
    QSeries acc;
    bool first = true;
    for (auto& s : pats) {
      QSeries term = lookup(E, s) * w.value(p, s);
      if (first) acc = term;
      else acc += term;
      first = false;
    }
    out[p] = acc;
  }
  return out;
}

std::map<Pattern, TauSeries> E_to_I_generic(const std::map<Pattern, TauSeries>& E, int k) {
  auto w = weingarten(k, WMode::Generic);
  auto pats = enumerate_patterns(k);
  std::map<Pattern, TauSeries> out;
  for (auto& p : pats) {
    int order = -1;
    for (auto& s : pats) order = order < 0 ? lookup(E, s).order() : std::min(order, lookup(E, s).order());
    std::vector<RatFunc> acc(order + 1, RatFunc(0));
    for (auto& s : pats) {
      const RatFunc& c = w.generic[w.algebra->index_of(coset_type(p, s))];
      const TauSeries& e = lookup(E, s);
      for (int m = 0; m <= order; ++m) acc[m] += c * RatFunc(e[m]);
    }
    TauSeries r(order);
    for (int m = 0; m <= order; ++m) r[m] = acc[m].to_poly();
    out[p] = r;
  }
  return out;
}

namespace {
template <class C>
json bi_json(const BiSeries<C>& s) {
  json terms = json::array();
  for (int m = 0; m <= s.order; ++m)
    for (size_t b = 0; b < s.coeffs[m].size(); ++b)
      terms.push_back({{"g1", m - s.w2 * static_cast<int>(b)}, {"g2", b}, {"value", to_json_value(s.coeffs[m][b])}});
  return json{{"truncation_order", s.order}, {"g2_weight", s.w2}, {"terms", terms}};
}
}  // namespace

json bi_series_to_json(const BiSeries<Q>& s) { return bi_json(s); }
json bi_series_to_json(const BiSeries<Poly>& s) { return bi_json(s); }

json correlator_table_json(const std::string& model, const std::string& tau, int order,
                           const std::vector<CorrelatorEntry>& entries) {
  json es = json::array();
  for (auto& e : entries) es.push_back({{"pattern", pattern_to_one_based(e.pattern)}, {"series", e.series}});
  return json{{"model", model}, {"tau", tau}, {"orders", order}, {"entries", es}};
}

}  // namespace knotmm
