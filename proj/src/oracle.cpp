#include "knotmm/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "knotmm/characters.hpp"
#include "knotmm/cycles.hpp"

namespace knotmm {

std::string vacuum_model_name(VacuumModel m) { return m == VacuumModel::Hermitean ? "hermitean" : "complex"; }

namespace {

using Hist = std::map<int, uint64_t>;

// all matchings of 4n half-edges whose first pair is (0, first)
void hermitean_branch(int n, int first, Hist& hist) {
  int m = 4 * n;
  uint8_t nu[32], alpha[32], free_[32];
  for (int h = 0; h < m; ++h) nu[h] = static_cast<uint8_t>(4 * (h / 4) + (h + 1) % 4);
  alpha[0] = static_cast<uint8_t>(first);
  alpha[first] = 0;
  int cnt = 0;
  for (int h = 1; h < m; ++h)
    if (h != first) free_[cnt++] = static_cast<uint8_t>(h);
  std::vector<uint64_t> local(m + 1, 0);
  // pair the last free half-edge with each other free one (swap to the end)
  auto rec = [&](auto&& self, int c) -> void {
    if (c == 0) {
      local[count_cycles_composed(nu, alpha, m)]++;
      return;
    }
    uint8_t a = free_[c - 1];
    for (int i = 0; i < c - 1; ++i) {
      std::swap(free_[i], free_[c - 2]);
      uint8_t b = free_[c - 2];
      alpha[a] = b;
      alpha[b] = a;
      self(self, c - 2);
      std::swap(free_[i], free_[c - 2]);
    }
  };
  rec(rec, cnt);
  for (int f = 0; f <= m; ++f)
    if (local[f]) hist[f] += local[f];
}

// all sigma in S_2n with sigma[0] = first
void complex_branch(int n, int first, Hist& hist) {
  int m = 2 * n;
  uint8_t tau[32], sigma[32];
  for (int i = 0; i < m; ++i) tau[i] = static_cast<uint8_t>(i ^ 1);
  sigma[0] = static_cast<uint8_t>(first);
  int pos = 1;
  for (int v = 0; v < m; ++v)
    if (v != first) sigma[pos++] = static_cast<uint8_t>(v);
  std::vector<uint64_t> local(2 * m + 1, 0);
  do {
    local[count_cycles(sigma, m) + count_cycles_composed(tau, sigma, m)]++;
  } while (std::next_permutation(sigma + 1, sigma + m));
  for (int f = 0; f <= 2 * m; ++f)
    if (local[f]) hist[f] += local[f];
}

}  // namespace

std::map<int, uint64_t> vacuum_face_histogram(VacuumModel model, int n, int threads) {
  if (n < 0) throw std::domain_error("negative vertex number");
  if (n == 0) return {{0, 1}};
  int limit = model == VacuumModel::Hermitean ? 5 : 6;
  if (n > limit)
    throw std::domain_error("oracle order " + std::to_string(n) + " exceeds the feasibility bound " +
                            std::to_string(limit) + " for the " + vacuum_model_name(model) + " model");
  int branches = model == VacuumModel::Hermitean ? 4 * n - 1 : 2 * n;
  threads = std::max(1, std::min(threads, branches));
  std::vector<Hist> parts(threads);
  auto work = [&](int t) {
    for (int b = t; b < branches; b += threads) {
      if (model == VacuumModel::Hermitean) hermitean_branch(n, b + 1, parts[t]);
      else complex_branch(n, b, parts[t]);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Hist total;
  for (auto& p : parts)
    for (auto& [f, c] : p) total[f] += c;
  return total;
}

Poly complex_vacuum_polynomial_characters(int n) {
  int m = 2 * n;
  Z fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  Partition dominoes(n, 2);
  Poly total;
  for (auto& lam : partitions(m)) {
    Z chi = mn_character(lam, dominoes);
    if (chi == 0) continue;
    Poly content(Q(1));
    for (size_t i = 0; i < lam.size(); ++i)
      for (int j = 0; j < lam[i]; ++j) content = content * Poly(std::vector<Q>{Q(j - static_cast<int>(i)), 1});
    total = total + content * content * (Q(hook_dimension(lam)) * Q(chi) / Q(fact));
  }
  return total;
}

GenusSeries vacuum_free_energy(VacuumModel model, int max_order, int threads) {
  GenusSeries zs(max_order);
  zs[0] = LaurentPoly(1);
  Q w = 1;
  for (int n = 1; n <= max_order; ++n) {
    w /= Q(model == VacuumModel::Hermitean ? 4 * n : 2 * n);
    LaurentPoly zn;
    for (auto& [f, c] : vacuum_face_histogram(model, n, threads))
      zn += LaurentPoly::monomial(f - n, Q(Z(static_cast<unsigned long>(c))) * w);
    zs[n] = zn;
  }
  GenusSeries F = log_series(zs);
  return F.map([](const LaurentPoly& p) { return p.shifted(-2); });
}

int genus_of(const std::vector<uint8_t>& matching) {
  int m = static_cast<int>(matching.size());
  if (m == 0 || m % 4) throw std::invalid_argument("genus_of: need 4n half-edges");
  if (m > kMaxCyclePerm) throw std::invalid_argument("genus_of: at most 8 vertices");
  for (int h = 0; h < m; ++h)
    if (matching[h] >= m || matching[h] == h || matching[matching[h]] != h)
      throw std::invalid_argument("genus_of: not a matching");
  int n = m / 4;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int h = 0; h < m; ++h) parent[find(h / 4)] = find(matching[h] / 4);
  for (int v = 0; v < n; ++v)
    if (find(v) != find(0)) throw std::invalid_argument("genus_of: disconnected diagram");
  uint8_t nu[32];
  for (int h = 0; h < m; ++h) nu[h] = static_cast<uint8_t>(4 * (h / 4) + (h + 1) % 4);
  int faces = count_cycles_composed(nu, matching.data(), m);
  return (2 + n - faces) / 2;
}

namespace {

struct DiagramBuilder {
  int k, order;
  bool tangency;
  std::vector<int> edge, strand;
  std::vector<std::vector<int>> regions;
  int nc = 0, nt = 0;
  // raw[sigma][nc][nt][closed loops]
  std::map<Pattern, std::vector<std::vector<std::vector<long>>>> raw;

  DiagramBuilder(int k_, int order_, bool t) : k(k_), order(order_), tangency(t) {
    edge.assign(2 * k, -1);
    strand.assign(2 * k, -1);
    std::vector<int> boundary(2 * k);
    std::iota(boundary.begin(), boundary.end(), 0);
    if (k > 0) regions.push_back(boundary);
  }

  void record() {
    int H = static_cast<int>(edge.size());
    std::vector<bool> seen(H, false);
    Pattern sigma(2 * k);
    for (int l = 0; l < 2 * k; ++l) {
      seen[l] = true;
      int x = edge[l];
      while (x >= 2 * k) {
        seen[x] = true;
        int y = strand[x];
        seen[y] = true;
        x = edge[y];
      }
      sigma[l] = static_cast<uint8_t>(x);
    }
    int closed = 0;
    for (int s = 2 * k; s < H; ++s) {
      if (seen[s]) continue;
      ++closed;
      int x = s;
      while (!seen[x]) {
        seen[x] = true;
        int y = strand[x];
        seen[y] = true;
        x = edge[y];
      }
    }
    auto& slot = raw[sigma];
    if (slot.empty()) slot.assign(order + 1, std::vector<std::vector<long>>(order + 1));
    auto& v = slot[nc][nt];
    if (static_cast<int>(v.size()) <= closed) v.resize(closed + 1, 0);
    v[closed]++;
  }

  void run() {
    if (regions.empty()) {
      record();
      return;
    }
    std::vector<int> R = std::move(regions.back());
    regions.pop_back();
    if (R.empty()) {
      run();
      regions.push_back(std::move(R));
      return;
    }
    int h = R[0];
    int s = static_cast<int>(R.size());
    for (int i = 1; i < s; i += 2) {
      edge[h] = R[i];
      edge[R[i]] = h;
      regions.emplace_back(R.begin() + i + 1, R.end());
      regions.emplace_back(R.begin() + 1, R.begin() + i);
      run();
      regions.pop_back();
      regions.pop_back();
      edge[R[i]] = -1;
    }
    edge[h] = -1;
    if (nc + nt < order) {
      int v0 = static_cast<int>(edge.size());
      int w1 = v0 + 1, w2 = v0 + 2, w3 = v0 + 3;
      edge.resize(v0 + 4, -1);
      strand.resize(v0 + 4, -1);
      edge[h] = v0;
      edge[v0] = h;
      std::vector<int> R2{w1, w2, w3};
      R2.insert(R2.end(), R.begin() + 1, R.end());
      regions.push_back(R2);
      auto pairs = [&](int a, int b, int c, int d) {
        strand[a] = b;
        strand[b] = a;
        strand[c] = d;
        strand[d] = c;
      };
      pairs(v0, w2, w1, w3);  // crossing
      ++nc;
      run();
      --nc;
      if (tangency) {
        ++nt;
        pairs(v0, w1, w2, w3);
        run();
        pairs(v0, w3, w1, w2);
        run();
        --nt;
      }
      regions.pop_back();
      edge.resize(v0);
      strand.resize(v0);
      edge[h] = -1;
    }
    regions.push_back(std::move(R));
  }
};

}  // namespace

ColouredDiagrams enumerate_coloured(int k, int order, bool tangency) {
  if (k < 0 || order < 0) throw std::domain_error("enumerate_coloured: negative size");
  if (2 * k + 4 * order > 40) throw std::domain_error("enumerate_coloured: diagram size beyond the oracle bound");
  DiagramBuilder b(k, order, tangency);
  if (k == 0) {
    // only the empty diagram is attached to an empty boundary
    b.raw[Pattern{}].assign(order + 1, std::vector<std::vector<long>>(order + 1));
    b.raw[Pattern{}][0][0] = {1};
  } else {
    b.run();
  }
  ColouredDiagrams d;
  d.k = k;
  d.order = order;
  d.tangency = tangency;
  for (auto& [sigma, byc] : b.raw) {
    auto& out = d.internal[sigma];
    out.assign(order + 1, std::vector<Poly>(order + 1));
    for (int a = 0; a <= order; ++a)
      for (int t = 0; t + a <= order; ++t) {
        std::vector<Q> c;
        for (long x : byc[a][t]) c.emplace_back(x);
        out[a][t] = Poly(c, -1);
      }
  }
  return d;
}

BiSeries<Poly> oracle_I(const ColouredDiagrams& d, const Pattern& sigma) {
  BiSeries<Poly> r(d.order, 1);
  auto it = d.internal.find(sigma);
  if (it == d.internal.end()) return r;
  for (int m = 0; m <= d.order; ++m)
    for (int b = 0; b <= m; ++b) r.coeffs[m][b] = it->second[m - b][b];
  return r;
}

BiSeries<Poly> oracle_E(const ColouredDiagrams& d, const Pattern& pi) {
  if (static_cast<int>(pi.size()) != 2 * d.k) throw std::invalid_argument("oracle_E: pattern size mismatch");
  BiSeries<Poly> r(d.order, 1);
  for (auto& [sigma, c] : d.internal) {
    Poly close = Poly::monomial(glue_loops(pi, sigma), Q(1));
    for (int m = 0; m <= d.order; ++m)
      for (int b = 0; b <= m; ++b) r.coeffs[m][b] = r.coeffs[m][b] + close * c[m - b][b];
  }
  return r;
}

TauSeries crossings_only(const BiSeries<Poly>& s) { return s.g1_series(); }

json genus_series_json(VacuumModel m, const GenusSeries& f) {
  json coeffs = json::array();
  int hmax = 0;
  for (int i = 0; i <= f.order(); ++i) {
    json terms = json::array();
    for (auto& [e, c] : f[i].terms()) {
      terms.push_back({{"N_power", e}, {"coeff", q_to_string(c)}});
      hmax = std::max(hmax, -e / 2);
    }
    coeffs.push_back({{"order", i}, {"N_polynomial", terms}});
  }
  json genus = json::array();
  for (int h = 0; h <= hmax; ++h) {
    std::vector<Q> c;
    for (int i = 0; i <= f.order(); ++i) c.push_back(f[i].coeff(-2 * h));
    genus.push_back({{"h", h}, {"series", series_to_json(QSeries(f.order(), c))}});
  }
  return json{{"model", vacuum_model_name(m)}, {"order", f.order()}, {"coefficients", coeffs}, {"genus", genus}};
}

json coloured_json(const ColouredDiagrams& d, const Pattern& pi) {
  auto E = oracle_E(d, pi);
  json terms = json::array();
  for (int m = 0; m <= d.order; ++m)
    for (int b = 0; b <= m; ++b) {
      if (!d.tangency && b > 0) continue;
      terms.push_back({{"crossings", m - b}, {"tangencies", b}, {"tau_polynomial", to_json_value(E.coeffs[m][b])}});
    }
  return json{{"model", d.tangency ? "coloured-tangency" : "coloured-crossing"},
              {"order", d.order},
              {"pattern", pattern_to_one_based(pi)},
              {"terms", terms}};
}

}  // namespace knotmm
