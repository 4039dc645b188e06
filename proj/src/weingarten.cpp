#include "knotmm/weingarten.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace knotmm {

namespace {

std::shared_ptr<CosetAlgebra> build_algebra(int k) {
  auto alg = std::make_shared<CosetAlgebra>();
  alg->k = k;
  alg->types = partitions(k);
  int d = alg->dim();
  for (int i = 0; i < d; ++i) alg->index[alg->types[i]] = i;
  alg->identity = alg->index.at(Partition(k, 1));
  alg->full_cycle = k == 0 ? 0 : alg->index.at(Partition{k});
  auto pats = enumerate_patterns(k);
  const Pattern& p0 = pats[0];
  std::vector<int> type0(pats.size());
  std::vector<int> rep(d, -1);
  for (size_t q = 0; q < pats.size(); ++q) {
    type0[q] = alg->index.at(coset_type(p0, pats[q]));
    if (rep[type0[q]] < 0) rep[type0[q]] = static_cast<int>(q);
  }
  alg->class_size.assign(d, 0);
  alg->n.assign(static_cast<size_t>(d) * d * d, 0);
  for (size_t q = 0; q < pats.size(); ++q) {
    int a = type0[q];
    alg->class_size[a]++;
    for (int nu = 0; nu < d; ++nu) {
      int b = alg->index.at(coset_type(pats[q], pats[rep[nu]]));
      alg->n[(static_cast<size_t>(nu) * d + a) * d + b]++;
    }
  }
  return alg;
}

// Solve A x = b over a field by Gauss-Jordan; nullopt if A is singular.
template <class C, class IsZero>
std::optional<std::vector<C>> solve_linear(std::vector<std::vector<C>> a, std::vector<C> b, IsZero is_zero) {
  int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!is_zero(a[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    C inv = C(1) / a[col][col];
    for (int c = col; c < n; ++c) a[col][c] = a[col][c] * inv;
    b[col] = b[col] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      C f = a[r][col];
      for (int c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
      b[r] = b[r] - f * b[col];
    }
  }
  return b;
}

template <class C>
std::vector<std::vector<C>> left_mult_matrix(const CosetAlgebra& alg, const std::vector<C>& g) {
  int d = alg.dim();
  std::vector<std::vector<C>> L(d, std::vector<C>(d, C(0)));
  for (int nu = 0; nu < d; ++nu)
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        long s = alg.structure(nu, a, b);
        if (s) L[nu][b] = L[nu][b] + g[a] * C(Q(s));
      }
  return L;
}

bool qzero(const Q& x) { return x == 0; }
bool rzero(const RatFunc& x) { return x.is_zero(); }

std::string tau_tag(const Q& tau) {
  std::string s = q_to_string(tau);
  for (auto& c : s) {
    if (c == '/') c = '_';
    if (c == '-') c = 'm';
  }
  return s;
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string checksum_of(const json& entries) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(entries.dump())));
  return buf;
}

}  // namespace

int CosetAlgebra::index_of(const Partition& mu) const {
  auto it = index.find(mu);
  if (it == index.end()) throw std::invalid_argument("not a partition of k: " + partition_to_string(mu));
  return it->second;
}

std::shared_ptr<const CosetAlgebra> coset_algebra(int k) {
  if (k < 0) throw std::domain_error("coset_algebra: negative k");
  if (k > 8) throw std::domain_error("coset_algebra: k > 8 would enumerate more than 2e6 pairings per table");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CosetAlgebra>> memo;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  auto alg = build_algebra(k);
  memo[k] = alg;
  return alg;
}

std::string mode_name(WMode m) {
  switch (m) {
    case WMode::Generic: return "generic";
    case WMode::Fixed: return "fixed";
    case WMode::Zero: return "zero";
  }
  return "?";
}

WMode mode_from_name(const std::string& s) {
  if (s == "generic") return WMode::Generic;
  if (s == "fixed") return WMode::Fixed;
  if (s == "zero") return WMode::Zero;
  throw std::invalid_argument("unknown tau mode: " + s);
}

std::vector<Q> gram_element(const CosetAlgebra& alg, WMode mode, const Q& tau) {
  std::vector<Q> g(alg.dim(), Q(0));
  if (mode == WMode::Zero) {
    g[alg.full_cycle] = 1;
    return g;
  }
  if (mode == WMode::Generic) throw std::invalid_argument("gram_element: use gram_element_generic");
  for (int a = 0; a < alg.dim(); ++a) {
    Q p = 1;
    for (size_t i = 0; i < alg.types[a].size(); ++i) p *= tau;
    g[a] = p;
  }
  return g;
}

std::vector<RatFunc> gram_element_generic(const CosetAlgebra& alg) {
  std::vector<RatFunc> g;
  for (auto& t : alg.types) g.emplace_back(Poly::monomial(static_cast<int>(t.size()), Q(1)));
  return g;
}

std::vector<Q> algebra_pseudo_inverse(const CosetAlgebra& alg, const std::vector<Q>& g) {
  int d = alg.dim();
  std::vector<std::vector<Q>> pw;
  std::vector<Q> e(d, Q(0));
  e[alg.identity] = 1;
  pw.push_back(e);
  std::vector<Q> coeffs;  // G^deg = sum coeffs[i] G^i
  for (int deg = 1; deg <= d + 1; ++deg) {
    pw.push_back(alg.multiply(pw.back(), g));
    // least-squares-free exact test: is pw[deg] in span(pw[0..deg-1])?
    // Normal equations are exact over Q and have a solution iff it is.
    int m = deg;
    std::vector<std::vector<Q>> N(m, std::vector<Q>(m, Q(0)));
    std::vector<Q> rhs(m, Q(0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j)
        for (int c = 0; c < d; ++c) N[i][j] += pw[i][c] * pw[j][c];
      for (int c = 0; c < d; ++c) rhs[i] += pw[i][c] * pw[deg][c];
    }
    auto sol = solve_linear(N, rhs, qzero);
    if (!sol) throw std::logic_error("Krylov powers unexpectedly dependent");
    bool exact = true;
    for (int c = 0; c < d && exact; ++c) {
      Q s = 0;
      for (int i = 0; i < m; ++i) s += (*sol)[i] * pw[i][c];
      if (s != pw[deg][c]) exact = false;
    }
    if (exact) {
      coeffs = *sol;
      break;
    }
  }
  int deg = static_cast<int>(coeffs.size());
  if (deg == 0) throw std::logic_error("minimal polynomial not found");
  // m(x) = x^deg - sum coeffs[i] x^i = x^s r(x)
  std::vector<Q> m(deg + 1);
  for (int i = 0; i < deg; ++i) m[i] = -coeffs[i];
  m[deg] = 1;
  int s = 0;
  while (m[s] == 0) ++s;
  if (s > 1) throw std::logic_error("Gram element is not diagonalizable");
  std::vector<Q> r(m.begin() + s, m.end());
  Q r0 = r[0];
  std::vector<Q> rG(d, Q(0)), r1G(d, Q(0));
  for (size_t j = 0; j < r.size(); ++j)
    for (int c = 0; c < d; ++c) {
      rG[c] += r[j] * pw[j][c];
      if (j >= 1) r1G[c] += r[j] * pw[j - 1][c];
    }
  // W = -(r1(G)/r0) (1 - r(G)/r0)
  std::vector<Q> proj(d), a(d);
  for (int c = 0; c < d; ++c) {
    proj[c] = e[c] - rG[c] / r0;
    a[c] = -r1G[c] / r0;
  }
  return alg.multiply(a, proj);
}

bool gram_singular(int k, WMode mode, const Q& tau) {
  if (mode == WMode::Generic) return false;
  for (auto& mu : partitions(k)) {
    Q c = mode == WMode::Zero ? c_hat_mu(mu) : c_mu_at(mu, tau);
    if (c == 0) return true;
  }
  return false;
}

WeingartenTable weingarten(int k, WMode mode, const Q& tau) {
  if (k < 1) throw std::domain_error("weingarten needs k >= 1");
  WeingartenTable t;
  t.k = k;
  t.mode = mode;
  t.tau = mode == WMode::Fixed ? tau : Q(0);
  t.algebra = coset_algebra(k);
  const auto& alg = *t.algebra;
  std::vector<Q> e(alg.dim(), Q(0));
  e[alg.identity] = 1;
  if (mode == WMode::Generic) {
    auto g = gram_element_generic(alg);
    std::vector<RatFunc> er(alg.dim(), RatFunc(0));
    er[alg.identity] = RatFunc(1);
    auto sol = solve_linear(left_mult_matrix(alg, g), er, rzero);
    if (!sol) throw std::logic_error("generic Gram matrix singular");
    t.generic = *sol;
    return t;
  }
  auto g = gram_element(alg, mode, tau);
  t.pseudo_inverse = gram_singular(k, mode, tau);
  if (!t.pseudo_inverse) {
    auto sol = solve_linear(left_mult_matrix(alg, g), e, qzero);
    if (!sol) throw std::logic_error("Gram matrix singular although all projector coefficients are nonzero");
    t.values = *sol;
  } else {
    t.values = algebra_pseudo_inverse(alg, g);
  }
  return t;
}

WeingartenTable weingarten_tau_zero(int k) { return weingarten(k, WMode::Zero); }

QMatrix dense_from_element(int k, const std::vector<Q>& element) {
  auto alg = coset_algebra(k);
  auto pats = enumerate_patterns(k);
  QMatrix m(pats.size(), std::vector<Q>(pats.size()));
  for (size_t i = 0; i < pats.size(); ++i)
    for (size_t j = 0; j < pats.size(); ++j) m[i][j] = element[alg->index_of(coset_type(pats[i], pats[j]))];
  return m;
}

QMatrix dense_gram(int k, WMode mode, const Q& tau) {
  auto pats = enumerate_patterns(k);
  QMatrix m(pats.size(), std::vector<Q>(pats.size()));
  for (size_t i = 0; i < pats.size(); ++i)
    for (size_t j = 0; j < pats.size(); ++j) {
      int loops = glue_loops(pats[i], pats[j]);
      if (mode == WMode::Zero) {
        m[i][j] = loops == 1 ? 1 : 0;
      } else {
        Q p = 1;
        for (int l = 0; l < loops; ++l) p *= tau;
        m[i][j] = p;
      }
    }
  return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), l = b.size();
  QMatrix r(n, std::vector<Q>(m, Q(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < l; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

namespace {
QMatrix transpose(const QMatrix& a) {
  if (a.empty()) return a;
  QMatrix t(a[0].size(), std::vector<Q>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QMatrix inverse_square(QMatrix a) {
  size_t n = a.size();
  QMatrix inv(n, std::vector<Q>(n, Q(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("inverse_square: singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Q f = 1 / a[col][col];
    for (size_t c = 0; c < n; ++c) {
      a[col][c] *= f;
      inv[col][c] *= f;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Q h = a[r][col];
      for (size_t c = 0; c < n; ++c) {
        a[r][c] -= h * a[col][c];
        inv[r][c] -= h * inv[col][c];
      }
    }
  }
  return inv;
}
}  // namespace

QMatrix dense_pseudo_inverse(const QMatrix& a) {
  size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
  // reduced row echelon form
  QMatrix r = a;
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t piv = row;
    while (piv < m && r[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(r[piv], r[row]);
    Q f = 1 / r[row][col];
    for (size_t c = 0; c < n; ++c) r[row][c] *= f;
    for (size_t i = 0; i < m; ++i) {
      if (i == row || r[i][col] == 0) continue;
      Q h = r[i][col];
      for (size_t c = 0; c < n; ++c) r[i][c] -= h * r[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  size_t rank = pivots.size();
  if (rank == 0) return QMatrix(n, std::vector<Q>(m, Q(0)));
  QMatrix C(m, std::vector<Q>(rank)), F(r.begin(), r.begin() + rank);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < rank; ++j) C[i][j] = a[i][pivots[j]];
  QMatrix Ft = transpose(F), Ct = transpose(C);
  QMatrix left = mat_mul(Ft, inverse_square(mat_mul(F, Ft)));
  QMatrix right = mat_mul(inverse_square(mat_mul(Ct, C)), Ct);
  return mat_mul(left, right);
}

json table_to_json(const WeingartenTable& t) {
  json entries = json::array();
  for (int a = 0; a < t.algebra->dim(); ++a) {
    json v = t.mode == WMode::Generic ? to_json_value(t.generic[a]) : to_json_value(t.values[a]);
    entries.push_back({{"partition", t.algebra->types[a]}, {"value", v}});
  }
  return json{{"version", WeingartenCache::kVersion},
              {"k", t.k},
              {"mode", mode_name(t.mode)},
              {"tau", q_to_string(t.tau)},
              {"pseudo_inverse", t.pseudo_inverse},
              {"entries", entries},
              {"checksum", checksum_of(entries)}};
}

WeingartenTable table_from_json(const json& j) {
  const json& entries = j.at("entries");
  if (checksum_of(entries) != j.at("checksum").get<std::string>())
    throw CacheCorruption("Weingarten table checksum mismatch");
  WeingartenTable t;
  t.k = j.at("k").get<int>();
  t.mode = mode_from_name(j.at("mode").get<std::string>());
  t.tau = q_from_json(j.at("tau"));
  t.pseudo_inverse = j.at("pseudo_inverse").get<bool>();
  t.algebra = coset_algebra(t.k);
  int d = t.algebra->dim();
  if (static_cast<int>(entries.size()) != d) throw CacheCorruption("Weingarten table has wrong number of entries");
  if (t.mode == WMode::Generic) t.generic.assign(d, RatFunc(0));
  else t.values.assign(d, Q(0));
  for (auto& e : entries) {
    int a = t.algebra->index_of(e.at("partition").get<Partition>());
    if (t.mode == WMode::Generic) t.generic[a] = ratfunc_from_json(e.at("value"));
    else t.values[a] = q_from_json(e.at("value"));
  }
  return t;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("KNOTMM_CACHE_DIR")) return env;
  return ".knotmm_cache";
}

std::string WeingartenCache::path_for(int k, WMode mode, const Q& tau) const {
  std::string name = "weingarten_k" + std::to_string(k) + "_" + mode_name(mode);
  if (mode == WMode::Fixed) name += "_tau" + tau_tag(tau);
  return (std::filesystem::path(dir_) / (name + ".json")).string();
}

std::optional<WeingartenTable> WeingartenCache::load(int k, WMode mode, const Q& tau) const {
  std::string path = path_for(k, mode, tau);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw CacheCorruption("unreadable cache file " + path + ": " + e.what());
  }
  if (!j.contains("version") || j.at("version") != kVersion) return std::nullopt;
  WeingartenTable t = table_from_json(j);
  if (t.k != k || t.mode != mode || (mode == WMode::Fixed && t.tau != tau))
    throw CacheCorruption("cache file " + path + " holds a different table");
  return t;
}

void WeingartenCache::store(const WeingartenTable& t) const {
  std::filesystem::create_directories(dir_);
  std::string path = path_for(t.k, t.mode, t.tau);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << table_to_json(t).dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

WeingartenTable WeingartenCache::get(int k, WMode mode, const Q& tau) const {
  if (auto t = load(k, mode, tau)) return *t;
  WeingartenTable t = weingarten(k, mode, tau);
  store(t);
  return t;
}

}  // namespace knotmm
