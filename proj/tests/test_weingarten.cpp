#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "knotmm/characters.hpp"
#include "knotmm/weingarten.hpp"

using namespace knotmm;

namespace {

QMatrix identity_matrix(size_t n) {
  QMatrix m(n, std::vector<Q>(n, Q(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix transpose(const QMatrix& a) {
  QMatrix t(a[0].size(), std::vector<Q>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

QMatrix table_dense(const WeingartenTable& t, const Q& at = 0) {
  if (t.mode != WMode::Generic) return dense_from_element(t.k, t.values);
  std::vector<Q> v;
  for (auto& r : t.generic) v.push_back(r.eval(at));
  return dense_from_element(t.k, v);
}

// all four Penrose conditions
void check_penrose(const QMatrix& G, const QMatrix& W) {
  CHECK(mat_mul(mat_mul(G, W), G) == G);
  CHECK(mat_mul(mat_mul(W, G), W) == W);
  auto GW = mat_mul(G, W), WG = mat_mul(W, G);
  CHECK(GW == transpose(GW));
  CHECK(WG == transpose(WG));
}

// pivots of a symmetric elimination; all > 0 iff positive definite
bool positive_definite(QMatrix a) {
  size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    if (a[c][c] <= 0) return false;
    for (size_t r = c + 1; r < n; ++r) {
      Q f = a[r][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return true;
}

std::string temp_dir(const char* tag) {
  auto d = std::filesystem::temp_directory_path() / (std::string("knotmm_test_") + tag);
  std::filesystem::remove_all(d);
  return d.string();
}

}  // namespace

TEST_CASE("small tables") {
  auto w1 = weingarten(1, WMode::Generic);
  RatFunc tau = RatFunc::tau();
  CHECK(w1.generic[0] == inverse(tau));
  auto w2 = weingarten(2, WMode::Generic);
  RatFunc den = tau * (tau - RatFunc(1)) * (tau + RatFunc(2));
  const auto& alg = *w2.algebra;
  CHECK(w2.generic[alg.index_of({1, 1})] == (tau + RatFunc(1)) / den);
  CHECK(w2.generic[alg.index_of({2})] == RatFunc(-1) / den);
  auto f = weingarten(2, WMode::Fixed, 3);
  CHECK_FALSE(f.pseudo_inverse);
  CHECK(f.value_at({1, 1}) == Q(2, 15));
  CHECK(f.value_at({2}) == Q(-1, 30));
  CHECK(weingarten(2, WMode::Fixed, 1).pseudo_inverse);
  CHECK(weingarten(3, WMode::Fixed, 2).pseudo_inverse);
  CHECK_FALSE(weingarten(3, WMode::Fixed, 3).pseudo_inverse);
  CHECK(weingarten(3, WMode::Zero).pseudo_inverse == gram_singular(3, WMode::Zero, 0));
}

TEST_CASE("coset algebra") {
  for (int k = 1; k <= 5; ++k) {
    auto alg = coset_algebra(k);
    long total = 0;
    for (long c : alg->class_size) total += c;
    CHECK(total == double_factorial_odd(k));
    CHECK(alg->class_size[alg->identity] == 1);
    // identity element acts trivially
    std::vector<Q> e(alg->dim(), Q(0)), x(alg->dim());
    e[alg->identity] = 1;
    for (int a = 0; a < alg->dim(); ++a) {
      x[a] = Q(a * a + 1, a + 2);
      x[a].canonicalize();
    }
    CHECK(alg->multiply(e, x) == x);
    CHECK(alg->multiply(x, e) == x);
  }
  // products agree with dense products
  for (int k = 2; k <= 4; ++k) {
    auto alg = coset_algebra(k);
    std::vector<Q> x(alg->dim()), y(alg->dim());
    for (int a = 0; a < alg->dim(); ++a) {
      x[a] = Q(a + 1, 3);
      x[a].canonicalize();
      y[a] = Q(2 - a * a);
    }
    CHECK(dense_from_element(k, alg->multiply(x, y)) == mat_mul(dense_from_element(k, x), dense_from_element(k, y)));
  }
}

TEST_CASE("generic Weingarten inverts the Gram matrix") {
  for (int k = 1; k <= 4; ++k) {
    auto w = weingarten(k, WMode::Generic);
    auto& alg = *w.algebra;
    auto g = gram_element_generic(alg);
    std::vector<RatFunc> e(alg.dim(), RatFunc(0));
    e[alg.identity] = RatFunc(1);
    CHECK(alg.multiply(g, w.generic) == e);
    // denominators divide prod c_mu
    Poly prod(Q(1));
    for (auto& mu : partitions(k)) prod = prod * c_mu(mu);
    for (auto& r : w.generic) CHECK(Poly::divmod(prod, r.den()).second.is_zero());
  }
}

TEST_CASE("Penrose conditions, exhaustive for k <= 4") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    for (int tau : {1, 2, 3}) {
      CAPTURE(tau);
      auto w = weingarten(k, WMode::Fixed, tau);
      auto G = dense_gram(k, WMode::Fixed, tau);
      auto W = table_dense(w);
      check_penrose(G, W);
      CHECK(W == dense_pseudo_inverse(G));
      CHECK(w.pseudo_inverse == gram_singular(k, WMode::Fixed, tau));
    }
    auto z = weingarten(k, WMode::Zero);
    auto Gz = dense_gram(k, WMode::Zero, 0);
    check_penrose(Gz, table_dense(z));
    CHECK(table_dense(z) == dense_pseudo_inverse(Gz));
    auto gen = weingarten(k, WMode::Generic);
    for (Q at : {Q(7, 2), Q(5), Q(-1, 3)}) {
      auto G = dense_gram(k, WMode::Fixed, at);
      auto W = table_dense(gen, at);
      CHECK(mat_mul(G, W) == identity_matrix(G.size()));
    }
  }
}

TEST_CASE("positive definite for integer tau >= k") {
  for (int k = 1; k <= 4; ++k)
    for (int tau = k; tau <= k + 1; ++tau) CHECK(positive_definite(dense_gram(k, WMode::Fixed, tau)));
  CHECK_FALSE(positive_definite(dense_gram(3, WMode::Fixed, 2)));
}

TEST_CASE("projector decomposition") {
  // G = sum c_mu P_2mu and W = sum_{c_mu != 0} P_2mu / c_mu, from characters
  for (int k = 1; k <= 3; ++k) {
    std::vector<QMatrix> P;
    for (auto& mu : partitions(k)) P.push_back(pairing_projector(mu));
    size_t n = P[0].size();
    QMatrix sum(n, std::vector<Q>(n, Q(0)));
    for (auto& p : P) {
      CHECK(mat_mul(p, p) == p);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) sum[i][j] += p[i][j];
    }
    CHECK(sum == identity_matrix(n));
    auto combine = [&](auto coef) {
      QMatrix m(n, std::vector<Q>(n, Q(0)));
      auto mus = partitions(k);
      for (size_t a = 0; a < mus.size(); ++a) {
        Q c = coef(mus[a]);
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) m[i][j] += c * P[a][i][j];
      }
      return m;
    };
    for (Q tau : {Q(1), Q(2), Q(3), Q(5, 2)}) {
      CHECK(combine([&](const Partition& mu) { return c_mu_at(mu, tau); }) == dense_gram(k, WMode::Fixed, tau));
      auto W = combine([&](const Partition& mu) {
        Q c = c_mu_at(mu, tau);
        return c == 0 ? Q(0) : Q(1 / c);
      });
      CHECK(W == table_dense(weingarten(k, WMode::Fixed, tau)));
    }
    CHECK(combine([](const Partition& mu) { return c_hat_mu(mu); }) == dense_gram(k, WMode::Zero, 0));
    auto Wz = combine([](const Partition& mu) {
      Q c = c_hat_mu(mu);
      return c == 0 ? Q(0) : Q(1 / c);
    });
    CHECK(Wz == table_dense(weingarten(k, WMode::Zero)));
  }
}

TEST_CASE("S_2k invariance") {
  auto w = weingarten(3, WMode::Fixed, 2);
  auto pats = enumerate_patterns(3);
  std::vector<int> s{3, 1, 5, 0, 2, 4};
  for (auto& p : pats)
    for (auto& q : pats) CHECK(w.value(relabel(p, s), relabel(q, s)) == w.value(p, q));
}

TEST_CASE("cache round trip") {
  auto dir = temp_dir("rt");
  WeingartenCache cache(dir);
  CHECK_FALSE(cache.load(3, WMode::Fixed, Q(5, 2)));
  auto t = cache.get(3, WMode::Fixed, Q(5, 2));
  CHECK(std::filesystem::exists(cache.path_for(3, WMode::Fixed, Q(5, 2))));
  auto back = cache.load(3, WMode::Fixed, Q(5, 2));
  REQUIRE(back);
  CHECK(back->values == t.values);
  CHECK(back->tau == Q(5, 2));
  auto g = cache.get(2, WMode::Generic);
  auto gb = cache.load(2, WMode::Generic, 0);
  REQUIRE(gb);
  CHECK(gb->generic == g.generic);
  auto z = cache.get(3, WMode::Zero);
  CHECK(cache.load(3, WMode::Zero, 0)->values == z.values);
  CHECK(cache.path_for(3, WMode::Fixed, Q(-1, 2)) != cache.path_for(3, WMode::Fixed, Q(1, 2)));
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache version and corruption") {
  auto dir = temp_dir("bad");
  WeingartenCache cache(dir);
  auto t = cache.get(2, WMode::Fixed, 3);
  auto path = cache.path_for(2, WMode::Fixed, 3);
  json j = table_to_json(t);

  j["version"] = WeingartenCache::kVersion + 1;
  std::ofstream(path) << j.dump();
  CHECK_FALSE(cache.load(2, WMode::Fixed, 3));
  CHECK(cache.get(2, WMode::Fixed, 3).values == t.values);  // recomputed and rewritten
  CHECK(cache.load(2, WMode::Fixed, 3));

  j = table_to_json(t);
  j["entries"][0]["value"] = "17";
  std::ofstream(path) << j.dump();
  CHECK_THROWS_AS(cache.load(2, WMode::Fixed, 3), CacheCorruption);

  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(cache.load(2, WMode::Fixed, 3), CacheCorruption);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory from environment") {
  setenv("KNOTMM_CACHE_DIR", "/tmp/knotmm_env_cache", 1);
  CHECK(default_cache_dir() == "/tmp/knotmm_env_cache");
  unsetenv("KNOTMM_CACHE_DIR");
  CHECK(default_cache_dir() == ".knotmm_cache");
}
