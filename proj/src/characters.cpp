#include "knotmm/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace knotmm {

namespace {

std::vector<int> beta_set(const Partition& lambda) {
  int L = static_cast<int>(lambda.size());
  std::vector<int> b(L);
  for (int i = 0; i < L; ++i) b[i] = lambda[i] + (L - 1 - i);
  return b;
}

Partition from_beta(std::vector<int> b) {
  std::sort(b.rbegin(), b.rend());
  int L = static_cast<int>(b.size());
  Partition lam;
  for (int i = 0; i < L; ++i) {
    int part = b[i] - (L - 1 - i);
    if (part > 0) lam.push_back(part);
  }
  return lam;
}

Z mn_rec(const Partition& lambda, const Partition& rho, size_t pos,
         std::map<std::pair<Partition, size_t>, Z>& memo) {
  if (pos == rho.size()) return lambda.empty() ? Z(1) : Z(0);
  auto key = std::make_pair(lambda, pos);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int r = rho[pos];
  auto b = beta_set(lambda);
  Z total = 0;
  for (size_t i = 0; i < b.size(); ++i) {
    int nb = b[i] - r;
    if (nb < 0 || std::find(b.begin(), b.end(), nb) != b.end()) continue;
    int height = 0;
    for (int x : b)
      if (x > nb && x < b[i]) ++height;
    auto b2 = b;
    b2[i] = nb;
    Z sub = mn_rec(from_beta(b2), rho, pos + 1, memo);
    total += (height % 2) ? Z(-sub) : sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

Z mn_character(const Partition& lambda, const Partition& cycle_type) {
  int a = std::accumulate(lambda.begin(), lambda.end(), 0);
  int b = std::accumulate(cycle_type.begin(), cycle_type.end(), 0);
  if (a != b) throw std::invalid_argument("mn_character: sizes differ");
  static std::mutex mu;
  static std::map<Partition, std::map<std::pair<Partition, size_t>, Z>> memos;
  std::lock_guard<std::mutex> lock(mu);
  return mn_rec(lambda, cycle_type, 0, memos[cycle_type]);
}

Z hook_dimension(const Partition& lambda) {
  int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  Z num;
  mpz_fac_ui(num.get_mpz_t(), n);
  Z hooks = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int below = 0;
      for (size_t r = i + 1; r < lambda.size(); ++r)
        if (lambda[r] > j) ++below;
      hooks *= (lambda[i] - j - 1) + below + 1;
    }
  return num / hooks;
}

Partition cycle_type_of(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  Partition ct;
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (size_t x = s; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    ct.push_back(len);
  }
  std::sort(ct.rbegin(), ct.rend());
  return ct;
}

Partition doubled(const Partition& mu) {
  Partition r;
  for (int x : mu) r.push_back(2 * x);
  return r;
}

std::vector<std::vector<Q>> pairing_projector(const Partition& mu) {
  int k = std::accumulate(mu.begin(), mu.end(), 0);
  if (k > 4) throw std::domain_error("pairing_projector is a small-k oracle (k <= 4)");
  int n = 2 * k;
  auto pats = enumerate_patterns(k);
  std::map<Pattern, int> index;
  for (size_t i = 0; i < pats.size(); ++i) index[pats[i]] = static_cast<int>(i);
  Partition lam = doubled(mu);
  Z fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  Q scale = Q(hook_dimension(lam)) / Q(fact);
  std::vector<std::vector<Q>> P(pats.size(), std::vector<Q>(pats.size(), Q(0)));
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::map<Partition, Z> chi;
  do {
    Partition ct = cycle_type_of(sigma);
    auto it = chi.find(ct);
    if (it == chi.end()) it = chi.emplace(ct, mn_character(lam, ct)).first;
    if (it->second == 0) continue;
    Q c = scale * Q(it->second);
    // sigma acts on pairings by relabelling points
    for (size_t j = 0; j < pats.size(); ++j) {
      Pattern img = relabel(pats[j], sigma);
      P[index[img]][j] += c;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return P;
}

}  // namespace knotmm
