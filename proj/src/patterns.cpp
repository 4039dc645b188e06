#include "knotmm/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "knotmm/cycles.hpp"

namespace knotmm {

bool is_pattern(const Pattern& p) {
  int n = static_cast<int>(p.size());
  if (n % 2) return false;
  for (int i = 0; i < n; ++i)
    if (p[i] >= n || p[i] == i || p[p[i]] != i) return false;
  return true;
}

std::vector<Pattern> enumerate_patterns(int k) {
  if (k < 0) throw std::domain_error("enumerate_patterns: negative k");
  std::vector<Pattern> out;
  Pattern cur(2 * k, 0);
  std::vector<bool> used(2 * k, false);
  std::function<void()> rec = [&]() {
    int a = -1;
    for (int i = 0; i < 2 * k; ++i)
      if (!used[i]) {
        a = i;
        break;
      }
    if (a < 0) {
      out.push_back(cur);
      return;
    }
    used[a] = true;
    for (int b = a + 1; b < 2 * k; ++b) {
      if (used[b]) continue;
      used[b] = true;
      cur[a] = static_cast<uint8_t>(b);
      cur[b] = static_cast<uint8_t>(a);
      rec();
      used[b] = false;
    }
    used[a] = false;
  };
  rec();
  return out;
}

long double_factorial_odd(int k) {
  long r = 1;
  for (int i = 2 * k - 1; i > 1; i -= 2) r *= i;
  return r;
}

Pattern relabel(const Pattern& p, const std::vector<int>& s) {
  Pattern q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[s[i]] = static_cast<uint8_t>(s[p[i]]);
  return q;
}

Pattern rotate(const Pattern& p, int r) {
  int n = static_cast<int>(p.size());
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = ((i + r) % n + n) % n;
  return relabel(p, s);
}

Pattern reflect(const Pattern& p) {
  int n = static_cast<int>(p.size());
  std::vector<int> s(n);
  for (int i = 0; i < n; ++i) s[i] = (n - i) % n;
  return relabel(p, s);
}

Pattern canonical(const Pattern& p) {
  int n = static_cast<int>(p.size());
  if (n == 0) return p;
  Pattern best = p, q(n);
  for (int r = 0; r < n; ++r)
    for (int refl = 0; refl < 2; ++refl) {
      for (int i = 0; i < n; ++i) {
        int si = refl ? ((r - i) % n + n) % n : (i + r) % n;
        int sp = refl ? ((r - p[i]) % n + n) % n : (p[i] + r) % n;
        q[si] = static_cast<uint8_t>(sp);
      }
      if (q < best) best = q;
    }
  return best;
}

int glue_loops(const Pattern& p, const Pattern& q) {
  if (p.size() != q.size()) throw std::invalid_argument("glue_loops: size mismatch");
  int n = static_cast<int>(p.size());
  if (n == 0) return 0;
  if (n <= kMaxCyclePerm) return count_cycles_composed(p.data(), q.data(), n) / 2;
  std::vector<uint8_t> c(n);
  for (int i = 0; i < n; ++i) c[i] = p[q[i]];
  std::vector<bool> seen(n, false);
  int cyc = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++cyc;
    for (int x = s; !seen[x]; x = c[x]) seen[x] = true;
  }
  return cyc / 2;
}

TauPoly gram_entry(const Pattern& p, const Pattern& q) { return Poly::monomial(glue_loops(p, q), Q(1)); }

Partition coset_type(const Pattern& p, const Pattern& q) {
  if (p.size() != q.size()) throw std::invalid_argument("coset_type: size mismatch");
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  Partition mu;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int m = 0, x = s;
    do {
      seen[x] = true;
      int y = q[x];
      seen[y] = true;
      x = p[y];
      ++m;
    } while (x != s);
    mu.push_back(m);
  }
  std::sort(mu.rbegin(), mu.rend());
  return mu;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int maxp) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::string partition_to_string(const Partition& mu) {
  std::string s = "(";
  for (size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + ")";
}

TauPoly c_mu(const Partition& mu) {
  Poly r(Q(1));
  for (size_t i = 1; i <= mu.size(); ++i)
    for (int j = 1; j <= mu[i - 1]; ++j) r = r * Poly(std::vector<Q>{Q(2 * j - static_cast<int>(i) - 1), 1});
  return r;
}

Q c_mu_at(const Partition& mu, const Q& tau) {
  Q r = 1;
  for (size_t i = 1; i <= mu.size(); ++i)
    for (int j = 1; j <= mu[i - 1]; ++j) r *= tau + 2 * j - static_cast<int>(i) - 1;
  return r;
}

Q c_hat_mu(const Partition& mu) {
  Q r = 1;
  for (size_t i = 1; i <= mu.size(); ++i)
    for (int j = 1; j <= mu[i - 1]; ++j) {
      if (i == 1 && j == 1) continue;
      r *= 2 * j - static_cast<int>(i) - 1;
    }
  return r;
}

std::string pattern_to_string(const Pattern& p) {
  bool wide = p.size() > 9;
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < i) continue;
    s += "(" + std::to_string(i + 1) + (wide ? "," : "") + std::to_string(p[i] + 1) + ")";
  }
  return s.empty() ? "()" : s;
}

Pattern pattern_from_string(const std::string& s) {
  std::vector<std::pair<int, int>> pairs;
  size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw std::invalid_argument("bad pattern: " + s);
    size_t j = s.find(')', i);
    if (j == std::string::npos) throw std::invalid_argument("bad pattern: " + s);
    std::string body = s.substr(i + 1, j - i - 1);
    i = j + 1;
    if (body.empty()) continue;
    int a, b;
    if (body.find(',') != std::string::npos || body.find(' ') != std::string::npos) {
      std::replace(body.begin(), body.end(), ',', ' ');
      std::istringstream is(body);
      if (!(is >> a >> b)) throw std::invalid_argument("bad pair in pattern: " + s);
    } else {
      if (body.size() != 2 || !std::isdigit(static_cast<unsigned char>(body[0])) ||
          !std::isdigit(static_cast<unsigned char>(body[1])))
        throw std::invalid_argument("bad pair in pattern: " + s);
      a = body[0] - '0';
      b = body[1] - '0';
    }
    pairs.emplace_back(a, b);
  }
  int n = 2 * static_cast<int>(pairs.size());
  Pattern p(n, 255);
  for (auto [a, b] : pairs) {
    if (a < 1 || b < 1 || a > n || b > n || a == b || p[a - 1] != 255 || p[b - 1] != 255)
      throw std::invalid_argument("not a pairing: " + s);
    p[a - 1] = static_cast<uint8_t>(b - 1);
    p[b - 1] = static_cast<uint8_t>(a - 1);
  }
  return p;
}

std::vector<int> pattern_to_one_based(const Pattern& p) {
  std::vector<int> v;
  for (auto x : p) v.push_back(x + 1);
  return v;
}

Pattern pattern_from_one_based(const std::vector<int>& v) {
  Pattern p;
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size())) throw std::invalid_argument("pattern entry out of range");
    p.push_back(static_cast<uint8_t>(x - 1));
  }
  if (!is_pattern(p)) throw std::invalid_argument("not a fixed-point-free involution");
  return p;
}

}  // namespace knotmm
