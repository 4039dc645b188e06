#pragma once

#include <map>
#include <string>

#include "knotmm/rational.hpp"

namespace knotmm {

// Finite Laurent polynomial in N with rational coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Q& c) { if (c != 0) t_[0] = c; }  // NOLINT
  LaurentPoly(long c) : LaurentPoly(Q(c)) {}         // NOLINT
  LaurentPoly(int c) : LaurentPoly(Q(c)) {}          // NOLINT
  static LaurentPoly monomial(int e, const Q& c) {
    LaurentPoly r;
    if (c != 0) r.t_[e] = c;
    return r;
  }

  const std::map<int, Q>& terms() const { return t_; }
  Q coeff(int e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Q(0) : it->second;
  }
  bool is_zero() const { return t_.empty(); }
  int min_exp() const { return t_.empty() ? 0 : t_.begin()->first; }
  int max_exp() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  LaurentPoly shifted(int d) const {
    LaurentPoly r;
    for (auto& [e, c] : t_) r.t_[e + d] = c;
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.t_) add(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.t_) add(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(const LaurentPoly& a) { return a * Q(-1); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [e1, c1] : a.t_)
      for (auto& [e2, c2] : b.t_) r.add(e1 + e2, c1 * c2);
    return r;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const Q& s) {
    LaurentPoly r;
    if (s == 0) return r;
    for (auto& [e, c] : a.t_) r.t_[e] = c * s;
    return r;
  }
  friend LaurentPoly operator*(const Q& s, const LaurentPoly& a) { return a * s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.t_ == b.t_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!s.empty()) s += " + ";
      s += q_to_string(it->second);
      if (it->first != 0) s += "*N^" + std::to_string(it->first);
    }
    return s;
  }

 private:
  void add(int e, const Q& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  std::map<int, Q> t_;
};

// Only monomials are units.
inline LaurentPoly inverse(const LaurentPoly& p) {
  if (p.terms().size() != 1) throw std::domain_error("Laurent polynomial not invertible");
  auto& [e, c] = *p.terms().begin();
  return LaurentPoly::monomial(-e, Q(1) / c);
}

}  // namespace knotmm
