#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotmm/rational.hpp"

namespace knotmm {

// Univariate polynomial over Q, ascending coefficients.  With cap >= 0 it is
// the truncated ring Q[x]/(x^{cap+1}); cap < 0 means no truncation.  Mixing a
// capped and an uncapped value keeps the smaller cap.
class Poly {
 public:
  Poly() = default;
  Poly(const Q& c) : c_{c} { trim(); }  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Q(c)) {}          // NOLINT
  Poly(int c) : Poly(Q(c)) {}           // NOLINT
  explicit Poly(std::vector<Q> c, int cap = -1) : c_(std::move(c)), cap_(cap) { trim(); }

  static Poly x(int cap = -1) { return Poly(std::vector<Q>{0, 1}, cap); }
  static Poly monomial(int d, const Q& a, int cap = -1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int cap() const { return cap_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Q coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Q(0); }
  const std::vector<Q>& coeffs() const { return c_; }
  Q lead() const { return c_.empty() ? Q(0) : c_.back(); }

  Q eval(const Q& x) const;
  Poly with_cap(int cap) const { return Poly(c_, cap); }
  Poly derivative() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Q& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Q(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Q& s) { return a *= s; }
  friend Poly operator*(const Q& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Euclidean division; only for uncapped values.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic
  Poly monic() const;

  std::string to_string(const char* var = "t") const;

 private:
  void trim();
  std::vector<Q> c_;
  int cap_ = -1;
};

int merge_cap(int a, int b);

// Inverse in the capped ring (needs nonzero constant term), or of a nonzero
// constant when uncapped.
Poly inverse(const Poly& p);

// Unique polynomial of degree < xs.size() through the points.
Poly interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys);

using TauPoly = Poly;

}  // namespace knotmm
