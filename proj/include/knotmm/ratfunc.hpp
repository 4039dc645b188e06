#pragma once

#include <string>

#include "knotmm/poly.hpp"

namespace knotmm {

// Element of Q(tau), kept in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Q(1)) {}
  RatFunc(const Q& c) : num_(c), den_(Q(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Q(c)) {}            // NOLINT
  RatFunc(int c) : RatFunc(Q(c)) {}             // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(Q(1)) {}  // NOLINT
  RatFunc(const Poly& n, const Poly& d);

  static RatFunc tau() { return RatFunc(Poly::x()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  Poly to_poly() const;  // throws unless is_polynomial()
  Q eval(const Q& x) const;  // throws at a pole

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const Q& s);
  friend RatFunc operator*(const Q& s, const RatFunc& a) { return a * s; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string(const char* var = "t") const;

 private:
  Poly num_, den_;
};

RatFunc inverse(const RatFunc& r);

}  // namespace knotmm
