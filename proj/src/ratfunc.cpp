#include "knotmm/ratfunc.hpp"

#include <stdexcept>

namespace knotmm {

RatFunc::RatFunc(const Poly& n, const Poly& d) {
  if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (n.is_zero()) {
    num_ = Poly();
    den_ = Poly(Q(1));
    return;
  }
  Poly g = Poly::gcd(n, d);
  Poly nn = n, dd = d;
  if (g.degree() > 0) {
    nn = Poly::divmod(n, g).first;
    dd = Poly::divmod(d, g).first;
  }
  Q l = dd.lead();
  num_ = nn * (Q(1) / l);
  den_ = dd * (Q(1) / l);
}

Poly RatFunc::to_poly() const {
  if (!is_polynomial()) throw std::domain_error("not a polynomial: " + to_string());
  return num_ * (Q(1) / den_.coeff(0));
}

Q RatFunc::eval(const Q& x) const {
  Q d = den_.eval(x);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) {
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = Poly(Q(1));
    return r;
  }
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc operator*(const RatFunc& a, const Q& s) {
  if (s == 0) return RatFunc();
  RatFunc r = a;
  r.num_ *= s;
  return r;
}

RatFunc inverse(const RatFunc& r) { return RatFunc(1) / r; }

std::string RatFunc::to_string(const char* var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

}  // namespace knotmm
