#pragma once

// Truncated formal power series in g over an exact coefficient ring C.
// C must provide +, -, *, C * Q, construction from int, and the free
// functions coeff_is_zero(C) and inverse(C).

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "knotmm/laurent.hpp"
#include "knotmm/poly.hpp"
#include "knotmm/ratfunc.hpp"
#include "knotmm/rational.hpp"

namespace knotmm {

inline bool coeff_is_zero(const Q& x) { return x == 0; }
inline bool coeff_is_zero(const Poly& x) { return x.is_zero(); }
inline bool coeff_is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool coeff_is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline Q inverse(const Q& x) {
  if (x == 0) throw std::domain_error("division by zero");
  return Q(1) / x;
}

template <class C>
class Series {
 public:
  Series() : c_(1, C(0)) {}
  explicit Series(int order) : c_(check(order) + 1, C(0)) {}
  Series(int order, std::vector<C> coeffs) : c_(std::move(coeffs)) {
    c_.resize(check(order) + 1, C(0));
  }

  static Series constant(const C& a, int order) {
    Series s(order);
    s.c_[0] = a;
    return s;
  }
  static Series var(int order) {
    Series s(order);
    if (order >= 1) s.c_[1] = C(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  const C& operator[](int i) const { return c_.at(i); }
  C& operator[](int i) { return c_.at(i); }
  C coeff_or_zero(int i) const { return i >= 0 && i <= order() ? c_[i] : C(0); }

  Series truncated(int n) const {
    if (n > order()) throw std::domain_error("cannot extend a truncated series");
    return Series(n, std::vector<C>(c_.begin(), c_.begin() + n + 1));
  }
  // Lowest index with a nonzero coefficient, or order()+1 when zero.
  int valuation() const {
    for (int i = 0; i <= order(); ++i)
      if (!coeff_is_zero(c_[i])) return i;
    return order() + 1;
  }
  bool is_zero() const { return valuation() > order(); }

  Series& operator+=(const Series& o) {
    shrink(o.order());
    for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    shrink(o.order());
    for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) {
    for (auto& x : a.c_) x = C(0) - x;
    return a;
  }
  friend Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (coeff_is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  friend Series operator*(Series a, const C& s) {
    for (auto& x : a.c_) x = x * s;
    return a;
  }
  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  // Same truncation order, coefficients compared up to min order.
  bool agrees_with(const Series& o, int upto) const {
    for (int i = 0; i <= upto; ++i)
      if (coeff_or_zero(i) != o.coeff_or_zero(i)) return false;
    return true;
  }

  template <class F>
  auto map(F&& f) const -> Series<decltype(f(std::declval<C>()))> {
    using D = decltype(f(std::declval<C>()));
    std::vector<D> out;
    out.reserve(c_.size());
    for (auto& x : c_) out.push_back(f(x));
    return Series<D>(order(), std::move(out));
  }

 private:
  static int check(int order) {
    if (order < 0) throw std::domain_error("negative truncation order");
    return order;
  }
  void shrink(int n) {
    if (n < order()) c_.resize(n + 1);
  }
  std::vector<C> c_;
};

using QSeries = Series<Q>;
using TauSeries = Series<Poly>;

template <class C>
Series<C> times_g_power(const Series<C>& f, int k) {
  Series<C> r(f.order());
  for (int i = 0; i + k <= f.order(); ++i) r[i + k] = f[i];
  return r;
}

template <class C>
Series<C> inverse(const Series<C>& a) {
  int n = a.order();
  Series<C> r(n);
  C inv0 = inverse(a[0]);
  r[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    C s(0);
    for (int i = 1; i <= m; ++i)
      if (!coeff_is_zero(a[i])) s += a[i] * r[m - i];
    r[m] = C(0) - s * inv0;
  }
  return r;
}

template <class C>
Series<C> derivative(const Series<C>& f) {
  if (f.order() == 0) return Series<C>(0);
  Series<C> r(f.order() - 1);
  for (int i = 1; i <= f.order(); ++i) r[i - 1] = f[i] * Q(i);
  return r;
}

// Antiderivative with zero constant term; one order more precise than f.
template <class C>
Series<C> integral(const Series<C>& f) {
  Series<C> r(f.order() + 1);
  for (int i = 0; i <= f.order(); ++i) r[i + 1] = f[i] * Q(1, i + 1);
  return r;
}

template <class C>
Series<C> log_series(const Series<C>& f) {
  if (f[0] != C(1)) throw std::domain_error("log needs constant term 1");
  if (f.order() == 0) return Series<C>(0);
  return integral(derivative(f) * inverse(f.truncated(f.order() - 1)));
}

template <class C>
Series<C> exp_series(const Series<C>& f) {
  if (!coeff_is_zero(f[0])) throw std::domain_error("exp needs zero constant term");
  int n = f.order();
  // y' = f' y, solved coefficientwise.
  Series<C> r(n);
  r[0] = C(1);
  for (int m = 1; m <= n; ++m) {
    C s(0);
    for (int k = 1; k <= m; ++k)
      if (!coeff_is_zero(f[k])) s += f[k] * Q(k) * r[m - k];
    r[m] = s * Q(1, m);
  }
  return r;
}

template <class C>
Series<C> pow_int(Series<C> base, long e) {
  if (e < 0) return pow_int(inverse(base), -e);
  Series<C> r = Series<C>::constant(C(1), base.order());
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

// f(h(g)); h must have zero constant term.
template <class C>
Series<C> compose(const Series<C>& f, const Series<C>& h) {
  if (!coeff_is_zero(h[0])) throw std::domain_error("compose: inner series has nonzero constant term");
  int n = std::min(f.order(), h.order());
  Series<C> hn = h.truncated(n);
  Series<C> r = Series<C>::constant(f[n], n);
  for (int i = n - 1; i >= 0; --i) {
    r = r * hn;
    r[0] += f[i];
  }
  return r;
}

// Polynomial in y with series coefficients, P(y) = sum_i p[i] y^i.
template <class C>
Series<C> eval_poly(const std::vector<Series<C>>& p, const Series<C>& y) {
  int n = y.order();
  for (auto& c : p) n = std::min(n, c.order());
  Series<C> r(n);
  Series<C> yn = y.truncated(n);
  for (size_t i = p.size(); i-- > 0;) r = r * yn + p[i].truncated(n);
  return r;
}

template <class C>
std::vector<Series<C>> poly_derivative(const std::vector<Series<C>>& p) {
  std::vector<Series<C>> d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * C(static_cast<long>(i)));
  return d;
}

// Root of P with constant term y0 by Newton iteration (precision doubles each
// step); the result is checked by substitution.
template <class C>
Series<C> solve_algebraic(const std::vector<Series<C>>& p, const C& y0) {
  if (p.empty()) throw std::domain_error("solve_algebraic: empty polynomial");
  int n = p[0].order();
  for (auto& c : p) n = std::min(n, c.order());
  auto dp = poly_derivative(p);
  Series<C> y = Series<C>::constant(y0, n);
  Series<C> r0 = eval_poly(p, y);
  if (!coeff_is_zero(r0[0])) throw std::domain_error("solve_algebraic: seed is not a root at g=0");
  C d0 = dp.empty() ? C(0) : eval_poly(dp, y)[0];
  if (coeff_is_zero(d0)) throw std::domain_error("solve_algebraic: singular derivative at seed");
  int prec = 1;
  while (prec <= n) {
    prec = std::min(2 * prec, n + 1);
    int m = prec - 1;
    std::vector<Series<C>> pm, dm;
    for (auto& c : p) pm.push_back(c.truncated(m));
    for (auto& c : dp) dm.push_back(c.truncated(m));
    Series<C> ym = y.truncated(m);
    Series<C> step = eval_poly(pm, ym) * inverse(eval_poly(dm, ym));
    ym -= step;
    for (int i = 0; i <= m; ++i) y[i] = ym[i];
  }
  if (!eval_poly(p, y).is_zero()) throw std::logic_error("solve_algebraic: residual check failed");
  return y;
}

// Compositional inverse of f, f(0)=0 and f'(0) invertible.
template <class C>
Series<C> reversion(const Series<C>& f) {
  if (f.order() < 1) throw std::domain_error("reversion needs order >= 1");
  if (!coeff_is_zero(f[0])) throw std::domain_error("reversion needs f(0)=0");
  if (coeff_is_zero(f[1])) throw std::domain_error("reversion needs invertible f'(0)");
  int n = f.order();
  Series<C> df = derivative(f);
  Series<C> y(n);
  y[1] = inverse(f[1]);
  int prec = 2;
  while (prec <= n) {
    prec = std::min(2 * prec, n + 1);
    int m = prec - 1;
    Series<C> ym = y.truncated(m);
    Series<C> res = compose(f.truncated(m), ym) - Series<C>::var(m);
    // res = O(g), so f' is only needed to order m-1
    Series<C> d = compose(df.truncated(m - 1), ym.truncated(m - 1));
    Series<C> res_over_g(m - 1);
    for (int i = 0; i < m; ++i) res_over_g[i] = res[i + 1];
    Series<C> step = res_over_g * inverse(d);
    for (int i = 1; i <= m; ++i) y[i] -= step[i - 1];
  }
  return y;
}

template <class C>
std::string to_string(const Series<C>& s) {
  std::string out;
  for (int i = 0; i <= s.order(); ++i) {
    if (coeff_is_zero(s[i])) continue;
    if (!out.empty()) out += " + ";
    std::string c;
    if constexpr (std::is_same_v<C, Q>) c = q_to_string(s[i]);
    else c = "(" + s[i].to_string() + ")";
    out += c;
    if (i) out += "*g^" + std::to_string(i);
  }
  return (out.empty() ? "0" : out) + " + O(g^" + std::to_string(s.order() + 1) + ")";
}

}  // namespace knotmm
