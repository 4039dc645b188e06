#include "knotmm/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace knotmm {

int merge_cap(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return a < b ? a : b;
}

Poly Poly::monomial(int d, const Q& a, int cap) {
  std::vector<Q> c(d + 1);
  c[d] = a;
  return Poly(std::move(c), cap);
}

void Poly::trim() {
  if (cap_ >= 0 && static_cast<int>(c_.size()) > cap_ + 1) c_.resize(cap_ + 1);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Q Poly::eval(const Q& x) const {
  Q r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Q> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d), cap_);
}

Poly& Poly::operator+=(const Poly& o) {
  cap_ = merge_cap(cap_, o.cap_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  cap_ = merge_cap(cap_, o.cap_);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Q& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  int cap = merge_cap(a.cap_, b.cap_);
  if (a.c_.empty() || b.c_.empty()) return Poly(std::vector<Q>{}, cap);
  size_t n = a.c_.size() + b.c_.size() - 1;
  if (cap >= 0 && n > static_cast<size_t>(cap + 1)) n = cap + 1;
  std::vector<Q> r(n);
  for (size_t i = 0; i < a.c_.size() && i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(r), cap);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.cap_ >= 0 || b.cap_ >= 0) throw std::domain_error("divmod on truncated polynomial");
  std::vector<Q> r = a.c_;
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Poly(), a};
  std::vector<Q> q(dq + 1);
  Q inv_lead = 1 / b.lead();
  for (int i = dq; i >= 0; --i) {
    Q f = r[i + db] * inv_lead;
    q[i] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[i + j] -= f * b.c_[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= Q(1) / lead();
  return r;
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string Poly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Q a = c_[i];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    first = false;
    Q m = abs(a);
    if (i == 0 || m != 1) os << q_to_string(m);
    if (i > 0) {
      if (m != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly inverse(const Poly& p) {
  if (p.coeff(0) == 0) throw std::domain_error("polynomial not invertible");
  if (p.cap() < 0) {
    if (!p.is_constant()) throw std::domain_error("non-constant polynomial not invertible");
    return Poly(Q(1) / p.coeff(0));
  }
  int n = p.cap();
  std::vector<Q> r(n + 1);
  Q inv0 = Q(1) / p.coeff(0);
  r[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    Q s = 0;
    for (int i = 1; i <= m && i <= p.degree(); ++i) s += p.coeff(i) * r[m - i];
    r[m] = -s * inv0;
  }
  return Poly(std::move(r), n);
}

Poly interpolate(const std::vector<Q>& xs, const std::vector<Q>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  size_t n = xs.size();
  // Newton divided differences, then expand to monomial form.
  std::vector<Q> d = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      Q den = xs[i] - xs[i - j];
      if (den == 0) throw std::invalid_argument("interpolate: repeated node");
      d[i] = (d[i] - d[i - 1]) / den;
    }
  Poly r;
  for (size_t i = n; i-- > 0;) {
    r = r * Poly(std::vector<Q>{-xs[i], 1});
    r += Poly(d[i]);
  }
  return r;
}

}  // namespace knotmm
