#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "knotmm/json_io.hpp"
#include "knotmm/patterns.hpp"
#include "knotmm/ratfunc.hpp"

namespace knotmm {

// Functions on P_{2k} x P_{2k} that depend only on the coset type form a
// commutative algebra (dimension = number of partitions of k); products of
// such matrices are computed through structure constants.
struct CosetAlgebra {
  int k = 0;
  std::vector<Partition> types;
  int identity = 0;            // index of (1^k)
  int full_cycle = 0;          // index of (k)
  std::vector<long> class_size;  // #{q : type(p0, q) = alpha}
  // n[(nu * d + alpha) * d + beta] = #{q : type(p0,q)=alpha, type(q,p_nu)=beta}
  std::vector<long> n;
  std::map<Partition, int> index;

  int dim() const { return static_cast<int>(types.size()); }
  int index_of(const Partition& mu) const;
  long structure(int nu, int alpha, int beta) const { return n[(nu * dim() + alpha) * dim() + beta]; }

  template <class C>
  std::vector<C> multiply(const std::vector<C>& f, const std::vector<C>& h) const {
    int d = dim();
    std::vector<C> r(d, C(0));
    for (int nu = 0; nu < d; ++nu)
      for (int a = 0; a < d; ++a) {
        if (coeff_zero(f[a])) continue;
        for (int b = 0; b < d; ++b) {
          long s = structure(nu, a, b);
          if (s == 0 || coeff_zero(h[b])) continue;
          r[nu] += f[a] * h[b] * Q(s);
        }
      }
    return r;
  }

 private:
  static bool coeff_zero(const Q& x) { return x == 0; }
  static bool coeff_zero(const RatFunc& x) { return x.is_zero(); }
};

// Built by enumerating P_{2k}; shared and memoized per k.
std::shared_ptr<const CosetAlgebra> coset_algebra(int k);

enum class WMode { Generic, Fixed, Zero };
std::string mode_name(WMode m);
WMode mode_from_name(const std::string& s);

struct WeingartenTable {
  int k = 0;
  WMode mode = WMode::Fixed;
  Q tau = 0;                       // Fixed mode only
  bool pseudo_inverse = false;     // true when G (or G-hat) is singular
  std::vector<Q> values;           // Fixed / Zero, indexed like CosetAlgebra::types
  std::vector<RatFunc> generic;    // Generic
  std::shared_ptr<const CosetAlgebra> algebra;

  Q value(const Pattern& p, const Pattern& q) const { return values[algebra->index_of(coset_type(p, q))]; }
  Q value_at(const Partition& mu) const { return values[algebra->index_of(mu)]; }
};

// Gram element: tau^{#parts} (Fixed), the same as a rational function
// (Generic), or 1 on the full cycle (k) only (Zero, the tau->0 limit of G/tau).
std::vector<Q> gram_element(const CosetAlgebra& alg, WMode mode, const Q& tau);
std::vector<RatFunc> gram_element_generic(const CosetAlgebra& alg);

// Minimal-polynomial pseudo-inverse of a diagonalizable algebra element.
std::vector<Q> algebra_pseudo_inverse(const CosetAlgebra& alg, const std::vector<Q>& g);

// True when some projector coefficient vanishes (c_mu(tau), or c-hat_mu in
// Zero mode), i.e. G is singular and the pseudo-inverse is needed.
bool gram_singular(int k, WMode mode, const Q& tau);

WeingartenTable weingarten(int k, WMode mode, const Q& tau = 0);
WeingartenTable weingarten_tau_zero(int k);

// Dense matrices in enumerate_patterns(k) order, for exhaustive checks.
using QMatrix = std::vector<std::vector<Q>>;
QMatrix dense_from_element(int k, const std::vector<Q>& element);
QMatrix dense_gram(int k, WMode mode, const Q& tau);
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
// Moore-Penrose pseudo-inverse by rank factorization (independent of the
// coset-basis route).
QMatrix dense_pseudo_inverse(const QMatrix& a);

// Disk cache: one JSON file per (k, mode, tau), guarded by a format version
// and a content checksum.
class WeingartenCache {
 public:
  static constexpr int kVersion = 1;
  explicit WeingartenCache(std::string dir) : dir_(std::move(dir)) {}
  std::string path_for(int k, WMode mode, const Q& tau) const;
  // nullopt on a miss or a version mismatch; throws on a corrupted file.
  std::optional<WeingartenTable> load(int k, WMode mode, const Q& tau) const;
  void store(const WeingartenTable& t) const;
  WeingartenTable get(int k, WMode mode, const Q& tau = 0) const;

 private:
  std::string dir_;
};

json table_to_json(const WeingartenTable& t);
WeingartenTable table_from_json(const json& j);  // throws on checksum mismatch
std::string default_cache_dir();  // $KNOTMM_CACHE_DIR, else ./.knotmm_cache

struct CacheCorruption : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace knotmm
