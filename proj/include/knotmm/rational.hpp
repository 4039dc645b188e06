#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace knotmm {

using Q = mpq_class;
using Z = mpz_class;

// "p/q" (or "p" when integral); always canonical.
inline std::string q_to_string(const Q& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Q q_from_string(const std::string& s) {
  Q r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  return r;
}

inline bool is_integer(const Q& x) { return x.get_den() == 1; }

}  // namespace knotmm
