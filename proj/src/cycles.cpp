#include "knotmm/cycles.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define KNOTMM_X86 1
#endif

namespace knotmm {

int count_cycles_scalar(const uint8_t* perm, int n) {
  uint32_t seen = 0;
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (seen >> s & 1u) continue;
    ++c;
    for (int x = s; !(seen >> x & 1u); x = perm[x]) seen |= 1u << x;
  }
  return c;
}

int count_cycles_composed_scalar(const uint8_t* a, const uint8_t* b, int n) {
  uint8_t p[kMaxCyclePerm];
  for (int i = 0; i < n; ++i) p[i] = a[b[i]];
  return count_cycles_scalar(p, n);
}

#ifdef KNOTMM_X86
namespace {

// Min-label propagation by pointer doubling: after r rounds every element
// carries the minimum index among its next 2^r iterates.  Elements equal to
// their own label are the cycle minima.  Unused lanes are fixed points.

__attribute__((target("ssse3"))) int cycles_ssse3(__m128i p, int n) {
  const __m128i iota = _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  __m128i lab = iota;
  for (int r = 0; r < 4; ++r) {
    __m128i nb = _mm_shuffle_epi8(lab, p);
    lab = _mm_min_epu8(lab, nb);
    p = _mm_shuffle_epi8(p, p);
  }
  unsigned m = static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(lab, iota)));
  return __builtin_popcount(m) - (16 - n);
}

__attribute__((target("ssse3"))) __m128i load16(const uint8_t* a, int n) {
  alignas(16) uint8_t buf[16];
  for (int i = 0; i < 16; ++i) buf[i] = static_cast<uint8_t>(i);
  std::memcpy(buf, a, n);
  return _mm_load_si128(reinterpret_cast<const __m128i*>(buf));
}

__attribute__((target("ssse3"))) int ssse3_count(const uint8_t* perm, int n) {
  return cycles_ssse3(load16(perm, n), n);
}

__attribute__((target("ssse3"))) int ssse3_composed(const uint8_t* a, const uint8_t* b, int n) {
  return cycles_ssse3(_mm_shuffle_epi8(load16(a, n), load16(b, n)), n);
}

// 32-lane byte gather t[idx] from two in-lane shuffles and a blend.
__attribute__((target("avx2"))) inline __m256i gather32(__m256i t, __m256i idx) {
  __m256i lo = _mm256_permute2x128_si256(t, t, 0x00);
  __m256i hi = _mm256_permute2x128_si256(t, t, 0x11);
  __m256i rlo = _mm256_shuffle_epi8(lo, idx);
  __m256i rhi = _mm256_shuffle_epi8(hi, idx);
  __m256i sel = _mm256_cmpgt_epi8(idx, _mm256_set1_epi8(15));
  return _mm256_blendv_epi8(rlo, rhi, sel);
}

__attribute__((target("avx2"))) int cycles_avx2(__m256i p, int n) {
  const __m256i iota = _mm256_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18,
                                        19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31);
  __m256i lab = iota;
  for (int r = 0; r < 5; ++r) {
    lab = _mm256_min_epu8(lab, gather32(lab, p));
    p = gather32(p, p);
  }
  unsigned m = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(lab, iota)));
  return __builtin_popcount(m) - (32 - n);
}

__attribute__((target("avx2"))) __m256i load32(const uint8_t* a, int n) {
  alignas(32) uint8_t buf[32];
  for (int i = 0; i < 32; ++i) buf[i] = static_cast<uint8_t>(i);
  std::memcpy(buf, a, n);
  return _mm256_load_si256(reinterpret_cast<const __m256i*>(buf));
}

__attribute__((target("avx2"))) int avx2_count(const uint8_t* perm, int n) {
  if (n <= 16) return cycles_ssse3(load16(perm, n), n);
  return cycles_avx2(load32(perm, n), n);
}

__attribute__((target("avx2"))) int avx2_composed(const uint8_t* a, const uint8_t* b, int n) {
  if (n <= 16) return cycles_ssse3(_mm_shuffle_epi8(load16(a, n), load16(b, n)), n);
  return cycles_avx2(gather32(load32(a, n), load32(b, n)), n);
}

}  // namespace
#endif

bool cycle_kernel_available(CycleKernel k) {
  switch (k) {
    case CycleKernel::Scalar:
      return true;
#ifdef KNOTMM_X86
    case CycleKernel::SSSE3:
      return __builtin_cpu_supports("ssse3");
    case CycleKernel::AVX2:
      return __builtin_cpu_supports("avx2");
#else
    default:
      return false;
#endif
  }
  return false;
}

std::string kernel_name(CycleKernel k) {
  switch (k) {
    case CycleKernel::Scalar: return "scalar";
    case CycleKernel::SSSE3: return "ssse3";
    case CycleKernel::AVX2: return "avx2";
  }
  return "?";
}

namespace {
CycleKernel pick_kernel() {
  if (const char* env = std::getenv("KNOTMM_KERNEL")) {
    for (auto k : {CycleKernel::Scalar, CycleKernel::SSSE3, CycleKernel::AVX2})
      if (kernel_name(k) == env) {
        if (!cycle_kernel_available(k)) throw std::runtime_error(std::string("kernel not supported here: ") + env);
        return k;
      }
    throw std::runtime_error(std::string("unknown KNOTMM_KERNEL: ") + env);
  }
  if (cycle_kernel_available(CycleKernel::AVX2)) return CycleKernel::AVX2;
  if (cycle_kernel_available(CycleKernel::SSSE3)) return CycleKernel::SSSE3;
  return CycleKernel::Scalar;
}

using CountFn = int (*)(const uint8_t*, int);
using ComposedFn = int (*)(const uint8_t*, const uint8_t*, int);

struct Dispatch {
  CycleKernel kind;
  CountFn count;
  ComposedFn composed;
};

Dispatch make_dispatch(CycleKernel k) {
  switch (k) {
#ifdef KNOTMM_X86
    case CycleKernel::SSSE3: return {k, ssse3_count, ssse3_composed};
    case CycleKernel::AVX2: return {k, avx2_count, avx2_composed};
#endif
    default: return {CycleKernel::Scalar, count_cycles_scalar, count_cycles_composed_scalar};
  }
}

const Dispatch& dispatch() {
  static const Dispatch d = make_dispatch(pick_kernel());
  return d;
}

int max_lanes(CycleKernel k) { return k == CycleKernel::SSSE3 ? 16 : kMaxCyclePerm; }
}  // namespace

CycleKernel active_cycle_kernel() { return dispatch().kind; }

int count_cycles(const uint8_t* perm, int n) {
  const auto& d = dispatch();
  if (n > max_lanes(d.kind)) return count_cycles_scalar(perm, n);
  return d.count(perm, n);
}

int count_cycles_composed(const uint8_t* a, const uint8_t* b, int n) {
  const auto& d = dispatch();
  if (n > max_lanes(d.kind)) return count_cycles_composed_scalar(a, b, n);
  return d.composed(a, b, n);
}

int count_cycles_with(CycleKernel k, const uint8_t* perm, int n) {
  if (!cycle_kernel_available(k)) throw std::runtime_error("kernel not supported: " + kernel_name(k));
  if (n > max_lanes(k)) return count_cycles_scalar(perm, n);
  return make_dispatch(k).count(perm, n);
}

int count_cycles_composed_with(CycleKernel k, const uint8_t* a, const uint8_t* b, int n) {
  if (!cycle_kernel_available(k)) throw std::runtime_error("kernel not supported: " + kernel_name(k));
  if (n > max_lanes(k)) return count_cycles_composed_scalar(a, b, n);
  return make_dispatch(k).composed(a, b, n);
}

}  // namespace knotmm
