#pragma once

#include <cstdint>
#include <string>

namespace knotmm {

// Cycle counting for small permutations of {0..n-1}, n <= 32, stored as bytes.
// This is the inner loop of face tracing (fat graphs), loop counting when two
// pairings are glued, and coset-type computation.

enum class CycleKernel { Scalar, SSSE3, AVX2 };

constexpr int kMaxCyclePerm = 32;

int count_cycles_scalar(const uint8_t* perm, int n);
// Cycles of x -> a[b[x]].
int count_cycles_composed_scalar(const uint8_t* a, const uint8_t* b, int n);

// Dispatching entry points; the kernel is chosen once from CPU features and
// can be pinned with KNOTMM_KERNEL=scalar|ssse3|avx2.
int count_cycles(const uint8_t* perm, int n);
int count_cycles_composed(const uint8_t* a, const uint8_t* b, int n);

CycleKernel active_cycle_kernel();
bool cycle_kernel_available(CycleKernel k);
int count_cycles_with(CycleKernel k, const uint8_t* perm, int n);
int count_cycles_composed_with(CycleKernel k, const uint8_t* a, const uint8_t* b, int n);
std::string kernel_name(CycleKernel k);

}  // namespace knotmm
