#pragma once

// Inner-loop kernels for the interval DPs.
//
// Both cubic solvers spend nearly all their time in a fused loop of the form
//   reduce_k ( a[k] (+) b[k] (+) gate[k] )
// over contiguous int32 arrays: a max-plus scan for folding (gate encodes
// which positions may pair) and a min-plus scan for the Dyck split term.
// A scalar reference kernel always exists; an AVX2 variant is selected at
// runtime when the CPU supports it. The two are equivalence-tested.

#include <cstdint>

namespace seqfold::kern {

enum class Kind { scalar, avx2 };

const char* name(Kind k);

bool cpu_has_avx2();

// best available kernel; honours SEQFOLD_KERNEL=scalar|avx2 for overrides
Kind best();

// sentinel for "pair not allowed" in max-plus gates; far below any score
inline constexpr int32_t kNegGate = -(1 << 29);
// sentinel for "unreachable" in min-plus tables; far above any cost
inline constexpr int32_t kInfCost = (1 << 29);

// max over t in [0,len) of a[t] + b[t] + gate[t]; returns kNegGate if len == 0
int32_t max_sum3(Kind k, const int32_t* a, const int32_t* b, const int32_t* gate, int len);

// min over t in [0,len) of a[t] + b[t]; returns kInfCost if len == 0
int32_t min_sum2(Kind k, const int32_t* a, const int32_t* b, int len);

namespace detail {
int32_t max_sum3_scalar(const int32_t* a, const int32_t* b, const int32_t* gate, int len);
int32_t min_sum2_scalar(const int32_t* a, const int32_t* b, int len);
int32_t max_sum3_avx2(const int32_t* a, const int32_t* b, const int32_t* gate, int len);
int32_t min_sum2_avx2(const int32_t* a, const int32_t* b, int len);
}  // namespace detail

}  // namespace seqfold::kern
