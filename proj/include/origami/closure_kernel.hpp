#pragma once
//
// Batched 2x2 modular matrix product: the hot inner loop of subgroup closure
// enumeration in SL(2,Z/n).  Input is a structure-of-arrays batch of matrices
// (entry arrays a, b, c, d), multiplied on the right by one fixed generator.
//
// A scalar reference kernel is always available; AVX2 / NEON variants are
// compiled when the target supports them and selected at runtime.  All
// variants require 2 <= n <= 255 with inputs already reduced mod n, and are
// equivalence-tested against the scalar kernel.
//
#include <cstddef>
#include <cstdint>

namespace origami::kernel {

// out[k] = in[k] * gen (entries mod n).  in/out are arrays of the four entry
// pointers in row-major order a, b, c, d; gen likewise.  Aliasing in == out is
// allowed only if the pointers are identical per entry.
using BatchMulFn = void (*)(const uint16_t* const in[4], const uint16_t gen[4],
                            uint16_t* const out[4], size_t count, uint16_t n);

void batch_mul_scalar(const uint16_t* const in[4], const uint16_t gen[4], uint16_t* const out[4],
                      size_t count, uint16_t n);
#if defined(ORIGAMI_HAVE_AVX2_TU)
void batch_mul_avx2(const uint16_t* const in[4], const uint16_t gen[4], uint16_t* const out[4],
                    size_t count, uint16_t n);
#endif
#if defined(ORIGAMI_HAVE_NEON_TU)
void batch_mul_neon(const uint16_t* const in[4], const uint16_t gen[4], uint16_t* const out[4],
                    size_t count, uint16_t n);
#endif

// The variant picked for this machine (cached after the first call).
BatchMulFn active_batch_mul();
const char* active_kernel_name();

// Test hook: force "scalar" / "avx2" / "neon", or nullptr to return to
// automatic selection.  Throws std::invalid_argument for unavailable names.
void force_kernel(const char* name);

}  // namespace origami::kernel
