// AVX2 variant of the batched 2x2 modular product (16 u16 lanes per step).
//
// Modular reduction is multiply-high Barrett: with M = floor(2^16 / n) and a
// product p < n^2 <= 65025, q = mulhi_u16(p, M) satisfies
// floor(p/n) - 1 <= q <= floor(p/n), so r = p - n q lies in [0, 2n) and one
// conditional subtract (the unsigned min trick) finishes the job.  The same
// bound covers the final sum of two residues (< 2n).  The unit test checks
// this identity exhaustively for every n in [2, 255].

#include "origami/closure_kernel.hpp"

#include <immintrin.h>

namespace origami::kernel {
namespace {

// r in [0, 2n) -> r mod n.  If r < n, r - n wraps around 2^16 and loses min().
inline __m256i cond_sub(__m256i r, __m256i vn) {
  return _mm256_min_epu16(r, _mm256_sub_epi16(r, vn));
}

// (x * y) mod n for lanes x, y < n.
inline __m256i mul_mod(__m256i x, __m256i y, __m256i vn, __m256i vM) {
  const __m256i p = _mm256_mullo_epi16(x, y);
  const __m256i q = _mm256_mulhi_epu16(p, vM);
  const __m256i r = _mm256_sub_epi16(p, _mm256_mullo_epi16(q, vn));
  return cond_sub(r, vn);
}

inline __m256i add_mod(__m256i x, __m256i y, __m256i vn) {
  return cond_sub(_mm256_add_epi16(x, y), vn);
}

}  // namespace

void batch_mul_avx2(const uint16_t* const in[4], const uint16_t gen[4], uint16_t* const out[4],
                    size_t count, uint16_t n) {
  const __m256i vn = _mm256_set1_epi16(static_cast<short>(n));
  const __m256i vM = _mm256_set1_epi16(static_cast<short>(65536u / n));
  const __m256i vga = _mm256_set1_epi16(static_cast<short>(gen[0]));
  const __m256i vgb = _mm256_set1_epi16(static_cast<short>(gen[1]));
  const __m256i vgc = _mm256_set1_epi16(static_cast<short>(gen[2]));
  const __m256i vgd = _mm256_set1_epi16(static_cast<short>(gen[3]));

  size_t k = 0;
  for (; k + 16 <= count; k += 16) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in[0] + k));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in[1] + k));
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in[2] + k));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in[3] + k));

    const __m256i ra = add_mod(mul_mod(a, vga, vn, vM), mul_mod(b, vgc, vn, vM), vn);
    const __m256i rb = add_mod(mul_mod(a, vgb, vn, vM), mul_mod(b, vgd, vn, vM), vn);
    const __m256i rc = add_mod(mul_mod(c, vga, vn, vM), mul_mod(d, vgc, vn, vM), vn);
    const __m256i rd = add_mod(mul_mod(c, vgb, vn, vM), mul_mod(d, vgd, vn, vM), vn);

    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[0] + k), ra);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[1] + k), rb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[2] + k), rc);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out[3] + k), rd);
  }
  if (k < count) {
    const uint16_t* tail_in[4] = {in[0] + k, in[1] + k, in[2] + k, in[3] + k};
    uint16_t* tail_out[4] = {out[0] + k, out[1] + k, out[2] + k, out[3] + k};
    batch_mul_scalar(tail_in, gen, tail_out, count - k, n);
  }
}

}  // namespace origami::kernel
