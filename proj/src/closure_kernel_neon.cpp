// NEON variant of the batched 2x2 modular product (8 u16 lanes per step).
// Same Barrett-style reduction as the AVX2 kernel; mulhi_u16 is emulated by
// widening multiplies plus a narrowing right shift by 16.

#include "origami/closure_kernel.hpp"

#if defined(__ARM_NEON) || defined(__ARM_NEON__)
#include <arm_neon.h>

namespace origami::kernel {
namespace {

inline uint16x8_t mulhi_u16(uint16x8_t x, uint16x8_t y) {
  const uint32x4_t lo = vmull_u16(vget_low_u16(x), vget_low_u16(y));
  const uint32x4_t hi = vmull_u16(vget_high_u16(x), vget_high_u16(y));
  return vcombine_u16(vshrn_n_u32(lo, 16), vshrn_n_u32(hi, 16));
}

inline uint16x8_t cond_sub(uint16x8_t r, uint16x8_t vn) {
  return vminq_u16(r, vsubq_u16(r, vn));
}

inline uint16x8_t mul_mod(uint16x8_t x, uint16x8_t y, uint16x8_t vn, uint16x8_t vM) {
  const uint16x8_t p = vmulq_u16(x, y);
  const uint16x8_t q = mulhi_u16(p, vM);
  const uint16x8_t r = vsubq_u16(p, vmulq_u16(q, vn));
  return cond_sub(r, vn);
}

inline uint16x8_t add_mod(uint16x8_t x, uint16x8_t y, uint16x8_t vn) {
  return cond_sub(vaddq_u16(x, y), vn);
}

}  // namespace

void batch_mul_neon(const uint16_t* const in[4], const uint16_t gen[4], uint16_t* const out[4],
                    size_t count, uint16_t n) {
  const uint16x8_t vn = vdupq_n_u16(n);
  const uint16x8_t vM = vdupq_n_u16(static_cast<uint16_t>(65536u / n));
  const uint16x8_t vga = vdupq_n_u16(gen[0]);
  const uint16x8_t vgb = vdupq_n_u16(gen[1]);
  const uint16x8_t vgc = vdupq_n_u16(gen[2]);
  const uint16x8_t vgd = vdupq_n_u16(gen[3]);

  size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    const uint16x8_t a = vld1q_u16(in[0] + k);
    const uint16x8_t b = vld1q_u16(in[1] + k);
    const uint16x8_t c = vld1q_u16(in[2] + k);
    const uint16x8_t d = vld1q_u16(in[3] + k);

    const uint16x8_t ra = add_mod(mul_mod(a, vga, vn, vM), mul_mod(b, vgc, vn, vM), vn);
    const uint16x8_t rb = add_mod(mul_mod(a, vgb, vn, vM), mul_mod(b, vgd, vn, vM), vn);
    const uint16x8_t rc = add_mod(mul_mod(c, vga, vn, vM), mul_mod(d, vgc, vn, vM), vn);
    const uint16x8_t rd = add_mod(mul_mod(c, vgb, vn, vM), mul_mod(d, vgd, vn, vM), vn);

    vst1q_u16(out[0] + k, ra);
    vst1q_u16(out[1] + k, rb);
    vst1q_u16(out[2] + k, rc);
    vst1q_u16(out[3] + k, rd);
  }
  if (k < count) {
    const uint16_t* tail_in[4] = {in[0] + k, in[1] + k, in[2] + k, in[3] + k};
    uint16_t* tail_out[4] = {out[0] + k, out[1] + k, out[2] + k, out[3] + k};
    batch_mul_scalar(tail_in, gen, tail_out, count - k, n);
  }
}

}  // namespace origami::kernel
#endif  // __ARM_NEON
