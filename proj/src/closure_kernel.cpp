#include "origami/closure_kernel.hpp"

#include <stdexcept>
#include <string>

namespace origami::kernel {

void batch_mul_scalar(const uint16_t* const in[4], const uint16_t gen[4], uint16_t* const out[4],
                      size_t count, uint16_t n) {
  const uint16_t *pa = in[0], *pb = in[1], *pc = in[2], *pd = in[3];
  uint16_t *oa = out[0], *ob = out[1], *oc = out[2], *od = out[3];
  const uint32_t ga = gen[0], gb = gen[1], gc = gen[2], gd = gen[3], m = n;
  for (size_t k = 0; k < count; ++k) {
    const uint32_t a = pa[k], b = pb[k], c = pc[k], d = pd[k];
    const uint16_t ra = static_cast<uint16_t>((a * ga + b * gc) % m);
    const uint16_t rb = static_cast<uint16_t>((a * gb + b * gd) % m);
    const uint16_t rc = static_cast<uint16_t>((c * ga + d * gc) % m);
    const uint16_t rd = static_cast<uint16_t>((c * gb + d * gd) % m);
    oa[k] = ra;
    ob[k] = rb;
    oc[k] = rc;
    od[k] = rd;
  }
}

namespace {

BatchMulFn pick_default() {
#if defined(ORIGAMI_HAVE_AVX2_TU)
  if (__builtin_cpu_supports("avx2")) return &batch_mul_avx2;
#endif
#if defined(ORIGAMI_HAVE_NEON_TU)
  return &batch_mul_neon;  // NEON is baseline on aarch64
#endif
  return &batch_mul_scalar;
}

BatchMulFn g_active = nullptr;

}  // namespace

BatchMulFn active_batch_mul() {
  if (g_active == nullptr) g_active = pick_default();
  return g_active;
}

const char* active_kernel_name() {
  BatchMulFn f = active_batch_mul();
  if (f == &batch_mul_scalar) return "scalar";
#if defined(ORIGAMI_HAVE_AVX2_TU)
  if (f == &batch_mul_avx2) return "avx2";
#endif
#if defined(ORIGAMI_HAVE_NEON_TU)
  if (f == &batch_mul_neon) return "neon";
#endif
  return "unknown";
}

void force_kernel(const char* name) {
  if (name == nullptr) {
    g_active = pick_default();
    return;
  }
  const std::string s = name;
  if (s == "scalar") {
    g_active = &batch_mul_scalar;
    return;
  }
#if defined(ORIGAMI_HAVE_AVX2_TU)
  if (s == "avx2" && __builtin_cpu_supports("avx2")) {
    g_active = &batch_mul_avx2;
    return;
  }
#endif
#if defined(ORIGAMI_HAVE_NEON_TU)
  if (s == "neon") {
    g_active = &batch_mul_neon;
    return;
  }
#endif
  throw std::invalid_argument("closure kernel not available: " + s);
}

}  // namespace origami::kernel
