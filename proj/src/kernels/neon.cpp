#include <arm_neon.h>

#include "kernel_impls.hpp"

namespace cdt::kernels::detail {
namespace {

bool add(std::int64_t* dst, const std::int64_t* src, std::size_t n) noexcept {
  uint64x2_t flags = vdupq_n_u64(0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const int64x2_t a = vld1q_s64(dst + k);
    const int64x2_t b = vld1q_s64(src + k);
    const int64x2_t r = vaddq_s64(a, b);
    const int64x2_t f = vandq_s64(veorq_s64(a, r), veorq_s64(b, r));
    flags = vorrq_u64(flags, vreinterpretq_u64_s64(f));
    vst1q_s64(dst + k, r);
  }
  bool overflow = ((vgetq_lane_u64(flags, 0) | vgetq_lane_u64(flags, 1)) >> 63) != 0;
  for (; k < n; ++k) overflow |= __builtin_add_overflow(dst[k], src[k], &dst[k]);
  return overflow;
}

bool sub(std::int64_t* dst, const std::int64_t* src, std::size_t n) noexcept {
  uint64x2_t flags = vdupq_n_u64(0);
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const int64x2_t a = vld1q_s64(dst + k);
    const int64x2_t b = vld1q_s64(src + k);
    const int64x2_t r = vsubq_s64(a, b);
    const int64x2_t f = vandq_s64(veorq_s64(a, b), veorq_s64(a, r));
    flags = vorrq_u64(flags, vreinterpretq_u64_s64(f));
    vst1q_s64(dst + k, r);
  }
  bool overflow = ((vgetq_lane_u64(flags, 0) | vgetq_lane_u64(flags, 1)) >> 63) != 0;
  for (; k < n; ++k) overflow |= __builtin_sub_overflow(dst[k], src[k], &dst[k]);
  return overflow;
}

std::size_t first_nonzero(const std::int64_t* data, std::size_t n) noexcept {
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const int64x2_t v = vld1q_s64(data + k);
    if ((vgetq_lane_s64(v, 0) | vgetq_lane_s64(v, 1)) != 0) return data[k] != 0 ? k : k + 1;
  }
  for (; k < n; ++k) {
    if (data[k] != 0) return k;
  }
  return n;
}

}  // namespace

const KernelSet kNeon{Isa::Neon, "neon", &add, &sub, &first_nonzero};

}  // namespace cdt::kernels::detail
