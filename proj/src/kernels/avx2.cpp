// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernel_impls.hpp"

namespace cdt::kernels::detail {
namespace {

// Signed overflow of a + b shows up as the sign bit of (a ^ r) & (b ^ r).
bool add(std::int64_t* dst, const std::int64_t* src, std::size_t n) noexcept {
  __m256i flags = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    const __m256i r = _mm256_add_epi64(a, b);
    flags = _mm256_or_si256(flags, _mm256_and_si256(_mm256_xor_si256(a, r), _mm256_xor_si256(b, r)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), r);
  }
  bool overflow = _mm256_movemask_pd(_mm256_castsi256_pd(flags)) != 0;
  for (; k < n; ++k) overflow |= __builtin_add_overflow(dst[k], src[k], &dst[k]);
  return overflow;
}

// a - b overflows iff a and b differ in sign and r differs from a.
bool sub(std::int64_t* dst, const std::int64_t* src, std::size_t n) noexcept {
  __m256i flags = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    const __m256i r = _mm256_sub_epi64(a, b);
    flags = _mm256_or_si256(flags, _mm256_and_si256(_mm256_xor_si256(a, b), _mm256_xor_si256(a, r)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), r);
  }
  bool overflow = _mm256_movemask_pd(_mm256_castsi256_pd(flags)) != 0;
  for (; k < n; ++k) overflow |= __builtin_sub_overflow(dst[k], src[k], &dst[k]);
  return overflow;
}

std::size_t first_nonzero(const std::int64_t* data, std::size_t n) noexcept {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + k));
    const int eq = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpeq_epi64(v, zero)));
    if (eq != 0xF) return k + static_cast<std::size_t>(__builtin_ctz(~eq & 0xF));
  }
  for (; k < n; ++k) {
    if (data[k] != 0) return k;
  }
  return n;
}

}  // namespace

const KernelSet kAvx2{Isa::Avx2, "avx2", &add, &sub, &first_nonzero};

}  // namespace cdt::kernels::detail
