#include "kernel_impls.hpp"

namespace cdt::kernels::detail {
namespace {

bool add(std::int64_t* dst, const std::int64_t* src, std::size_t n) noexcept {
  bool overflow = false;
  for (std::size_t k = 0; k < n; ++k) overflow |= __builtin_add_overflow(dst[k], src[k], &dst[k]);
  return overflow;
}

bool sub(std::int64_t* dst, const std::int64_t* src, std::size_t n) noexcept {
  bool overflow = false;
  for (std::size_t k = 0; k < n; ++k) overflow |= __builtin_sub_overflow(dst[k], src[k], &dst[k]);
  return overflow;
}

std::size_t first_nonzero(const std::int64_t* data, std::size_t n) noexcept {
  for (std::size_t k = 0; k < n; ++k) {
    if (data[k] != 0) return k;
  }
  return n;
}

}  // namespace

const KernelSet kScalar{Isa::Scalar, "scalar", &add, &sub, &first_nonzero};

}  // namespace cdt::kernels::detail
