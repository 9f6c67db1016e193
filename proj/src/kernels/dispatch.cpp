#include "kernel_impls.hpp"

namespace cdt::kernels {

const KernelSet& scalar() noexcept { return detail::kScalar; }

std::vector<const KernelSet*> available() {
  std::vector<const KernelSet*> out{&detail::kScalar};
#if defined(CDT_HAVE_AVX2_KERNELS)
  if (__builtin_cpu_supports("avx2")) out.push_back(&detail::kAvx2);
#endif
#if defined(CDT_HAVE_NEON_KERNELS)
  out.push_back(&detail::kNeon);
#endif
  return out;
}

const KernelSet& best() {
  static const KernelSet* const selected = available().back();
  return *selected;
}

}  // namespace cdt::kernels
