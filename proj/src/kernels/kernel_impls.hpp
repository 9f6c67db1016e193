#pragma once

#include "curvedetect/kernels.hpp"

namespace cdt::kernels::detail {

extern const KernelSet kScalar;
#if defined(CDT_HAVE_AVX2_KERNELS)
extern const KernelSet kAvx2;
#endif
#if defined(CDT_HAVE_NEON_KERNELS)
extern const KernelSet kNeon;
#endif

}  // namespace cdt::kernels::detail
