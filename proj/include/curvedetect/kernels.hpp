#pragma once

// Block kernels for the dense Magnus expansion.
//
// Left-multiplying a truncated series by 1 + X_i (or its inverse) touches one
// contiguous slice per degree, so the whole expansion reduces to int64 block
// add/sub. Each ISA variant reports signed overflow instead of wrapping; the
// caller then falls back to exact arithmetic.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cdt::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelSet {
  Isa isa;
  const char* name;
  /// dst[k] += src[k]. Returns true if any lane overflowed.
  bool (*add)(std::int64_t* dst, const std::int64_t* src, std::size_t n) noexcept;
  /// dst[k] -= src[k]. Returns true if any lane overflowed.
  bool (*sub)(std::int64_t* dst, const std::int64_t* src, std::size_t n) noexcept;
  /// Index of the first nonzero entry, or n.
  std::size_t (*first_nonzero)(const std::int64_t* data, std::size_t n) noexcept;
};

const KernelSet& scalar() noexcept;

/// Variants compiled into this binary that the running CPU supports, scalar first.
std::vector<const KernelSet*> available();

/// Widest supported variant; selected once at first use.
const KernelSet& best();

}  // namespace cdt::kernels
