#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "curvedetect/automorphism.hpp"

namespace cdt {

using HomologyVector = std::vector<std::int64_t>;

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}
  static IntMatrix identity(int n);

  int size() const noexcept { return n_; }
  std::int64_t& operator()(int r, int c) { return data_[index(r, c)]; }
  std::int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

  IntMatrix operator*(const IntMatrix& other) const;
  HomologyVector operator*(const HomologyVector& v) const;
  IntMatrix transpose() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(c);
  }
  int n_;
  std::vector<std::int64_t> data_;
};

/// Action of f on Gamma/Gamma_2 = Z^{2g}: column j is the abelianized image of x_j.
IntMatrix homology_action(const FreeAutomorphism& f);

/// Standard symplectic form with <e_{2i-1}, e_{2i}> = 1.
std::int64_t symplectic_pairing(const HomologyVector& u, const HomologyVector& v);
IntMatrix symplectic_form(int genus);

/// x -> x + <x, a> a, the homology action of the twist along a curve of class a.
IntMatrix transvection(const HomologyVector& a);

bool is_zero(const HomologyVector& v);
std::string to_string(const HomologyVector& v);

}  // namespace cdt
