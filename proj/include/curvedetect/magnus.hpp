#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "curvedetect/kernels.hpp"
#include "curvedetect/word.hpp"

namespace cdt {

using BigInt = boost::multiprecision::cpp_int;

/// A word in the noncommuting variables X1..X{2g}.
///
/// `code` packs the factors as base-2g digits, first factor most significant,
/// each digit being the zero-based generator index.
struct Monomial {
  int degree = 0;
  std::uint64_t code = 0;

  static Monomial from_factors(Genus genus, const std::vector<int>& factors);
  /// One-based generator indices, first factor first.
  std::vector<int> factors(Genus genus) const;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Noncommutative power series with integer coefficients, truncated above `cap`.
///
/// Terms are kept sparse with no stored zeros. Iteration order (degree, then
/// packed code) is the stable order used by the text form.
class TruncatedSeries {
 public:
  using Terms = std::map<Monomial, BigInt>;

  TruncatedSeries(Genus genus, int cap, Terms terms);

  static TruncatedSeries one(Genus genus, int cap);

  Genus genus() const noexcept { return genus_; }
  int cap() const noexcept { return cap_; }
  const Terms& terms() const noexcept { return terms_; }

  /// Zero when the monomial is absent.
  BigInt coefficient(const Monomial& m) const;
  /// Degree-d part as its own term map.
  Terms homogeneous_part(int degree) const;
  /// Lowest degree >= 1 carrying a nonzero term.
  std::optional<int> lowest_positive_degree() const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.genus_ == b.genus_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
  }

 private:
  Genus genus_;
  int cap_;
  Terms terms_;
};

/// Image of w under x -> 1 + X, x^-1 -> 1 - X + X^2 - ..., truncated at `cap`.
///
/// Runs the int64 kernels from kernels::best() and redoes the expansion in
/// exact arithmetic if any coefficient overflows.
TruncatedSeries magnus_expand(const Word& w, int cap);

/// Same expansion through one specific kernel set, with the same exact fallback.
TruncatedSeries magnus_expand_with(const Word& w, int cap, const kernels::KernelSet& kernels);

/// Exact-arithmetic expansion only; the reference the int64 kernels are checked against.
TruncatedSeries magnus_expand_exact(const Word& w, int cap);

/// Product truncated at the common cap. Throws InvalidArgument on cap mismatch.
TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t);

/// Position of w in the lower central series, decided up to `cap`.
struct DepthResult {
  enum class Kind { Identity, Exact, AtLeast };
  Kind kind = Kind::Identity;
  /// Exact: w lies in Gamma_degree but not Gamma_{degree+1}. AtLeast: w lies in Gamma_degree.
  int degree = 0;

  static DepthResult identity() { return {Kind::Identity, 0}; }
  static DepthResult exact(int k) { return {Kind::Exact, k}; }
  static DepthResult at_least(int k) { return {Kind::AtLeast, k}; }

  friend bool operator==(const DepthResult&, const DepthResult&) = default;
};

/// w is in Gamma_k iff its expansion is 1 + (terms of degree >= k) (Magnus).
DepthResult lcs_depth(const Word& w, int cap);

/// Lowest degree in 1..cap where the expansion of w differs from 1, if any.
/// This is the fast path behind lcs_depth and Johnson membership.
std::optional<int> lowest_nonvanishing_degree(const Word& w, int cap);

/// Number of monomials of degree 0..cap; throws InvalidArgument if the dense
/// table would not fit in memory limits.
std::size_t dense_size(Genus genus, int cap);

std::string to_string(const Monomial& m, Genus genus);
/// `1 + 1·X1X2 - 1·X2X1 + O(deg 3)`
std::string to_string(const TruncatedSeries& s);
std::string to_string(const DepthResult& d);

}  // namespace cdt
