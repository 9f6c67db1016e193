#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "curvedetect/curve.hpp"

namespace cdt {

/// Seeded generator with platform-independent bounded draws
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  bool coin() { return below(2) == 1; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Freely reduced word in the free group with length uniform in [min_len, max_len].
Word random_word(Genus genus, Rng& rng, int min_len, int max_len);

/// Letters of conjugator words: generator twists to the power +-1, in table
/// order with +1 before -1.
std::vector<TwistPower> conjugator_alphabet(const TwistTable& table);

/// Every freely reduced word of exactly `length` letters over conjugator_alphabet,
/// in lexicographic order.
std::vector<MappingClassWord> conjugators_of_length(const TwistTable& table, int length);

/// Freely reduced word of uniform random length in [min_len, max_len].
MappingClassWord random_mapping_class_word(const TwistTable& table, Rng& rng, int min_len, int max_len);

/// Uniform base from curve_bases() (or separating_bases()) and a random conjugator.
CurveSpec random_curve_spec(const TwistTable& table, Rng& rng, int max_conjugator_len,
                            bool separating_only = false);

/// Product of 1..factors Torelli elements: conjugated separating twists and
/// commutators of twists along curves with zero algebraic intersection.
FreeAutomorphism random_torelli(const CurveResolver& resolver, Rng& rng, int factors, int max_conjugator_len);

}  // namespace cdt
