#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

#include "curvedetect/homology.hpp"
#include "curvedetect/mcg.hpp"

namespace cdt {

/// An essential simple closed curve, presented as the image of a table base
/// curve under a mapping class: conjugator(base).
struct CurveSpec {
  Genus genus;
  std::string base;
  MappingClassWord conjugator;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// spec := NAME ('@' '[' (NAME ('^' INT)?)* ']')?
CurveSpec parse_curve_spec(Genus genus, std::string_view text);
/// `C1` when the conjugator is empty, `Sep1 @ [C3 C4^-1]` otherwise.
std::string to_string(const CurveSpec& c);

struct CurveData {
  /// t_c = f t_base f^-1
  FreeAutomorphism twist;
  /// Canonical cyclic word of the curve, up to inversion.
  Word pi1_class;
  HomologyVector homology;
  bool separating = false;
};

/// Throws InvalidArgument for unknown or non-curve base names (Delta is boundary-parallel).
CurveData resolve(const CurveSpec& c, const TwistTable& table);

/// Memoizes resolve() by spec text; safe for concurrent readers and writers.
class CurveResolver {
 public:
  explicit CurveResolver(const TwistTable& table) : table_(&table) {}

  const TwistTable& table() const noexcept { return *table_; }
  Genus genus() const noexcept { return table_->genus(); }
  std::shared_ptr<const CurveData> resolve(const CurveSpec& c) const;
  std::size_t cached() const;

 private:
  const TwistTable* table_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const CurveData>> cache_;
};

/// Symplectic pairing of the two homology classes. The sign depends on the
/// orientation conventions; only its absolute value and vanishing are meaningful.
std::int64_t algebraic_intersection(const CurveSpec& c1, const CurveSpec& c2, const CurveResolver& r);

/// Equal isotopy classes iff equal twists (the twist map is injective).
bool curves_equal(const CurveSpec& c1, const CurveSpec& c2, const CurveResolver& r);

}  // namespace cdt
