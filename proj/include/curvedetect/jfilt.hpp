#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvedetect/curve.hpp"
#include "curvedetect/magnus.hpp"

namespace cdt {

/// Position of a mapping class in the Johnson filtration M(1) > M(2) > ...
struct JFDepth {
  enum class Kind { NotInM1, Exact, AtLeast, Identity };
  Kind kind = Kind::Identity;
  /// Exact: in M(level), not in M(level+1). AtLeast: in M(level), cap exhausted.
  int level = 0;

  friend bool operator==(const JFDepth&, const JFDepth&) = default;
};

/// The depth function i_JF on curve pairs.
struct JFValue {
  enum class Kind { Zero, One, ExactGE2, AtLeast };
  Kind kind = Kind::Zero;
  /// ExactGE2: the value (>= 2). AtLeast: the lower bound.
  int value = 0;

  friend bool operator==(const JFValue&, const JFValue&) = default;
};

std::string to_string(const JFDepth& d);
std::string to_string(const JFValue& v);

/// f acts trivially on N_k = Gamma/Gamma_{k+1}: every f(x_i) x_i^-1 has a
/// Magnus expansion equal to 1 through degree k.
bool in_Mk(const FreeAutomorphism& f, int k);

/// Identity, NotInM1, Exact(k) for k < cap, or AtLeast(cap). Monotone in cap.
JFDepth johnson_depth(const FreeAutomorphism& f, int cap);

/// i_JF of two curves: Zero is decided exactly (commutator == identity); One
/// when the commutator moves homology; otherwise 1 + Johnson depth, or
/// AtLeast(cap + 1) when the cap runs out.
JFValue ijf(const CurveSpec& c1, const CurveSpec& c2, int cap, const CurveResolver& r);
JFValue ijf_of_commutator(const FreeAutomorphism& commutator, int cap);

struct PairReport {
  CurveSpec c1;
  CurveSpec c2;
  /// [t_c1, t_c2] == 1, i.e. the curves are disjoint.
  bool commuting = false;
  /// t1 t2 t1 == t2 t1 t2; the intersection-once criterion (standard), a label only.
  bool braid = false;
  std::int64_t algebraic = 0;
  JFValue ijf;
  int depth_cap = 0;
};

/// Fills every field. Throws GenusMismatch for curves on different surfaces.
PairReport classify_pair(const CurveSpec& c1, const CurveSpec& c2, int cap, const CurveResolver& r);

/// Which of the relations (a)-(d) tying commuting, algebraic intersection and
/// i_JF together a report breaks. Empty for a consistent report.
std::vector<std::string> consistency_violations(const PairReport& report);

/// Degree-(k+1) part of the expansion of f(x_i) x_i^-1 for each generator.
/// Throws InvalidArgument unless f lies in M(k).
std::vector<TruncatedSeries::Terms> johnson_leading_term(const FreeAutomorphism& f, int k);

/// in_Mk([f, g], kf + kg). Preconditions (membership, kf + kg <= cap) throw
/// InvalidArgument. A false return is an implementation bug.
bool morita_check(const FreeAutomorphism& f, const FreeAutomorphism& g, int kf, int kg, int cap);

/// Searches d with exactly one of t_c1, t_c2 commuting with t_d, enumerating
/// (conjugator length, base in table order, conjugator lexicographic) and
/// examining at most `budget` distinct curves. Throws if c1 == c2.
std::optional<CurveSpec> distinguishing_witness(const CurveSpec& c1, const CurveSpec& c2, int budget,
                                                const CurveResolver& r);

struct Fact5Verdict {
  /// Set when some sampled separating curve c has f(c) != c.
  std::optional<CurveSpec> moved;
  int sampled = 0;

  bool fixes_all_sampled() const { return !moved.has_value(); }
};

/// Samples up to `budget` distinct separating curves and tests f t_c f^-1 == t_c.
/// Throws InvalidArgument at genus 1 (no separating curves).
Fact5Verdict fact5_instance(const FreeAutomorphism& f, int budget, const CurveResolver& r);

/// Nested commutators of two separating twists.
struct CorollaryRow {
  int nesting = 0;
  /// Lower bound from [M(k), M(l)] in M(k + l) with both twists in M(2).
  int expected_level = 0;
  JFDepth depth;
  /// Largest k <= cap with the element certified in M(k).
  int certified_level = 0;
  bool nontrivial = false;
  std::size_t max_image_length = 0;
};

struct CorollaryReport {
  Genus genus;
  int cap = 0;
  CurveSpec a;
  CurveSpec b;
  std::vector<CorollaryRow> rows;
  /// witnesses[k-1] is the nesting of a row that is a non-identity element of M(k), or 0.
  std::vector<int> witnesses;
  /// rho_cap kills the first commutator although it is not the identity.
  bool finite_level_blind = false;
  std::optional<JFDepth> extended_depth;
  int extended_cap = 0;
  std::string note;
};

/// Runs the nested-commutator experiment for Sep1 and Sep1 @ [C3].
/// `extended_cap` > cap additionally computes the depth of the first
/// commutator at that cap.
CorollaryReport run_corollary(const CurveResolver& r, int cap, int extended_cap = 0);

}  // namespace cdt
