#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "curvedetect/automorphism.hpp"
#include "curvedetect/homology.hpp"

namespace cdt {

/// Genera for which the generator table is built and validated.
inline constexpr int kMinTableGenus = 1;
inline constexpr int kMaxTableGenus = 4;

enum class TwistKind { Chain, Humphries, Separating, Boundary };

/// One named generator twist together with the curve it twists along.
struct TwistEntry {
  std::string name;
  TwistKind kind;
  FreeAutomorphism twist;
  /// pi_1 word freely homotopic to the base curve (one orientation).
  Word curve;
  HomologyVector homology;
  /// Other chain curves this one meets exactly once.
  std::vector<std::string> meets_once;

  bool separating() const { return is_zero(homology); }
};

/// Generator twists of M_{g,1}: chain twists C1..C{2g+1} (C1, C2 at genus 1),
/// the extra Humphries twist H for g >= 3, separating twists Sep1..Sep{g-1},
/// and the boundary twist Delta.
///
/// Chain curves, in order: alpha_1 (x1), beta_1 (x2), gamma_1, beta_2, ..., gamma_{g-1},
/// beta_g, alpha_g, where gamma_i = x_{2i} x_{2i-1}^-1 x_{2i}^-1 x_{2i+1} connects
/// handles i and i+1. Formulas are pinned by validate_relations, not by citation.
class TwistTable {
 public:
  TwistTable(Genus genus, std::vector<TwistEntry> entries);

  Genus genus() const noexcept { return genus_; }
  const std::vector<TwistEntry>& entries() const noexcept { return entries_; }

  /// Throws InvalidArgument for names not in the table.
  const TwistEntry& at(std::string_view name) const;
  const TwistEntry* find(std::string_view name) const;

  std::vector<const TwistEntry*> chain() const;
  /// Chain twists plus H: together with Delta they generate M_{g,1}.
  std::vector<const TwistEntry*> generators() const;
  /// Entries usable as CurveSpec bases (everything except Delta).
  std::vector<const TwistEntry*> curve_bases() const;
  std::vector<const TwistEntry*> separating_bases() const;
  const TwistEntry& boundary() const { return at("Delta"); }

 private:
  Genus genus_;
  std::vector<TwistEntry> entries_;
};

/// Boundary word [x1,x2][x3,x4]...[x_{2g-1},x_{2g}].
Word boundary_word(Genus genus);
/// Partial boundary word d_J = [x1,x2]...[x_{2J-1},x_{2J}].
Word partial_boundary_word(Genus genus, int j);

/// Builds the table from its formulas. Throws InvalidArgument for unsupported genus.
TwistTable make_table(Genus genus);
/// Shared immutable instance of make_table(genus).
const TwistTable& builtin_table(Genus genus);
bool table_supported(int genus);

/// Versioned, diffable text form of a table (one file per genus under data/).
std::string serialize_table(const TwistTable& table);
TwistTable parse_table(std::string_view text);
/// Reads `<dir>/genus<g>.table`.
TwistTable load_table(Genus genus, const std::filesystem::path& data_dir);

/// A named twist raised to a nonzero power.
struct TwistPower {
  std::string name;
  int exponent = 1;

  friend bool operator==(const TwistPower&, const TwistPower&) = default;
};

/// Product of generator twists; the leftmost factor is applied last.
struct MappingClassWord {
  std::vector<TwistPower> factors;

  bool empty() const noexcept { return factors.empty(); }
  std::size_t length() const;
  MappingClassWord inverse() const;
  friend MappingClassWord operator+(const MappingClassWord& a, const MappingClassWord& b);
  friend bool operator==(const MappingClassWord&, const MappingClassWord&) = default;
};

/// `C1 C2^-3 Sep1 Delta^2`; names are checked against a table only at evaluation.
MappingClassWord parse_mapping_class_word(std::string_view text);
std::string to_string(const MappingClassWord& w);

FreeAutomorphism evaluate(const MappingClassWord& w, const TwistTable& table,
                          std::size_t cap = kDefaultImageCap);
FreeAutomorphism evaluate(const MappingClassWord& w, Genus genus, std::size_t cap = kDefaultImageCap);

/// True iff f commutes with every generator twist of the table.
bool is_central(const FreeAutomorphism& f, const TwistTable& table);
bool is_central(const FreeAutomorphism& f);

struct RelationCheck {
  std::string name;
  std::string category;
  bool passed = false;
};

struct RelationReport {
  Genus genus;
  std::vector<RelationCheck> checks;

  bool all_passed() const;
  std::size_t failures() const;
};

/// Exact automorphism identities pinning the table: boundary preserved, braid
/// and commutation relations, chain relations, centrality of Delta, homology
/// actions of the generators.
RelationReport validate_relations(const TwistTable& table);
RelationReport validate_relations(Genus genus);

std::string to_string(TwistKind kind);

}  // namespace cdt
