#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvedetect/curve.hpp"
#include "curvedetect/magnus.hpp"

namespace cdt {

/// Element of Z[H] with H = Z^{2g}: a Laurent polynomial in t_1..t_{2g}.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, BigInt>;

  LaurentPoly() = default;
  /// The zero polynomial in `variables` variables.
  explicit LaurentPoly(int variables) : variables_(variables) {}
  LaurentPoly(int variables, Terms terms);

  static LaurentPoly one(int variables);
  static LaurentPoly monomial(Exponents exponents, BigInt coeff = 1);

  int variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  BigInt coefficient(const Exponents& e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(const Exponents& e, const BigInt& c);

  int variables_ = 0;
  Terms terms_;
};

/// "1 - t1^-1 t2" style; "0" for zero.
std::string to_string(const LaurentPoly& p);

/// t^{ab(w)}.
LaurentPoly abelian_monomial(const Word& w);

/// Left Fox derivative d w / d x_i pushed to Z[H].
LaurentPoly fox_derivative_abelianized(const Word& w, int i);

class MagnusMatrix {
 public:
  /// Zero matrix of size rank x rank.
  explicit MagnusMatrix(Genus genus);
  static MagnusMatrix identity(Genus genus);

  Genus genus() const noexcept { return genus_; }
  int size() const noexcept { return genus_.rank(); }
  /// 1-based.
  const LaurentPoly& at(int i, int j) const;
  LaurentPoly& at(int i, int j);

  bool is_identity() const;
  friend MagnusMatrix operator*(const MagnusMatrix& a, const MagnusMatrix& b);
  friend bool operator==(const MagnusMatrix& a, const MagnusMatrix& b) {
    return a.genus_ == b.genus_ && a.entries_ == b.entries_;
  }

 private:
  Genus genus_;
  std::vector<LaurentPoly> entries_;
};

/// Entry (i, j) = d f(x_j) / d x_i abelianized, without any Torelli check.
MagnusMatrix fox_jacobian(const FreeAutomorphism& f);

/// Magnus representation of the Torelli group. Throws InvalidArgument when f
/// acts nontrivially on homology.
MagnusMatrix magnus_rep(const FreeAutomorphism& f);

struct SuzukiHit {
  CurveSpec a;
  CurveSpec b;
  FreeAutomorphism commutator;
};

struct SuzukiScan {
  int pairs_examined = 0;
  int trivial_commutators = 0;
  std::vector<SuzukiHit> hits;
};

/// Looks for separating pairs (in enumeration order) with a nontrivial twist
/// commutator in the kernel of magnus_rep. Examines at most `budget` pairs;
/// every hit is re-verified before it is reported. Needs genus >= 2.
SuzukiScan suzuki_scan(const CurveResolver& r, int budget, unsigned threads = 1);

}  // namespace cdt
