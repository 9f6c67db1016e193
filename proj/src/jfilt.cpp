#include "curvedetect/jfilt.hpp"

#include <set>

#include "curvedetect/error.hpp"
#include "enumerate.hpp"

namespace cdt {

namespace {

/// f(x_i) x_i^-1
Word displacement(const FreeAutomorphism& f, int i) {
  return multiply(f.image(i), invert(Word::generator(f.genus(), i)));
}

/// Lowest nonvanishing Magnus degree over all displacements, if any is <= cap.
std::optional<int> lowest_displacement_degree(const FreeAutomorphism& f, int cap) {
  std::optional<int> best;
  for (int i = 1; i <= f.genus().rank(); ++i) {
    const int limit = best ? *best - 1 : cap;
    if (limit < 1) break;
    if (const auto d = lowest_nonvanishing_degree(displacement(f, i), limit)) best = d;
  }
  return best;
}

}  // namespace

std::string to_string(const JFDepth& d) {
  switch (d.kind) {
    case JFDepth::Kind::NotInM1:
      return "NotInM1";
    case JFDepth::Kind::Exact:
      return "Exact(" + std::to_string(d.level) + ")";
    case JFDepth::Kind::AtLeast:
      return "AtLeast(" + std::to_string(d.level) + ")";
    case JFDepth::Kind::Identity:
      return "Identity";
  }
  return "?";
}

std::string to_string(const JFValue& v) {
  switch (v.kind) {
    case JFValue::Kind::Zero:
      return "Zero";
    case JFValue::Kind::One:
      return "One";
    case JFValue::Kind::ExactGE2:
      return "ExactGE2(" + std::to_string(v.value) + ")";
    case JFValue::Kind::AtLeast:
      return "AtLeast(" + std::to_string(v.value) + ")";
  }
  return "?";
}

bool in_Mk(const FreeAutomorphism& f, int k) {
  if (k < 1) throw InvalidArgument("Johnson level must be at least 1");
  for (int i = 1; i <= f.genus().rank(); ++i) {
    if (lowest_nonvanishing_degree(displacement(f, i), k)) return false;
  }
  return true;
}

JFDepth johnson_depth(const FreeAutomorphism& f, int cap) {
  if (cap < 1) throw InvalidArgument("depth cap must be at least 1");
  if (is_identity(f)) return {JFDepth::Kind::Identity, 0};
  if (!homology_action(f).is_identity()) return {JFDepth::Kind::NotInM1, 0};
  // Trivial homology means every displacement starts in degree >= 2.
  if (const auto d = lowest_displacement_degree(f, cap)) return {JFDepth::Kind::Exact, *d - 1};
  return {JFDepth::Kind::AtLeast, cap};
}

JFValue ijf_of_commutator(const FreeAutomorphism& c, int cap) {
  if (is_identity(c)) return {JFValue::Kind::Zero, 0};
  const JFDepth d = johnson_depth(c, cap);
  switch (d.kind) {
    case JFDepth::Kind::NotInM1:
      return {JFValue::Kind::One, 1};
    case JFDepth::Kind::Exact:
      return {JFValue::Kind::ExactGE2, d.level + 1};
    case JFDepth::Kind::AtLeast:
      return {JFValue::Kind::AtLeast, d.level + 1};
    case JFDepth::Kind::Identity:
      break;
  }
  return {JFValue::Kind::Zero, 0};
}

JFValue ijf(const CurveSpec& c1, const CurveSpec& c2, int cap, const CurveResolver& r) {
  return ijf_of_commutator(commutator(r.resolve(c1)->twist, r.resolve(c2)->twist), cap);
}

PairReport classify_pair(const CurveSpec& c1, const CurveSpec& c2, int cap, const CurveResolver& r) {
  if (c1.genus != c2.genus) throw GenusMismatch("curves on different genera");
  const auto d1 = r.resolve(c1);
  const auto d2 = r.resolve(c2);
  const FreeAutomorphism& t1 = d1->twist;
  const FreeAutomorphism& t2 = d2->twist;
  const FreeAutomorphism comm = commutator(t1, t2);

  PairReport report{c1, c2, is_identity(comm), false, symplectic_pairing(d1->homology, d2->homology), {}, cap};
  report.braid = auto_equal(compose(compose(t1, t2), t1), compose(compose(t2, t1), t2));
  report.ijf = ijf_of_commutator(comm, cap);
  return report;
}

std::vector<std::string> consistency_violations(const PairReport& p) {
  std::vector<std::string> out;
  const bool zero = p.ijf.kind == JFValue::Kind::Zero;
  const bool one = p.ijf.kind == JFValue::Kind::One;
  const bool ge2 = p.ijf.kind == JFValue::Kind::ExactGE2 || p.ijf.kind == JFValue::Kind::AtLeast;
  if (p.commuting != zero) out.emplace_back("commuting <=> ijf = 0");
  if (ge2 != (!p.commuting && p.algebraic == 0)) out.emplace_back("ijf >= 2 <=> (not commuting and algebraic = 0)");
  if (one != (p.algebraic != 0)) out.emplace_back("ijf = 1 <=> algebraic != 0");
  if (p.braid && !p.commuting && !one) out.emplace_back("braid and not commuting => ijf = 1");
  return out;
}

std::vector<TruncatedSeries::Terms> johnson_leading_term(const FreeAutomorphism& f, int k) {
  if (!in_Mk(f, k)) throw InvalidArgument("johnson_leading_term: automorphism is not in M(" + std::to_string(k) + ")");
  std::vector<TruncatedSeries::Terms> out;
  for (int i = 1; i <= f.genus().rank(); ++i) {
    out.push_back(magnus_expand(displacement(f, i), k + 1).homogeneous_part(k + 1));
  }
  return out;
}

bool morita_check(const FreeAutomorphism& f, const FreeAutomorphism& g, int kf, int kg, int cap) {
  if (kf < 1 || kg < 1 || kf + kg > cap) throw InvalidArgument("morita_check: need 1 <= kf, kg and kf + kg <= cap");
  if (!in_Mk(f, kf)) throw InvalidArgument("morita_check: f is not in M(" + std::to_string(kf) + ")");
  if (!in_Mk(g, kg)) throw InvalidArgument("morita_check: g is not in M(" + std::to_string(kg) + ")");
  return in_Mk(commutator(f, g), kf + kg);
}

std::optional<CurveSpec> distinguishing_witness(const CurveSpec& c1, const CurveSpec& c2, int budget,
                                                const CurveResolver& r) {
  if (curves_equal(c1, c2, r)) throw InvalidArgument("distinguishing_witness: the curves are equal");
  const auto& t1 = r.resolve(c1)->twist;
  const auto& t2 = r.resolve(c2)->twist;
  std::optional<CurveSpec> found;
  detail::enumerate_curves(r, r.table().curve_bases(), budget, [&](const CurveSpec& d, const CurveData& data) {
    if (commutes(t1, data.twist) != commutes(t2, data.twist)) {
      found = d;
      return true;
    }
    return false;
  });
  return found;
}

Fact5Verdict fact5_instance(const FreeAutomorphism& f, int budget, const CurveResolver& r) {
  if (r.table().separating_bases().empty()) {
    throw InvalidArgument("fact5_instance needs genus >= 2: there are no separating curves at genus 1");
  }
  Fact5Verdict verdict;
  verdict.sampled = detail::enumerate_curves(r, r.table().separating_bases(), budget,
                                     [&](const CurveSpec& c, const CurveData& data) {
                                       if (commutes(f, data.twist)) return false;
                                       verdict.moved = c;
                                       return true;
                                     });
  return verdict;
}

CorollaryReport run_corollary(const CurveResolver& r, int cap, int extended_cap) {
  const Genus g = r.genus();
  if (g.value < 2) throw InvalidArgument("the corollary experiment needs genus >= 2");
  CorollaryReport report{g, cap, parse_curve_spec(g, "Sep1"), parse_curve_spec(g, "Sep1 @ [C3]"), {}, {}, false,
                         std::nullopt, 0, {}};
  if (cap < 2) {
    report.note = "cap must be at least 2: separating twists first become visible in M(2)";
    return report;
  }
  const FreeAutomorphism ta = r.resolve(report.a)->twist;
  const FreeAutomorphism tb = r.resolve(report.b)->twist;

  FreeAutomorphism w = commutator(ta, tb);
  const FreeAutomorphism first = w;
  for (int m = 1; m <= std::max(1, cap / 2); ++m) {
    if (m > 1) w = commutator(ta, w);
    CorollaryRow row;
    row.nesting = m;
    row.expected_level = 2 * m + 2;
    row.depth = johnson_depth(w, cap);
    switch (row.depth.kind) {
      case JFDepth::Kind::Exact:
      case JFDepth::Kind::AtLeast:
        row.certified_level = row.depth.level;
        break;
      case JFDepth::Kind::Identity:
        row.certified_level = cap;
        break;
      case JFDepth::Kind::NotInM1:
        row.certified_level = 0;
        break;
    }
    row.nontrivial = !is_identity(w);
    row.max_image_length = w.max_image_length();
    report.rows.push_back(row);
  }
  for (int k = 1; k <= cap; ++k) {
    int witness = 0;
    for (const auto& row : report.rows) {
      if (row.nontrivial && row.certified_level >= k) {
        witness = row.nesting;
        break;
      }
    }
    report.witnesses.push_back(witness);
  }
  report.finite_level_blind = in_Mk(first, cap) && !is_identity(first);
  if (extended_cap > cap) {
    report.extended_cap = extended_cap;
    report.extended_depth = johnson_depth(first, extended_cap);
  }
  return report;
}

}  // namespace cdt
