#pragma once

#include <set>
#include <string>

#include "curvedetect/curve.hpp"
#include "curvedetect/sampling.hpp"

namespace cdt::detail {

inline std::string automorphism_key(const FreeAutomorphism& f) {
  std::string key;
  for (const auto& w : f.images()) {
    for (Letter x : w.letters()) key += std::to_string(x) + ',';
    key += ';';
  }
  return key;
}

/// Visits distinct curves in (conjugator length, base, conjugator) order until
/// `visit` returns true or `budget` curves were seen. Returns the number seen.
template <class Bases, class Visit>
int enumerate_curves(const CurveResolver& r, const Bases& bases, int budget, Visit&& visit) {
  constexpr int kMaxConjugatorLength = 4;
  std::set<std::string> seen;
  int count = 0;
  for (int length = 0; length <= kMaxConjugatorLength && count < budget; ++length) {
    const auto conjugators = conjugators_of_length(r.table(), length);
    for (const auto* base : bases) {
      for (const auto& w : conjugators) {
        if (count >= budget) return count;
        CurveSpec d{r.genus(), base->name, w};
        const auto data = r.resolve(d);
        if (!seen.insert(automorphism_key(data->twist)).second) continue;
        ++count;
        if (visit(d, *data)) return count;
      }
    }
  }
  return count;
}

}  // namespace cdt::detail
