#pragma once

#include "curvedetect/mcg.hpp"
#include "scanner.hpp"

namespace cdt::detail {

/// Reads `NAME ('^' INT)?` factors until `stop` (not consumed) or end of input.
inline MappingClassWord parse_factors(Scanner& s, char stop) {
  MappingClassWord w;
  while (!s.at_end() && s.peek() != stop) {
    const std::size_t column = s.column();
    TwistPower factor{s.name(), 1};
    if (s.accept('^')) factor.exponent = s.integer();
    if (factor.exponent == 0) throw ParseError("zero exponent", column);
    w.factors.push_back(std::move(factor));
  }
  return w;
}

}  // namespace cdt::detail
