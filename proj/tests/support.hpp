#pragma once

#include <vector>

#include "curvedetect/sampling.hpp"
#include "curvedetect/word.hpp"

namespace cdt::test_support {

/// Unreduced letter sequence; the reduction oracles need raw input.
inline std::vector<Letter> random_letters(Genus g, Rng& rng, int max_len) {
  std::vector<Letter> out(static_cast<std::size_t>(rng.range(0, max_len)));
  for (auto& x : out) {
    const int i = rng.range(1, g.rank());
    x = rng.coin() ? i : -i;
  }
  return out;
}

/// Stack reduction, written independently of Word::reduce.
inline std::vector<Letter> stack_reduce(const std::vector<Letter>& raw) {
  std::vector<Letter> st;
  for (Letter x : raw) {
    if (!st.empty() && st.back() + x == 0) {
      st.pop_back();
    } else {
      st.push_back(x);
    }
  }
  return st;
}

inline std::vector<Letter> letters_of(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace cdt::test_support
