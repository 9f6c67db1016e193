#include "curvedetect/sampling.hpp"

#include <limits>

#include "curvedetect/error.hpp"

namespace cdt {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("Rng::below(0)");
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

Word random_word(Genus genus, Rng& rng, int min_len, int max_len) {
  const int length = rng.range(min_len, max_len);
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < length) {
    const int index = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(genus.rank())));
    const Letter x = rng.coin() ? index : -index;
    if (!letters.empty() && letters.back() == -x) continue;
    letters.push_back(x);
  }
  return Word::from_reduced(genus, std::move(letters));
}

std::vector<TwistPower> conjugator_alphabet(const TwistTable& table) {
  std::vector<TwistPower> out;
  for (const auto* e : table.generators()) {
    out.push_back({e->name, 1});
    out.push_back({e->name, -1});
  }
  return out;
}

std::vector<MappingClassWord> conjugators_of_length(const TwistTable& table, int length) {
  const auto alphabet = conjugator_alphabet(table);
  std::vector<MappingClassWord> out;
  if (length <= 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::size_t> idx;
  const auto cancels = [&](std::size_t a, std::size_t b) {
    return alphabet[a].name == alphabet[b].name && alphabet[a].exponent == -alphabet[b].exponent;
  };
  // Depth-first in lexicographic order.
  const auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(idx.size()) == length) {
      MappingClassWord w;
      for (auto k : idx) w.factors.push_back(alphabet[k]);
      out.push_back(std::move(w));
      return;
    }
    for (std::size_t k = 0; k < alphabet.size(); ++k) {
      if (!idx.empty() && cancels(idx.back(), k)) continue;
      idx.push_back(k);
      self(self);
      idx.pop_back();
    }
  };
  rec(rec);
  return out;
}

MappingClassWord random_mapping_class_word(const TwistTable& table, Rng& rng, int min_len, int max_len) {
  const auto alphabet = conjugator_alphabet(table);
  const int length = rng.range(min_len, max_len);
  MappingClassWord w;
  while (static_cast<int>(w.factors.size()) < length) {
    const auto& letter = alphabet[rng.below(alphabet.size())];
    if (!w.factors.empty() && w.factors.back().name == letter.name &&
        w.factors.back().exponent == -letter.exponent) {
      continue;
    }
    w.factors.push_back(letter);
  }
  return w;
}

CurveSpec random_curve_spec(const TwistTable& table, Rng& rng, int max_conjugator_len, bool separating_only) {
  const auto bases = separating_only ? table.separating_bases() : table.curve_bases();
  if (bases.empty()) throw InvalidArgument("no curve bases available at this genus");
  const auto* base = bases[rng.below(bases.size())];
  return CurveSpec{table.genus(), base->name, random_mapping_class_word(table, rng, 0, max_conjugator_len)};
}

FreeAutomorphism random_torelli(const CurveResolver& resolver, Rng& rng, int factors, int max_conjugator_len) {
  const auto& table = resolver.table();
  const bool have_sep = !table.separating_bases().empty();
  FreeAutomorphism out = FreeAutomorphism::identity(table.genus());
  const int count = rng.range(1, factors);
  for (int k = 0; k < count; ++k) {
    FreeAutomorphism factor = FreeAutomorphism::identity(table.genus());
    if (!have_sep) {
      factor = table.boundary().twist;
    } else if (rng.coin()) {
      factor = resolver.resolve(random_curve_spec(table, rng, max_conjugator_len, true))->twist;
    } else {
      // Zero algebraic intersection makes the twist commutator act trivially on homology.
      while (true) {
        const auto c1 = random_curve_spec(table, rng, max_conjugator_len);
        const auto c2 = random_curve_spec(table, rng, max_conjugator_len);
        if (algebraic_intersection(c1, c2, resolver) != 0) continue;
        factor = commutator(resolver.resolve(c1)->twist, resolver.resolve(c2)->twist);
        break;
      }
    }
    out = compose(out, rng.coin() ? factor : factor.inverse());
  }
  return out;
}

}  // namespace cdt
