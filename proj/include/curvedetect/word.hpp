#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdt {

/// Genus of the ambient surface. The free group has rank 2g.
struct Genus {
  int value = 1;

  constexpr int rank() const noexcept { return 2 * value; }
  friend constexpr auto operator<=>(Genus, Genus) = default;
};

/// A signed generator: +i is x_i, -i is x_i^-1, with 1 <= i <= 2g.
using Letter = std::int32_t;

/// A freely reduced element of the free group on x1..x{2g}.
///
/// Values are immutable; every operation returns a new word. The genus travels
/// with the value so words from different surfaces can never be mixed silently.
class Word {
 public:
  explicit Word(Genus genus) : genus_(genus) {}

  /// Reduces `raw` freely. Throws InvalidArgument for letters outside +-1..2g.
  static Word reduce(Genus genus, std::span<const Letter> raw);
  static Word reduce(Genus genus, std::initializer_list<Letter> raw) {
    return reduce(genus, std::span<const Letter>(raw.begin(), raw.size()));
  }
  static Word generator(Genus genus, int index);

  /// Takes ownership of letters already known to be reduced and in range.
  static Word from_reduced(Genus genus, std::vector<Letter> letters) {
    Word w(genus);
    w.letters_ = std::move(letters);
    return w;
  }

  Genus genus() const noexcept { return genus_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }

  /// Exponent sum of each generator: the image in H_1 = Z^{2g}.
  std::vector<std::int64_t> abelianization() const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.genus_ == b.genus_ && a.letters_ == b.letters_;
  }

 private:
  Genus genus_;
  std::vector<Letter> letters_;
};

/// Ordering used for canonical rotations: by generator index, then x before x^-1.
bool letter_less(Letter a, Letter b) noexcept;
/// Shortlex order on words built from letter_less.
bool word_less(const Word& a, const Word& b) noexcept;

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// g u g^-1
Word conjugate(const Word& u, const Word& g);
/// u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);
Word power(const Word& u, int exponent);

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// Splits u as conjugator * core * conjugator^-1 with core cyclically reduced
/// and rotated to the least rotation under letter_less.
CyclicReduction cyclically_reduce(const Word& u);

/// Canonical representative of the conjugacy class of u up to inversion.
Word canonical_cyclic_class(const Word& u);

/// Text form `x1 x2^-1 x1^3`; an empty string or `1` is the identity.
Word parse_word(Genus genus, std::string_view text);
std::string to_string(const Word& w);

/// Appends letters to a reduced buffer, cancelling against its tail.
/// This is the hot path of automorphism application.
inline void push_reduced(std::vector<Letter>& buffer, Letter x) {
  if (!buffer.empty() && buffer.back() == -x) {
    buffer.pop_back();
  } else {
    buffer.push_back(x);
  }
}

}  // namespace cdt
