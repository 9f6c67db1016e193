#include "curvedetect/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "curvedetect/error.hpp"

namespace cdt {

namespace {

void check_genus(const Word& u, const Word& v) {
  if (u.genus() != v.genus()) {
    throw GenusMismatch("words from genus " + std::to_string(u.genus().value) + " and genus " +
                        std::to_string(v.genus().value));
  }
}

void append_inverse(std::vector<Letter>& out, std::span<const Letter> w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) push_reduced(out, -*it);
}

constexpr long kMaxParsedExponent = 1'000'000;

void append(std::vector<Letter>& out, std::span<const Letter> w) {
  for (Letter x : w) push_reduced(out, x);
}

}  // namespace

Word Word::reduce(Genus genus, std::span<const Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (Letter x : raw) {
    if (x == 0 || std::abs(x) > genus.rank()) {
      throw InvalidArgument("generator index " + std::to_string(x) + " out of range for genus " +
                            std::to_string(genus.value));
    }
    push_reduced(out, x);
  }
  return from_reduced(genus, std::move(out));
}

Word Word::generator(Genus genus, int index) {
  const Letter x = index;
  return reduce(genus, std::span<const Letter>(&x, 1));
}

std::vector<std::int64_t> Word::abelianization() const {
  std::vector<std::int64_t> h(static_cast<std::size_t>(genus_.rank()), 0);
  for (Letter x : letters_) h[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
  return h;
}

bool letter_less(Letter a, Letter b) noexcept {
  const int ia = std::abs(a), ib = std::abs(b);
  if (ia != ib) return ia < ib;
  return a > b;
}

bool word_less(const Word& a, const Word& b) noexcept {
  if (a.length() != b.length()) return a.length() < b.length();
  const auto la = a.letters(), lb = b.letters();
  return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end(), letter_less);
}

Word multiply(const Word& u, const Word& v) {
  check_genus(u, v);
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  append(out, v.letters());
  return Word::from_reduced(u.genus(), std::move(out));
}

Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  append_inverse(out, u.letters());
  return Word::from_reduced(u.genus(), std::move(out));
}

Word conjugate(const Word& u, const Word& g) {
  check_genus(u, g);
  std::vector<Letter> out(g.letters().begin(), g.letters().end());
  append(out, u.letters());
  append_inverse(out, g.letters());
  return Word::from_reduced(u.genus(), std::move(out));
}

Word commutator(const Word& u, const Word& v) {
  check_genus(u, v);
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  append(out, v.letters());
  append_inverse(out, u.letters());
  append_inverse(out, v.letters());
  return Word::from_reduced(u.genus(), std::move(out));
}

Word power(const Word& u, int exponent) {
  std::vector<Letter> out;
  const int n = std::abs(exponent);
  for (int k = 0; k < n; ++k) {
    if (exponent > 0) {
      append(out, u.letters());
    } else {
      append_inverse(out, u.letters());
    }
  }
  return Word::from_reduced(u.genus(), std::move(out));
}

CyclicReduction cyclically_reduce(const Word& u) {
  const auto w = u.letters();
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  std::vector<Letter> prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lo));
  std::vector<Letter> core(w.begin() + static_cast<std::ptrdiff_t>(lo),
                           w.begin() + static_cast<std::ptrdiff_t>(hi));

  // Least rotation by brute force; cores of curves are short.
  const std::size_t n = core.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Letter a = core[(r + k) % n], b = core[(best + k) % n];
      if (a == b) continue;
      if (letter_less(a, b)) best = r;
      break;
    }
  }
  std::vector<Letter> rotated(n);
  for (std::size_t k = 0; k < n; ++k) rotated[k] = core[(best + k) % n];

  // u = prefix * core * prefix^-1 and core = p s, rotated = s p, so the conjugator is prefix * p.
  for (std::size_t k = 0; k < best; ++k) push_reduced(prefix, core[k]);
  return {Word::from_reduced(u.genus(), std::move(rotated)),
          Word::from_reduced(u.genus(), std::move(prefix))};
}

Word canonical_cyclic_class(const Word& u) {
  Word a = cyclically_reduce(u).core;
  Word b = cyclically_reduce(invert(u)).core;
  return word_less(b, a) ? b : a;
}

Word parse_word(Genus genus, std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto read_int = [&](bool allow_sign) -> long {
    const std::size_t start = i;
    bool negative = false;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) {
      negative = text[i] == '-';
      ++i;
    }
    const std::size_t digits = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits) throw ParseError("expected integer", start + 1);
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + digits, text.data() + i, value);
    if (ec != std::errc()) throw ParseError("integer out of range", start + 1);
    return negative ? -value : value;
  };

  skip_space();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_space();
    if (i != text.size()) throw ParseError("unexpected input after identity", i + 1);
    return Word(genus);
  }
  while (true) {
    skip_space();
    if (i == text.size()) break;
    const std::size_t token_start = i;
    if (text[i] != 'x') throw ParseError("expected generator name x<index>", i + 1);
    ++i;
    const long index = read_int(false);
    if (index < 1 || index > genus.rank()) {
      throw ParseError("generator x" + std::to_string(index) + " out of range for genus " +
                           std::to_string(genus.value),
                       token_start + 1);
    }
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t exponent_start = i;
      exponent = read_int(true);
      if (std::labs(exponent) > kMaxParsedExponent) {
        throw ParseError("exponent too large", exponent_start + 1);
      }
    }
    const Letter x = static_cast<Letter>(exponent >= 0 ? index : -index);
    for (long k = 0; k < std::labs(exponent); ++k) raw.push_back(x);
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected whitespace between generators", i + 1);
    }
  }
  return Word::reduce(genus, raw);
}

std::string to_string(const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  const auto letters = w.letters();
  for (std::size_t i = 0; i < letters.size();) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    const long run = static_cast<long>(j - i) * (letters[i] > 0 ? 1 : -1);
    if (!out.empty()) out += ' ';
    out += 'x' + std::to_string(std::abs(letters[i]));
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

}  // namespace cdt
