#include "curvedetect/magnus.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

#include "curvedetect/error.hpp"

namespace cdt {

namespace {

constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 24;

/// Packed dense storage: degree-d block holds (2g)^d coefficients starting at offset[d].
struct Layout {
  int cap = 0;
  std::vector<std::size_t> offset;
  std::vector<std::size_t> block;

  Layout(Genus genus, int cap_in) : cap(cap_in) {
    if (cap < 0) throw InvalidArgument("degree cap must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(genus.rank());
    std::size_t size = 1, total = 0;
    for (int d = 0; d <= cap; ++d) {
      offset.push_back(total);
      block.push_back(size);
      total += size;
      if (total > kMaxDenseEntries) {
        throw InvalidArgument("degree cap " + std::to_string(cap) + " too large for genus " +
                              std::to_string(genus.value));
      }
      size *= n;
    }
    offset.push_back(total);
  }

  std::size_t total() const { return offset.back(); }
};

/// Left-multiplies by the series of each letter, last letter first, so that each
/// update is a contiguous slice: X_i * m lives at i * (2g)^d + m in degree d + 1.
bool expand_int64(std::span<const Letter> letters, const Layout& layout,
                  const kernels::KernelSet& k, std::vector<std::int64_t>& data) {
  data.assign(layout.total(), 0);
  data[0] = 1;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::size_t i = static_cast<std::size_t>(std::abs(*it) - 1);
    bool overflow = false;
    if (*it > 0) {
      // (1 + X) S: read old degree d before it is rewritten.
      for (int d = layout.cap - 1; d >= 0; --d) {
        overflow |= k.add(data.data() + layout.offset[d + 1] + i * layout.block[d],
                          data.data() + layout.offset[d], layout.block[d]);
      }
    } else {
      // (1 + X)^-1 S = S - X (1 + X)^-1 S: needs the updated degree d.
      for (int d = 0; d < layout.cap; ++d) {
        overflow |= k.sub(data.data() + layout.offset[d + 1] + i * layout.block[d],
                          data.data() + layout.offset[d], layout.block[d]);
      }
    }
    if (overflow) return false;
  }
  return true;
}

void expand_big(std::span<const Letter> letters, const Layout& layout, std::vector<BigInt>& data) {
  data.assign(layout.total(), BigInt(0));
  data[0] = 1;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const std::size_t i = static_cast<std::size_t>(std::abs(*it) - 1);
    if (*it > 0) {
      for (int d = layout.cap - 1; d >= 0; --d) {
        BigInt* dst = data.data() + layout.offset[d + 1] + i * layout.block[d];
        const BigInt* src = data.data() + layout.offset[d];
        for (std::size_t m = 0; m < layout.block[d]; ++m) dst[m] += src[m];
      }
    } else {
      for (int d = 0; d < layout.cap; ++d) {
        BigInt* dst = data.data() + layout.offset[d + 1] + i * layout.block[d];
        const BigInt* src = data.data() + layout.offset[d];
        for (std::size_t m = 0; m < layout.block[d]; ++m) dst[m] -= src[m];
      }
    }
  }
}

template <class Coeff>
TruncatedSeries to_sparse(Genus genus, const Layout& layout, const std::vector<Coeff>& data) {
  TruncatedSeries::Terms terms;
  for (int d = 0; d <= layout.cap; ++d) {
    for (std::size_t m = 0; m < layout.block[d]; ++m) {
      const Coeff& c = data[layout.offset[d] + m];
      if (c != 0) terms.emplace(Monomial{d, m}, BigInt(c));
    }
  }
  return TruncatedSeries(genus, layout.cap, std::move(terms));
}

void check_cap(int cap) {
  if (cap < 1) throw InvalidArgument("degree cap must be at least 1");
}

}  // namespace

Monomial Monomial::from_factors(Genus genus, const std::vector<int>& factors) {
  Monomial m{static_cast<int>(factors.size()), 0};
  for (int f : factors) {
    if (f < 1 || f > genus.rank()) throw InvalidArgument("monomial factor out of range");
    m.code = m.code * static_cast<std::uint64_t>(genus.rank()) + static_cast<std::uint64_t>(f - 1);
  }
  return m;
}

std::vector<int> Monomial::factors(Genus genus) const {
  std::vector<int> out(static_cast<std::size_t>(degree));
  std::uint64_t c = code;
  const auto n = static_cast<std::uint64_t>(genus.rank());
  for (int k = degree - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = static_cast<int>(c % n) + 1;
    c /= n;
  }
  return out;
}

TruncatedSeries::TruncatedSeries(Genus genus, int cap, Terms terms)
    : genus_(genus), cap_(cap), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.degree > cap_) throw InvalidArgument("term above the degree cap");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

TruncatedSeries TruncatedSeries::one(Genus genus, int cap) {
  return TruncatedSeries(genus, cap, Terms{{Monomial{0, 0}, BigInt(1)}});
}

BigInt TruncatedSeries::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

TruncatedSeries::Terms TruncatedSeries::homogeneous_part(int degree) const {
  Terms out;
  for (auto it = terms_.lower_bound(Monomial{degree, 0});
       it != terms_.end() && it->first.degree == degree; ++it) {
    out.insert(*it);
  }
  return out;
}

std::optional<int> TruncatedSeries::lowest_positive_degree() const {
  const auto it = terms_.lower_bound(Monomial{1, 0});
  if (it == terms_.end()) return std::nullopt;
  return it->first.degree;
}

std::size_t dense_size(Genus genus, int cap) { return Layout(genus, cap).total(); }

TruncatedSeries magnus_expand_with(const Word& w, int cap, const kernels::KernelSet& k) {
  check_cap(cap);
  const Layout layout(w.genus(), cap);
  std::vector<std::int64_t> fast;
  if (expand_int64(w.letters(), layout, k, fast)) return to_sparse(w.genus(), layout, fast);
  std::vector<BigInt> exact;
  expand_big(w.letters(), layout, exact);
  return to_sparse(w.genus(), layout, exact);
}

TruncatedSeries magnus_expand(const Word& w, int cap) {
  return magnus_expand_with(w, cap, kernels::best());
}

TruncatedSeries magnus_expand_exact(const Word& w, int cap) {
  check_cap(cap);
  const Layout layout(w.genus(), cap);
  std::vector<BigInt> exact;
  expand_big(w.letters(), layout, exact);
  return to_sparse(w.genus(), layout, exact);
}

std::optional<int> lowest_nonvanishing_degree(const Word& w, int cap) {
  check_cap(cap);
  if (w.is_identity()) return std::nullopt;
  const Layout layout(w.genus(), cap);
  const auto& k = kernels::best();
  std::vector<std::int64_t> fast;
  if (expand_int64(w.letters(), layout, k, fast)) {
    for (int d = 1; d <= cap; ++d) {
      if (k.first_nonzero(fast.data() + layout.offset[d], layout.block[d]) < layout.block[d]) {
        return d;
      }
    }
    return std::nullopt;
  }
  std::vector<BigInt> exact;
  expand_big(w.letters(), layout, exact);
  for (int d = 1; d <= cap; ++d) {
    for (std::size_t m = 0; m < layout.block[d]; ++m) {
      if (exact[layout.offset[d] + m] != 0) return d;
    }
  }
  return std::nullopt;
}

DepthResult lcs_depth(const Word& w, int cap) {
  check_cap(cap);
  if (w.is_identity()) return DepthResult::identity();
  if (const auto d = lowest_nonvanishing_degree(w, cap)) return DepthResult::exact(*d);
  return DepthResult::at_least(cap + 1);
}

TruncatedSeries series_mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (s.genus() != t.genus()) throw GenusMismatch("series from different genera");
  if (s.cap() != t.cap()) {
    throw InvalidArgument("cap mismatch: " + std::to_string(s.cap()) + " vs " +
                          std::to_string(t.cap()));
  }
  const int cap = s.cap();
  const auto n = static_cast<std::uint64_t>(s.genus().rank());
  std::vector<std::uint64_t> pow(static_cast<std::size_t>(cap) + 1, 1);
  for (int d = 1; d <= cap; ++d) pow[static_cast<std::size_t>(d)] = pow[static_cast<std::size_t>(d) - 1] * n;

  TruncatedSeries::Terms out;
  for (const auto& [ma, ca] : s.terms()) {
    for (const auto& [mb, cb] : t.terms()) {
      if (ma.degree + mb.degree > cap) break;  // terms of t are sorted by degree
      const Monomial m{ma.degree + mb.degree, ma.code * pow[static_cast<std::size_t>(mb.degree)] + mb.code};
      out[m] += ca * cb;
    }
  }
  return TruncatedSeries(s.genus(), cap, std::move(out));
}

std::string to_string(const Monomial& m, Genus genus) {
  if (m.degree == 0) return "1";
  std::string out;
  for (int f : m.factors(genus)) out += "X" + std::to_string(f);
  return out;
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.terms()) {
    const bool negative = c < 0;
    const BigInt magnitude = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    if (m.degree == 0) {
      os << magnitude;
    } else {
      os << magnitude << "·" << to_string(m, s.genus());
    }
    first = false;
  }
  if (first) os << '0';
  os << " + O(deg " << s.cap() + 1 << ')';
  return os.str();
}

std::string to_string(const DepthResult& d) {
  switch (d.kind) {
    case DepthResult::Kind::Identity:
      return "Identity";
    case DepthResult::Kind::Exact:
      return "Exact(" + std::to_string(d.degree) + ")";
    case DepthResult::Kind::AtLeast:
      return "AtLeast(" + std::to_string(d.degree) + ")";
  }
  return "?";
}

}  // namespace cdt
