#include "curvedetect/foxrep.hpp"

#include "curvedetect/error.hpp"
#include "curvedetect/homology.hpp"
#include "curvedetect/jfilt.hpp"
#include "curvedetect/parallel.hpp"
#include "enumerate.hpp"

namespace cdt {

LaurentPoly::LaurentPoly(int variables, Terms terms) : variables_(variables) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::one(int variables) {
  return monomial(Exponents(static_cast<std::size_t>(variables), 0));
}

LaurentPoly LaurentPoly::monomial(Exponents exponents, BigInt coeff) {
  LaurentPoly p(static_cast<int>(exponents.size()));
  p.add_term(exponents, coeff);
  return p;
}

BigInt LaurentPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != variables_) throw InvalidArgument("LaurentPoly: exponent vector has wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.variables_ != variables_) throw InvalidArgument("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.variables_ != variables_) throw InvalidArgument("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.variables_ != b.variables_) throw InvalidArgument("LaurentPoly: variable count mismatch");
  LaurentPoly out(a.variables_);
  LaurentPoly::Exponents e(static_cast<std::size_t>(a.variables_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += ' ';
      mono += "t" + std::to_string(k + 1);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + " ";
      out += mono;
    }
  }
  return out;
}

LaurentPoly abelian_monomial(const Word& w) {
  const auto ab = w.abelianization();
  return LaurentPoly::monomial(LaurentPoly::Exponents(ab.begin(), ab.end()));
}

LaurentPoly fox_derivative_abelianized(const Word& w, int i) {
  const int n = w.genus().rank();
  if (i < 1 || i > n) throw InvalidArgument("fox_derivative_abelianized: generator index out of range");
  LaurentPoly out(n);
  LaurentPoly::Exponents prefix(static_cast<std::size_t>(n), 0);
  for (Letter x : w.letters()) {
    const int j = x > 0 ? x : -x;
    auto& slot = prefix[static_cast<std::size_t>(j - 1)];
    if (x > 0) {
      if (j == i) out += LaurentPoly::monomial(prefix);
      ++slot;
    } else {
      --slot;
      if (j == i) out -= LaurentPoly::monomial(prefix);
    }
  }
  return out;
}

MagnusMatrix::MagnusMatrix(Genus genus)
    : genus_(genus), entries_(static_cast<std::size_t>(genus.rank() * genus.rank()), LaurentPoly(genus.rank())) {}

MagnusMatrix MagnusMatrix::identity(Genus genus) {
  MagnusMatrix m(genus);
  for (int i = 1; i <= m.size(); ++i) m.at(i, i) = LaurentPoly::one(m.size());
  return m;
}

const LaurentPoly& MagnusMatrix::at(int i, int j) const {
  if (i < 1 || j < 1 || i > size() || j > size()) throw InvalidArgument("MagnusMatrix: index out of range");
  return entries_[static_cast<std::size_t>((i - 1) * size() + (j - 1))];
}

LaurentPoly& MagnusMatrix::at(int i, int j) {
  return const_cast<LaurentPoly&>(std::as_const(*this).at(i, j));
}

bool MagnusMatrix::is_identity() const { return *this == identity(genus_); }

MagnusMatrix operator*(const MagnusMatrix& a, const MagnusMatrix& b) {
  if (a.genus_ != b.genus_) throw GenusMismatch("MagnusMatrix product across genera");
  MagnusMatrix out(a.genus_);
  const int n = a.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      LaurentPoly sum(n);
      for (int k = 1; k <= n; ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        sum += a.at(i, k) * b.at(k, j);
      }
      out.at(i, j) = std::move(sum);
    }
  }
  return out;
}

MagnusMatrix fox_jacobian(const FreeAutomorphism& f) {
  MagnusMatrix m(f.genus());
  for (int j = 1; j <= m.size(); ++j) {
    for (int i = 1; i <= m.size(); ++i) m.at(i, j) = fox_derivative_abelianized(f.image(j), i);
  }
  return m;
}

MagnusMatrix magnus_rep(const FreeAutomorphism& f) {
  if (!homology_action(f).is_identity()) throw InvalidArgument("magnus_rep: automorphism is not in the Torelli group");
  return fox_jacobian(f);
}

SuzukiScan suzuki_scan(const CurveResolver& r, int budget, unsigned threads) {
  if (r.genus().value < 2) throw InvalidArgument("suzuki_scan needs genus >= 2");
  SuzukiScan scan;
  if (budget <= 0) return scan;

  // Smallest curve count giving `budget` unordered pairs.
  int curves = 2;
  while (curves * (curves - 1) / 2 < budget) ++curves;
  std::vector<std::pair<CurveSpec, std::shared_ptr<const CurveData>>> seps;
  detail::enumerate_curves(r, r.table().separating_bases(), curves, [&](const CurveSpec& c, const CurveData&) {
    seps.emplace_back(c, r.resolve(c));
    return false;
  });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < seps.size() && pairs.size() < static_cast<std::size_t>(budget); ++j) {
    for (std::size_t i = 0; i < j && pairs.size() < static_cast<std::size_t>(budget); ++i) pairs.emplace_back(i, j);
  }

  struct Outcome {
    bool trivial = false;
    std::optional<FreeAutomorphism> kernel_element;
  };
  const auto outcomes = parallel_map<Outcome>(pairs.size(), threads, [&](std::size_t k) {
    const auto& [i, j] = pairs[k];
    Outcome o;
    FreeAutomorphism c = commutator(seps[i].second->twist, seps[j].second->twist);
    if (is_identity(c)) {
      o.trivial = true;
    } else if (magnus_rep(c).is_identity()) {
      o.kernel_element = std::move(c);
    }
    return o;
  });

  scan.pairs_examined = static_cast<int>(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& o = outcomes[k];
    if (o.trivial) ++scan.trivial_commutators;
    if (!o.kernel_element) continue;
    const FreeAutomorphism& c = *o.kernel_element;
    if (!in_Mk(c, 1) || is_identity(c) || !fox_jacobian(c).is_identity()) continue;
    scan.hits.push_back({seps[pairs[k].first].first, seps[pairs[k].second].first, c});
  }
  return scan;
}

}  // namespace cdt
