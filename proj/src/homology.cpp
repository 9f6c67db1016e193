#include "curvedetect/homology.hpp"

#include "curvedetect/error.hpp"

namespace cdt {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (other.n_ != n_) throw InvalidArgument("matrix size mismatch");
  IntMatrix out(n_);
  for (int r = 0; r < n_; ++r) {
    for (int k = 0; k < n_; ++k) {
      const std::int64_t a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < n_; ++c) out(r, c) += a * other(k, c);
    }
  }
  return out;
}

HomologyVector IntMatrix::operator*(const HomologyVector& v) const {
  if (static_cast<int>(v.size()) != n_) throw InvalidArgument("vector size mismatch");
  HomologyVector out(v.size(), 0);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(n_);
  for (int r = 0; r < n_; ++r) {
    for (int c = 0; c < n_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool IntMatrix::is_identity() const { return *this == identity(n_); }

IntMatrix homology_action(const FreeAutomorphism& f) {
  const int n = f.genus().rank();
  IntMatrix m(n);
  for (int j = 0; j < n; ++j) {
    const auto col = f.image(j + 1).abelianization();
    for (int i = 0; i < n; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
  }
  return m;
}

std::int64_t symplectic_pairing(const HomologyVector& u, const HomologyVector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) throw GenusMismatch("homology vectors of different rank");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

IntMatrix symplectic_form(int genus) {
  IntMatrix j(2 * genus);
  for (int i = 0; i < genus; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

IntMatrix transvection(const HomologyVector& a) {
  const int n = static_cast<int>(a.size());
  IntMatrix m = IntMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    HomologyVector e(a.size(), 0);
    e[static_cast<std::size_t>(c)] = 1;
    const std::int64_t p = symplectic_pairing(e, a);
    for (int r = 0; r < n; ++r) m(r, c) += p * a[static_cast<std::size_t>(r)];
  }
  return m;
}

bool is_zero(const HomologyVector& v) {
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::string to_string(const HomologyVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

}  // namespace cdt
