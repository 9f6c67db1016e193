#include "curvedetect/curve.hpp"

#include <mutex>

#include "curvedetect/error.hpp"
#include "mcw_parse.hpp"

namespace cdt {

namespace {

void check_genus(const CurveSpec& c, Genus g) {
  if (c.genus != g) {
    throw GenusMismatch("curve " + to_string(c) + " is on genus " + std::to_string(c.genus.value) +
                        ", expected " + std::to_string(g.value));
  }
}

}  // namespace

CurveSpec parse_curve_spec(Genus genus, std::string_view text) {
  detail::Scanner s(text);
  CurveSpec spec{genus, s.name(), {}};
  if (s.accept('@')) {
    s.expect('[');
    spec.conjugator = detail::parse_factors(s, ']');
    s.expect(']');
  }
  if (!s.at_end()) s.fail("unexpected input after curve spec");
  return spec;
}

std::string to_string(const CurveSpec& c) {
  if (c.conjugator.empty()) return c.base;
  return c.base + " @ [" + to_string(c.conjugator) + "]";
}

CurveData resolve(const CurveSpec& c, const TwistTable& table) {
  check_genus(c, table.genus());
  const auto& base = table.at(c.base);
  if (base.kind == TwistKind::Boundary) {
    throw InvalidArgument("'" + c.base + "' is boundary-parallel and not an essential curve");
  }
  const FreeAutomorphism f = evaluate(c.conjugator, table);
  CurveData out{conjugate(base.twist, f), canonical_cyclic_class(apply(f, base.curve)),
                homology_action(f) * base.homology, false};
  out.separating = is_zero(out.homology);
  return out;
}

std::shared_ptr<const CurveData> CurveResolver::resolve(const CurveSpec& c) const {
  const std::string key = to_string(c);
  {
    std::shared_lock lock(mutex_);
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto data = std::make_shared<const CurveData>(cdt::resolve(c, *table_));
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, std::move(data)).first->second;
}

std::size_t CurveResolver::cached() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

std::int64_t algebraic_intersection(const CurveSpec& c1, const CurveSpec& c2, const CurveResolver& r) {
  check_genus(c1, r.genus());
  check_genus(c2, r.genus());
  return symplectic_pairing(r.resolve(c1)->homology, r.resolve(c2)->homology);
}

bool curves_equal(const CurveSpec& c1, const CurveSpec& c2, const CurveResolver& r) {
  check_genus(c1, r.genus());
  check_genus(c2, r.genus());
  return auto_equal(r.resolve(c1)->twist, r.resolve(c2)->twist);
}

}  // namespace cdt
