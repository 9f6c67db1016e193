#include "curvedetect/mcg.hpp"

#include <array>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>

#include "curvedetect/error.hpp"
#include "mcw_parse.hpp"

namespace cdt {

namespace {

Word gen(Genus g, int i) { return Word::generator(g, i); }

std::vector<Word> identity_images(Genus g) {
  std::vector<Word> out;
  for (int i = 1; i <= g.rank(); ++i) out.push_back(gen(g, i));
  return out;
}

Word mul(std::initializer_list<Word> ws) {
  auto it = ws.begin();
  Word out = *it;
  for (++it; it != ws.end(); ++it) out = multiply(out, *it);
  return out;
}

// Twist along alpha_i (class x_{2i-1}): x_{2i} -> x_{2i} x_{2i-1}^-1.
FreeAutomorphism alpha_twist(Genus g, int i) {
  auto images = identity_images(g), inverse = identity_images(g);
  const Word a = gen(g, 2 * i - 1), b = gen(g, 2 * i);
  images[2 * i - 1] = multiply(b, invert(a));
  inverse[2 * i - 1] = multiply(b, a);
  return FreeAutomorphism(std::move(images), std::move(inverse));
}

// Twist along beta_i (class x_{2i}): x_{2i-1} -> x_{2i-1} x_{2i}.
FreeAutomorphism beta_twist(Genus g, int i) {
  auto images = identity_images(g), inverse = identity_images(g);
  const Word a = gen(g, 2 * i - 1), b = gen(g, 2 * i);
  images[2 * i - 2] = multiply(a, b);
  inverse[2 * i - 2] = multiply(a, invert(b));
  return FreeAutomorphism(std::move(images), std::move(inverse));
}

Word gamma_curve(Genus g, int i) {
  const Word a = gen(g, 2 * i - 1), b = gen(g, 2 * i), a2 = gen(g, 2 * i + 1);
  return mul({b, invert(a), invert(b), a2});
}

// Twist along gamma_i with c = x_{2i} x_{2i-1}^-1 x_{2i}^-1 x_{2i+1}:
// x_{2i} -> c x_{2i}, x_{2i+1} -> c x_{2i+1} c^-1, x_{2i+2} -> x_{2i+2} c^-1.
FreeAutomorphism gamma_twist(Genus g, int i) {
  auto images = identity_images(g), inverse = identity_images(g);
  const Word c = gamma_curve(g, i), cinv = invert(c);
  const Word b = gen(g, 2 * i), a2 = gen(g, 2 * i + 1), b2 = gen(g, 2 * i + 2);
  images[2 * i - 1] = multiply(c, b);
  images[2 * i] = conjugate(a2, c);
  images[2 * i + 1] = multiply(b2, cinv);
  inverse[2 * i - 1] = multiply(cinv, b);
  inverse[2 * i] = conjugate(a2, cinv);
  inverse[2 * i + 1] = multiply(b2, c);
  return FreeAutomorphism(std::move(images), std::move(inverse));
}

TwistEntry entry(std::string name, TwistKind kind, FreeAutomorphism twist, Word curve) {
  HomologyVector h = curve.abelianization();
  return TwistEntry{std::move(name), kind, std::move(twist), std::move(curve), std::move(h), {}};
}

}  // namespace

TwistTable::TwistTable(Genus genus, std::vector<TwistEntry> entries)
    : genus_(genus), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.twist.genus() != genus_ || e.curve.genus() != genus_) {
      throw GenusMismatch("table entry " + e.name + " has the wrong genus");
    }
  }
  if (!find("Delta")) throw InvalidArgument("table lacks the boundary twist Delta");
}

const TwistEntry* TwistTable::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const TwistEntry& TwistTable::at(std::string_view name) const {
  if (const auto* e = find(name)) return *e;
  throw InvalidArgument("unknown twist name '" + std::string(name) + "' at genus " +
                        std::to_string(genus_.value));
}

std::vector<const TwistEntry*> TwistTable::chain() const {
  std::vector<const TwistEntry*> out;
  for (const auto& e : entries_) {
    if (e.kind == TwistKind::Chain) out.push_back(&e);
  }
  return out;
}

std::vector<const TwistEntry*> TwistTable::generators() const {
  std::vector<const TwistEntry*> out;
  for (const auto& e : entries_) {
    if (e.kind == TwistKind::Chain || e.kind == TwistKind::Humphries) out.push_back(&e);
  }
  return out;
}

std::vector<const TwistEntry*> TwistTable::curve_bases() const {
  std::vector<const TwistEntry*> out;
  for (const auto& e : entries_) {
    if (e.kind != TwistKind::Boundary) out.push_back(&e);
  }
  return out;
}

std::vector<const TwistEntry*> TwistTable::separating_bases() const {
  std::vector<const TwistEntry*> out;
  for (const auto& e : entries_) {
    if (e.kind == TwistKind::Separating) out.push_back(&e);
  }
  return out;
}

Word boundary_word(Genus genus) { return partial_boundary_word(genus, genus.value); }

Word partial_boundary_word(Genus genus, int j) {
  Word d(genus);
  for (int i = 1; i <= j; ++i) d = multiply(d, commutator(gen(genus, 2 * i - 1), gen(genus, 2 * i)));
  return d;
}

bool table_supported(int genus) { return genus >= kMinTableGenus && genus <= kMaxTableGenus; }

TwistTable make_table(Genus g) {
  if (!table_supported(g.value)) {
    throw InvalidArgument("unsupported genus " + std::to_string(g.value) + " (supported " +
                          std::to_string(kMinTableGenus) + ".." + std::to_string(kMaxTableGenus) + ")");
  }
  std::vector<TwistEntry> entries;
  entries.push_back(entry("C1", TwistKind::Chain, alpha_twist(g, 1), gen(g, 1)));
  entries.push_back(entry("C2", TwistKind::Chain, beta_twist(g, 1), gen(g, 2)));
  for (int i = 1; i < g.value; ++i) {
    entries.push_back(entry("C" + std::to_string(2 * i + 1), TwistKind::Chain, gamma_twist(g, i),
                            gamma_curve(g, i)));
    entries.push_back(entry("C" + std::to_string(2 * i + 2), TwistKind::Chain, beta_twist(g, i + 1),
                            gen(g, 2 * i + 2)));
  }
  if (g.value >= 2) {
    entries.push_back(entry("C" + std::to_string(2 * g.value + 1), TwistKind::Chain,
                            alpha_twist(g, g.value), gen(g, 2 * g.value - 1)));
  }
  const std::size_t chain_length = entries.size();
  for (std::size_t k = 0; k < chain_length; ++k) {
    if (k > 0) entries[k].meets_once.push_back(entries[k - 1].name);
    if (k + 1 < chain_length) entries[k].meets_once.push_back(entries[k + 1].name);
  }
  if (g.value >= 3) {
    entries.push_back(entry("H", TwistKind::Humphries, alpha_twist(g, 2), gen(g, 3)));
    entries.back().meets_once.push_back("C4");
    entries[3].meets_once.push_back("H");
  }
  for (int j = 1; j < g.value; ++j) {
    const Word d = partial_boundary_word(g, j);
    entries.push_back(entry("Sep" + std::to_string(j), TwistKind::Separating, inner_on_prefix(d, 2 * j), d));
  }
  const Word boundary = boundary_word(g);
  entries.push_back(entry("Delta", TwistKind::Boundary, inner_on_prefix(boundary, g.rank()), boundary));
  return TwistTable(g, std::move(entries));
}

const TwistTable& builtin_table(Genus genus) {
  static std::array<std::once_flag, kMaxTableGenus + 1> once;
  static std::array<std::optional<TwistTable>, kMaxTableGenus + 1> tables;
  if (!table_supported(genus.value)) {
    throw InvalidArgument("unsupported genus " + std::to_string(genus.value));
  }
  const auto k = static_cast<std::size_t>(genus.value);
  std::call_once(once[k], [&] { tables[k].emplace(make_table(genus)); });
  return *tables[k];
}

std::string to_string(TwistKind kind) {
  switch (kind) {
    case TwistKind::Chain:
      return "chain";
    case TwistKind::Humphries:
      return "humphries";
    case TwistKind::Separating:
      return "separating";
    case TwistKind::Boundary:
      return "boundary";
  }
  return "?";
}

// ---- fixture text form ----------------------------------------------------

std::string serialize_table(const TwistTable& table) {
  std::ostringstream os;
  const Genus g = table.genus();
  os << "# curvedetect generator twist table\n";
  os << "format 1\n";
  os << "genus " << g.value << "\n";
  for (const auto& e : table.entries()) {
    os << "\ntwist " << e.name << ' ' << to_string(e.kind) << "\n";
    os << "curve " << to_string(e.curve) << "\n";
    os << "meets";
    for (const auto& m : e.meets_once) os << ' ' << m;
    os << "\n";
    for (int i = 1; i <= g.rank(); ++i) os << "image x" << i << " = " << to_string(e.twist.image(i)) << "\n";
    for (int i = 1; i <= g.rank(); ++i) {
      os << "inverse x" << i << " = " << to_string(e.twist.inverse_images()[static_cast<std::size_t>(i - 1)])
         << "\n";
    }
    os << "end\n";
  }
  return os.str();
}

TwistTable parse_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<Genus> genus;
  std::vector<TwistEntry> entries;

  struct Pending {
    std::string name;
    TwistKind kind{};
    std::optional<Word> curve;
    std::vector<std::string> meets;
    std::vector<std::optional<Word>> images, inverse;
  };
  std::optional<Pending> cur;

  const auto fail = [&](const std::string& msg) -> void {
    throw InvalidArgument("table line " + std::to_string(line_no) + ": " + msg);
  };
  const auto parse_kind = [&](const std::string& s) {
    if (s == "chain") return TwistKind::Chain;
    if (s == "humphries") return TwistKind::Humphries;
    if (s == "separating") return TwistKind::Separating;
    if (s == "boundary") return TwistKind::Boundary;
    fail("unknown twist kind '" + s + "'");
    return TwistKind::Chain;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "format") {
      int version = 0;
      ls >> version;
      if (version != 1) fail("unsupported table format " + std::to_string(version));
    } else if (key == "genus") {
      int v = 0;
      ls >> v;
      if (v < 1) fail("bad genus");
      genus = Genus{v};
    } else if (key == "twist") {
      if (!genus) fail("twist before genus");
      if (cur) fail("nested twist block");
      std::string name, kind;
      ls >> name >> kind;
      cur = Pending{name, parse_kind(kind), std::nullopt, {},
                    std::vector<std::optional<Word>>(static_cast<std::size_t>(genus->rank())),
                    std::vector<std::optional<Word>>(static_cast<std::size_t>(genus->rank()))};
    } else if (key == "curve" || key == "image" || key == "inverse" || key == "meets") {
      if (!cur) fail(key + " outside a twist block");
      std::string rest;
      std::getline(ls, rest);
      if (key == "meets") {
        std::istringstream ms(rest);
        std::string m;
        while (ms >> m) cur->meets.push_back(m);
      } else if (key == "curve") {
        cur->curve = parse_word(*genus, rest);
      } else {
        const auto eq = rest.find('=');
        if (eq == std::string::npos) fail("expected 'xK = word'");
        const Word lhs = parse_word(*genus, rest.substr(0, eq));
        if (lhs.length() != 1 || lhs.letters()[0] < 0) fail("left side must be a generator");
        auto& slot = (key == "image" ? cur->images : cur->inverse)[static_cast<std::size_t>(lhs.letters()[0] - 1)];
        slot = parse_word(*genus, rest.substr(eq + 1));
      }
    } else if (key == "end") {
      if (!cur) fail("end without twist");
      if (!cur->curve) fail("twist " + cur->name + " lacks a curve");
      std::vector<Word> images, inverse;
      for (std::size_t i = 0; i < cur->images.size(); ++i) {
        if (!cur->images[i] || !cur->inverse[i]) fail("twist " + cur->name + " lacks an image");
        images.push_back(*cur->images[i]);
        inverse.push_back(*cur->inverse[i]);
      }
      TwistEntry e = entry(cur->name, cur->kind, FreeAutomorphism(std::move(images), std::move(inverse)),
                           *cur->curve);
      e.meets_once = cur->meets;
      entries.push_back(std::move(e));
      cur.reset();
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!genus) throw InvalidArgument("table has no genus line");
  if (cur) throw InvalidArgument("unterminated twist block " + cur->name);
  return TwistTable(*genus, std::move(entries));
}

TwistTable load_table(Genus genus, const std::filesystem::path& data_dir) {
  const auto path = data_dir / ("genus" + std::to_string(genus.value) + ".table");
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read table " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  TwistTable table = parse_table(buf.str());
  if (table.genus() != genus) throw GenusMismatch("table " + path.string() + " is for another genus");
  return table;
}

// ---- mapping class words ----------------------------------------------------

std::size_t MappingClassWord::length() const {
  std::size_t n = 0;
  for (const auto& f : factors) n += static_cast<std::size_t>(std::abs(f.exponent));
  return n;
}

MappingClassWord MappingClassWord::inverse() const {
  MappingClassWord out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) out.factors.push_back({it->name, -it->exponent});
  return out;
}

MappingClassWord operator+(const MappingClassWord& a, const MappingClassWord& b) {
  MappingClassWord out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

MappingClassWord parse_mapping_class_word(std::string_view text) {
  detail::Scanner s(text);
  MappingClassWord w = detail::parse_factors(s, '\0');
  if (!s.at_end()) s.fail("unexpected character");
  return w;
}

std::string to_string(const MappingClassWord& w) {
  std::string out;
  for (const auto& f : w.factors) {
    if (!out.empty()) out += ' ';
    out += f.name;
    if (f.exponent != 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

FreeAutomorphism evaluate(const MappingClassWord& w, const TwistTable& table, std::size_t cap) {
  FreeAutomorphism out = FreeAutomorphism::identity(table.genus());
  for (const auto& f : w.factors) {
    const auto& e = table.at(f.name);
    if (f.exponent == 0) throw InvalidArgument("zero exponent on " + f.name);
    const FreeAutomorphism step = f.exponent > 0 ? e.twist : e.twist.inverse();
    for (int k = 0; k < std::abs(f.exponent); ++k) out = compose(out, step, cap);
  }
  return out;
}

FreeAutomorphism evaluate(const MappingClassWord& w, Genus genus, std::size_t cap) {
  return evaluate(w, builtin_table(genus), cap);
}

bool is_central(const FreeAutomorphism& f, const TwistTable& table) {
  for (const auto* e : table.generators()) {
    if (!commutes(f, e->twist)) return false;
  }
  return true;
}

bool is_central(const FreeAutomorphism& f) { return is_central(f, builtin_table(f.genus())); }

// ---- relation validation ----------------------------------------------------

bool RelationReport::all_passed() const { return failures() == 0; }

std::size_t RelationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed ? 0 : 1;
  return n;
}

RelationReport validate_relations(const TwistTable& table) {
  const Genus g = table.genus();
  RelationReport report{g, {}};
  const auto add = [&](std::string category, std::string name, bool ok) {
    report.checks.push_back({std::move(name), std::move(category), ok});
  };
  const auto braid = [](const FreeAutomorphism& s, const FreeAutomorphism& t) {
    return auto_equal(compose(compose(s, t), s), compose(compose(t, s), t));
  };
  const auto adjacent = [](const TwistEntry& a, const TwistEntry& b) {
    for (const auto& m : a.meets_once) {
      if (m == b.name) return true;
    }
    return false;
  };

  const Word boundary = boundary_word(g);
  for (const auto& e : table.entries()) {
    add("boundary", "t_" + e.name + " fixes the boundary word", apply(e.twist, boundary) == boundary);
  }

  const auto gens = table.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const auto& s = *gens[a];
      const auto& t = *gens[b];
      if (adjacent(s, t)) {
        add("braid", s.name + " " + t.name, braid(s.twist, t.twist));
      } else {
        add("commute", s.name + " " + t.name, commutes(s.twist, t.twist));
      }
    }
  }

  // SepJ bounds the subsurface holding C1..C{2J}; only C{2J+1} crosses it.
  const auto seps = table.separating_bases();
  for (std::size_t j = 0; j < seps.size(); ++j) {
    const std::string crossing = "C" + std::to_string(2 * static_cast<int>(j + 1) + 1);
    for (const auto* t : gens) {
      if (t->name == crossing) {
        add("noncommute", seps[j]->name + " " + t->name, !commutes(seps[j]->twist, t->twist));
      } else {
        add("commute", seps[j]->name + " " + t->name, commutes(seps[j]->twist, t->twist));
      }
    }
    for (std::size_t k = j + 1; k < seps.size(); ++k) {
      add("commute", seps[j]->name + " " + seps[k]->name, commutes(seps[j]->twist, seps[k]->twist));
    }
  }

  const auto chain = table.chain();
  const auto chain_power = [&](std::size_t count, int exponent) {
    FreeAutomorphism prod = FreeAutomorphism::identity(g);
    std::string label = "(";
    for (std::size_t k = 0; k < count; ++k) {
      prod = compose(prod, chain[k]->twist);
      label += (k ? " " : "") + chain[k]->name;
    }
    return std::pair{power(prod, exponent), label + ")^" + std::to_string(exponent)};
  };
  {
    // Even chain of length k: exponent 2k+2; odd chain of length k: exponent k+1.
    const std::size_t k = chain.size();
    const int exponent = k % 2 == 0 ? static_cast<int>(2 * k + 2) : static_cast<int>(k + 1);
    const auto [lhs, label] = chain_power(k, exponent);
    add("chain", label + " = Delta", auto_equal(lhs, table.boundary().twist));
  }
  for (std::size_t j = 0; j < seps.size(); ++j) {
    const std::size_t k = 2 * (j + 1);
    const auto [lhs, label] = chain_power(k, static_cast<int>(2 * k + 2));
    add("chain", label + " = " + seps[j]->name, auto_equal(lhs, seps[j]->twist));
  }

  for (const auto& e : table.entries()) {
    if (e.kind == TwistKind::Boundary) continue;
    add("central", "Delta " + e.name, commutes(table.boundary().twist, e.twist));
  }

  for (const auto& e : table.entries()) {
    const IntMatrix m = homology_action(e.twist);
    if (e.separating()) {
      add("homology", e.name + " acts trivially on homology", m.is_identity());
    } else {
      add("homology", e.name + " acts as the transvection along its curve", m == transvection(e.homology));
    }
  }
  return report;
}

RelationReport validate_relations(Genus genus) { return validate_relations(builtin_table(genus)); }

}  // namespace cdt
