#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "curvedetect/error.hpp"
#include "curvedetect/homology.hpp"
#include "curvedetect/mcg.hpp"
#include "support.hpp"

using namespace cdt;

namespace {

FreeAutomorphism ev(int genus, const std::string& text) {
  return evaluate(parse_mapping_class_word(text), Genus{genus});
}

}  // namespace

TEST(Mcg, RelationSuitePassesForEverySupportedGenus) {
  for (int g = kMinTableGenus; g <= kMaxTableGenus; ++g) {
    const auto report = validate_relations(Genus{g});
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << "genus " << g << ": " << c.category << " " << c.name;
    EXPECT_TRUE(report.all_passed());
  }
}

TEST(Mcg, UnsupportedGenus) {
  EXPECT_THROW(builtin_table(Genus{9}), InvalidArgument);
  EXPECT_THROW(builtin_table(Genus{0}), InvalidArgument);
}

TEST(Mcg, EvaluateExamples) {
  EXPECT_TRUE(is_identity(ev(2, "")));
  EXPECT_TRUE(is_identity(ev(2, "C1 C1^-1")));
  EXPECT_TRUE(auto_equal(ev(1, "C1 C2 C1"), ev(1, "C2 C1 C2")));
  EXPECT_FALSE(auto_equal(ev(1, "C1 C2"), ev(1, "C2 C1")));
  EXPECT_TRUE(auto_equal(power(ev(1, "C1 C2"), 6), ev(1, "Delta")));
  EXPECT_TRUE(auto_equal(power(ev(2, "C1 C2 C3 C4 C5"), 6), ev(2, "Delta")));
  EXPECT_TRUE(auto_equal(power(ev(2, "C1 C2"), 6), ev(2, "Sep1")));
  EXPECT_THROW(ev(2, "C9"), InvalidArgument);
}

TEST(Mcg, ComposeAndApply) {
  const Genus g{2};
  const auto f = ev(2, "C2 C3^-1");
  EXPECT_TRUE(auto_equal(compose(f, FreeAutomorphism::identity(g)), f));
  const Word x1 = Word::generator(g, 1);
  const Word d = boundary_word(g);
  EXPECT_EQ(apply(ev(2, "Delta"), x1), conjugate(x1, d));
  EXPECT_THROW(apply(power(ev(2, "C1 C2"), 40), Word::generator(g, 2), 10), ImageTooLong);
}

TEST(Mcg, Centrality) {
  EXPECT_TRUE(is_central(FreeAutomorphism::identity(Genus{2})));
  EXPECT_TRUE(is_central(ev(2, "Delta")));
  EXPECT_TRUE(is_central(ev(3, "Delta")));
  EXPECT_FALSE(is_central(ev(2, "C1")));
  EXPECT_FALSE(is_central(ev(2, "Sep1")));
}

TEST(Mcg, DisjointPairsCommute) {
  EXPECT_TRUE(commutes(ev(2, "C1"), ev(2, "C3")));
  EXPECT_TRUE(commutes(ev(2, "Sep1"), ev(2, "C1")));
  EXPECT_TRUE(commutes(ev(2, "Sep1"), ev(2, "C2")));
  EXPECT_FALSE(commutes(ev(2, "Sep1"), ev(2, "C3")));
}

TEST(Mcg, EvaluateIsHomomorphism) {
  Rng rng(41);
  for (int genus : {1, 2, 3}) {
    const auto& table = builtin_table(Genus{genus});
    for (int k = 0; k < 60; ++k) {
      const auto u = random_mapping_class_word(table, rng, 0, 5);
      const auto v = random_mapping_class_word(table, rng, 0, 5);
      EXPECT_TRUE(auto_equal(evaluate(u + v, table), compose(evaluate(u, table), evaluate(v, table))));
      EXPECT_TRUE(is_identity(evaluate(u + u.inverse(), table)));
    }
  }
}

TEST(Mcg, TwistPowersCancel) {
  for (const auto& e : builtin_table(Genus{2}).entries()) {
    for (int k = 1; k <= 3; ++k) {
      EXPECT_TRUE(is_identity(compose(power(e.twist, k), power(e.twist, -k)))) << e.name << " " << k;
    }
  }
}

TEST(Mcg, RejectsNonBijectiveImages) {
  const Genus g{1};
  const Word x1 = Word::generator(g, 1);
  const Word x2 = Word::generator(g, 2);
  // x1 -> x1^2 is an endomorphism but not invertible.
  EXPECT_THROW(FreeAutomorphism({power(x1, 2), x2}, {x1, x2}), InvalidArgument);
  // Wrong inverse for a genuine automorphism.
  EXPECT_THROW(FreeAutomorphism({multiply(x1, x2), x2}, {x1, x2}), InvalidArgument);
  EXPECT_NO_THROW(FreeAutomorphism({multiply(x1, x2), x2}, {multiply(x1, invert(x2)), x2}));
}

TEST(Mcg, HomologyOfTwistsIsTransvection) {
  for (int genus : {1, 2, 3}) {
    for (const auto& e : builtin_table(Genus{genus}).entries()) {
      const IntMatrix m = homology_action(e.twist);
      if (e.separating()) {
        EXPECT_TRUE(m.is_identity()) << e.name;
      } else {
        EXPECT_EQ(m, transvection(e.homology)) << e.name;
      }
    }
  }
}

TEST(Mcg, TableTextRoundTrip) {
  for (int g = kMinTableGenus; g <= kMaxTableGenus; ++g) {
    const auto& table = builtin_table(Genus{g});
    const std::string text = serialize_table(table);
    const TwistTable back = parse_table(text);
    EXPECT_EQ(serialize_table(back), text);
    ASSERT_EQ(back.entries().size(), table.entries().size());
    for (std::size_t i = 0; i < table.entries().size(); ++i) {
      EXPECT_TRUE(auto_equal(back.entries()[i].twist, table.entries()[i].twist));
    }
  }
  EXPECT_THROW(parse_table("format 1\ngenus 1\ntwist C1 chain\n"), Error);
}

TEST(Mcg, DataDirectoryMatchesBuiltinTables) {
  for (int g = kMinTableGenus; g <= kMaxTableGenus; ++g) {
    std::ifstream in(std::string(CURVEDETECT_DATA_DIR) + "/genus" + std::to_string(g) + ".table");
    ASSERT_TRUE(in) << "missing table for genus " << g;
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), serialize_table(builtin_table(Genus{g})));
  }
}

TEST(Mcg, MappingClassWordText) {
  const auto w = parse_mapping_class_word("C1 C2^-1 Sep1^2");
  ASSERT_EQ(w.factors.size(), 3u);
  EXPECT_EQ(w.factors[1], (TwistPower{"C2", -1}));
  EXPECT_EQ(to_string(w), "C1 C2^-1 Sep1^2");
  EXPECT_EQ(parse_mapping_class_word(to_string(w)), w);
  EXPECT_THROW(parse_mapping_class_word("C1^0"), ParseError);
  EXPECT_THROW(parse_mapping_class_word("C1^"), ParseError);
}
