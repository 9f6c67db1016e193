// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "curvedetect/foxrep.hpp"
#include "curvedetect/homology.hpp"
#include "curvedetect/jfilt.hpp"
#include "curvedetect/sampling.hpp"

using namespace cdt;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "curvedetect");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

CurveSpec spec(int genus, const std::string& text) { return parse_curve_spec(Genus{genus}, text); }

FreeAutomorphism ev(const TwistTable& t, const std::string& text) { return evaluate(parse_mapping_class_word(text), t); }

FreeAutomorphism separating_commutator(const CurveResolver& r) {
  return commutator(r.resolve(spec(2, "Sep1"))->twist, r.resolve(spec(2, "Sep1 @ [C3]"))->twist);
}

Outcome relation_gate() {
  std::ostringstream d;
  bool ok = true;
  for (const char* g : {"1", "2", "3"}) {
    const auto r = cli({"validate", "--genus", g});
    const auto j = nlohmann::json::parse(r.out);
    d << "g" << g << ": " << j["checks"].size() << " checks, " << j["failures"] << " failed; ";
    ok = ok && r.code == 0;
  }
  const auto& t1 = builtin_table(Genus{1});
  const auto& t2 = builtin_table(Genus{2});
  const bool chain1 = auto_equal(power(ev(t1, "C1 C2"), 6), t1.boundary().twist);
  const bool chain2 = auto_equal(power(ev(t2, "C1 C2 C3 C4 C5"), 6), t2.boundary().twist);
  const bool central = is_central(t2.boundary().twist, t2) && is_central(t1.boundary().twist, t1);
  bool sep_trivial = true;
  for (int g = 2; g <= 3; ++g) {
    for (const auto* e : builtin_table(Genus{g}).separating_bases()) {
      sep_trivial = sep_trivial && homology_action(e->twist).is_identity();
    }
  }
  d << "(C1C2)^6=Delta " << chain1 << ", (C1..C5)^6=Delta " << chain2 << ", Delta central " << central
    << ", Sep homologically trivial " << sep_trivial;
  return {ok && chain1 && chain2 && central && sep_trivial, d.str()};
}

Outcome disjointness_fixtures() {
  int adjacent = 0, disjoint = 0, wrong = 0;
  for (int g = 1; g <= 3; ++g) {
    const auto& table = builtin_table(Genus{g});
    const auto gens = table.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = a + 1; b < gens.size(); ++b) {
        bool meets = false;
        for (const auto& m : gens[a]->meets_once) meets = meets || m == gens[b]->name;
        for (const auto& m : gens[b]->meets_once) meets = meets || m == gens[a]->name;
        const bool trivial = is_identity(commutator(gens[a]->twist, gens[b]->twist));
        (meets ? adjacent : disjoint)++;
        if (trivial == meets) ++wrong;
      }
    }
  }
  return {wrong == 0, std::to_string(disjoint) + " disjoint pairs commute, " + std::to_string(adjacent) +
                          " adjacent pairs do not; mismatches " + std::to_string(wrong)};
}

Outcome separating_depth() {
  const auto& t = builtin_table(Genus{2}).at("Sep1").twist;
  const JFDepth d = johnson_depth(t, 3);
  const bool in2 = in_Mk(t, 2);
  std::size_t degree3 = 0;
  for (const auto& terms : johnson_leading_term(t, 2)) degree3 += terms.size();
  return {d == JFDepth{JFDepth::Kind::Exact, 2} && in2 && degree3 > 0,
          "depth " + to_string(d) + ", in M(2) " + std::to_string(in2) + ", nonzero degree-3 terms " +
              std::to_string(degree3)};
}

Outcome nested_commutators() {
  const auto r = cli({"corollary", "--genus", "2", "--cap", "4"});
  const auto j = nlohmann::json::parse(r.out);
  const CurveResolver res(builtin_table(Genus{2}));
  const FreeAutomorphism c = separating_commutator(res);
  const bool in4 = in_Mk(c, 4);
  const bool nontrivial = !is_identity(c);
  bool every_level = true;
  for (const auto& w : j["witnesses"]) every_level = every_level && w["nesting"].get<int>() > 0;
  every_level = every_level && j["witnesses"].size() == 4;
  const auto t0 = std::chrono::steady_clock::now();
  const JFDepth d5 = johnson_depth(c, 5);
  const double s5 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream d;
  d << "cli exit " << r.code << ", [t_Sep1, t_Sep1@[C3]] in M(4) " << in4 << ", nontrivial " << nontrivial
    << ", witness for every k<=4 " << every_level << "; degree-5 check: " << to_string(d5) << " in " << s5 << "s";
  return {r.code == 0 && in4 && nontrivial && every_level && s5 < 600, d.str()};
}

Outcome relation_scan() {
  const auto r = cli({"scan", "--genus", "2", "--seed", "20240601", "--samples", "100", "--max-conj-len", "4", "--cap", "3"});
  const auto j = nlohmann::json::parse(r.out);
  return {r.code == 0 && j["summary"]["violations"] == 0 && j["pairs"].size() == 100,
          "100 pairs, violations " + j["summary"]["violations"].dump() + ", histogram " +
              j["summary"]["histogram"].dump()};
}

Outcome morita() {
  const auto& table = builtin_table(Genus{2});
  const CurveResolver r(table);
  Rng rng(606);
  int passed = 0;
  for (int k = 0; k < 20; ++k) {
    const bool one_two = k % 2 == 0;
    const FreeAutomorphism g = r.resolve(random_curve_spec(table, rng, 3, true))->twist;
    if (one_two) {
      const FreeAutomorphism f = random_torelli(r, rng, 2, 2);
      passed += morita_check(f, g, 1, 2, 3);
    } else {
      const FreeAutomorphism f = r.resolve(random_curve_spec(table, rng, 3, true))->twist;
      passed += morita_check(f, g, 2, 2, 4);
    }
  }
  return {passed == 20, std::to_string(passed) + "/20 samples with (kf,kg) in {(1,2),(2,2)}"};
}

Outcome moved_separating_curves() {
  const auto& table = builtin_table(Genus{2});
  const CurveResolver r(table);
  const auto delta = fact5_instance(table.boundary().twist, 50, r);
  Rng rng(707);
  int moved = 0, tried = 0, worst = 0;
  while (tried < 10) {
    const FreeAutomorphism f = evaluate(random_mapping_class_word(table, rng, 1, 5), table);
    if (is_central(f, table)) continue;
    ++tried;
    const auto v = fact5_instance(f, 50, r);
    if (!v.fixes_all_sampled()) {
      ++moved;
      worst = std::max(worst, v.sampled);
    }
  }
  return {delta.fixes_all_sampled() && moved == 10,
          "Delta fixes all " + std::to_string(delta.sampled) + " sampled; " + std::to_string(moved) +
              "/10 non-central elements move a separating curve (worst after " + std::to_string(worst) + " samples)"};
}

Outcome witnesses() {
  const std::vector<std::tuple<int, std::string, std::string>> fixtures{
      {1, "C1", "C2"},         {1, "C1", "C1 @ [C2]"},      {1, "C2", "C2 @ [C1^-1]"},
      {2, "C1", "C3"},         {2, "C1", "C5"},             {2, "Sep1", "Sep1 @ [C3]"},
      {2, "C2", "Sep1"},       {2, "C3", "C4 @ [C5]"},      {3, "Sep1", "Sep2"},
      {3, "C1", "H"},
  };
  int found = 0;
  std::ostringstream d;
  for (const auto& [g, a, b] : fixtures) {
    const CurveResolver r(builtin_table(Genus{g}));
    const auto w = distinguishing_witness(spec(g, a), spec(g, b), 100, r);
    if (!w) continue;
    const auto& tw = r.resolve(*w)->twist;
    if (commutes(r.resolve(spec(g, a))->twist, tw) != commutes(r.resolve(spec(g, b))->twist, tw)) ++found;
  }
  d << found << "/" << fixtures.size() << " fixture pairs distinguished within budget 100";
  return {found == static_cast<int>(fixtures.size()), d.str()};
}

Outcome fox() {
  const auto r = cli({"foxcheck", "--genus", "2", "--seed", "909", "--samples", "100", "--torelli-pairs", "20"});
  const auto j = nlohmann::json::parse(r.out);
  std::ostringstream d;
  for (const auto& c : j["checks"]) d << c["name"].get<std::string>() << " " << c["trials"] << "/" << c["failures"] << "; ";
  return {r.code == 0 && j["passed"].get<bool>() && !j["sep1"]["is_identity"].get<bool>(),
          d.str() + "magnus_rep(Sep1) identity " + j["sep1"]["is_identity"].dump()};
}

Outcome non_detection() {
  const CurveResolver r(builtin_table(Genus{2}));
  const FreeAutomorphism c = separating_commutator(r);
  const bool rho4_trivial = in_Mk(c, 4);
  const bool nontrivial = !is_identity(c);
  const auto rep = run_corollary(r, 4);
  return {rho4_trivial && nontrivial && rep.finite_level_blind,
          "rho_4(commutator) trivial " + std::to_string(rho4_trivial) + ", commutator != 1 " +
              std::to_string(nontrivial) + ", report finite_level_blind " + std::to_string(rep.finite_level_blind)};
}

Outcome determinism() {
  const std::vector<std::string> args{"scan", "--genus", "2", "--seed", "1111", "--samples", "100", "--cap", "3"};
  const auto a = cli(args);
  const auto b = cli(args);
  return {a.code == 0 && a.out == b.out && !a.out.empty(),
          std::to_string(a.out.size()) + " bytes, identical " + std::to_string(a.out == b.out)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "relation gate, genus 1-3", 30, relation_gate},
      {2, "twist commutators of chain curves", 5, disjointness_fixtures},
      {3, "Johnson depth of a separating twist", 60, separating_depth},
      {4, "nested separating commutators", 120, nested_commutators},
      {5, "random pair relation scan", 600, relation_scan},
      {6, "Morita inclusion", 300, morita},
      {7, "moved separating curves", 120, moved_separating_curves},
      {8, "distinguishing witnesses", 120, witnesses},
      {9, "Fox calculus and Magnus representation", 120, fox},
      {10, "finite-level non-detection", 60, non_detection},
      {11, "scan determinism", 60, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s < c.limit_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s criterion %d: %s (%.2fs, limit %.0fs) -- %s%s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), s,
                c.limit_seconds, o.detail.c_str(), in_time ? "" : " [over time limit]");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
