#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "curvedetect/error.hpp"
#include "curvedetect/foxrep.hpp"
#include "curvedetect/jfilt.hpp"
#include "curvedetect/mcg.hpp"
#include "curvedetect/parallel.hpp"
#include "curvedetect/sampling.hpp"

namespace cdt::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  int genus = 2;
  int cap = 3;
  int extended_cap = 0;
  std::uint64_t seed = 1;
  int samples = 100;
  int torelli_pairs = 20;
  int max_conjugator_len = 4;
  unsigned threads = 1;
  int suzuki_budget = 0;
  std::string format = "json";
  std::string output;
  std::string data_dir = CURVEDETECT_DATA_DIR;
  std::string c1;
  std::string c2;
};

/// Reported with exit code 2.
struct UsageError : Error {
  using Error::Error;
};

Json config_json(const RunConfig& c, const std::string& command) {
  Json j;
  j["genus"] = c.genus;
  if (command == "pair" || command == "corollary" || command == "scan") j["cap"] = c.cap;
  if (command == "pair") {
    j["c1"] = c.c1;
    j["c2"] = c.c2;
  }
  if (command == "corollary") j["extended_cap"] = c.extended_cap;
  if (command == "scan" || command == "foxcheck") {
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["max_conjugator_len"] = c.max_conjugator_len;
    j["threads"] = c.threads;
  }
  if (command == "foxcheck") {
    j["torelli_pairs"] = c.torelli_pairs;
    j["suzuki_budget"] = c.suzuki_budget;
  }
  j["format"] = c.format;
  return j;
}

Json header(const RunConfig& c, const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["version"] = CURVEDETECT_VERSION;
  j["command"] = command;
  j["config"] = config_json(c, command);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_value(const Json& v) {
  if (v.is_string()) return csv_field(v.get<std::string>());
  return v.dump();
}

/// Flat projection: "# key=value" lines for the header, then one row per record.
std::string to_csv(const Json& head, const std::vector<std::string>& columns, const Json& rows) {
  std::ostringstream os;
  os << "# schema=" << head["schema"].dump() << "\n# version=" << head["version"].get<std::string>()
     << "\n# command=" << head["command"].get<std::string>() << "\n";
  for (const auto& [k, v] : head["config"].items()) os << "# " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << csv_value(row[columns[i]]);
    os << "\n";
  }
  return os.str();
}

Json to_json(const JFValue& v) {
  static const char* kinds[] = {"Zero", "One", "ExactGE2", "AtLeast"};
  return Json{{"kind", kinds[static_cast<int>(v.kind)]}, {"value", v.value}, {"text", to_string(v)}};
}

Json to_json(const JFDepth& d) {
  static const char* kinds[] = {"NotInM1", "Exact", "AtLeast", "Identity"};
  return Json{{"kind", kinds[static_cast<int>(d.kind)]}, {"level", d.level}, {"text", to_string(d)}};
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponents", e}, {"coeff", c.str()}});
  return terms;
}

Json to_json(const MagnusMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"size", m.size()}, {"entries", std::move(rows)}};
}

Json pair_row(const PairReport& p) {
  Json row;
  row["c1"] = to_string(p.c1);
  row["c2"] = to_string(p.c2);
  row["commuting"] = p.commuting;
  row["braid"] = p.braid;
  row["algebraic"] = p.algebraic;
  row["ijf"] = to_string(p.ijf);
  row["depth_cap"] = p.depth_cap;
  Json v = Json::array();
  for (const auto& s : consistency_violations(p)) v.push_back(s);
  row["violations"] = std::move(v);
  return row;
}

Genus checked_genus(const RunConfig& c) {
  if (!table_supported(c.genus)) {
    throw UsageError("unsupported genus " + std::to_string(c.genus) + " (supported " + std::to_string(kMinTableGenus) +
                     ".." + std::to_string(kMaxTableGenus) + ")");
  }
  return Genus{c.genus};
}

/// The generator table from the data directory, or the built-in one when the
/// directory has no file for this genus.
TwistTable load(const RunConfig& c) {
  const Genus g = checked_genus(c);
  const auto path = std::filesystem::path(c.data_dir) / ("genus" + std::to_string(g.value) + ".table");
  if (std::filesystem::exists(path)) return load_table(g, c.data_dir);
  return builtin_table(g);
}

struct Output {
  std::string text;
  int code = 0;
};

Output cmd_validate(const RunConfig& c) {
  const TwistTable table = load(c);
  const RelationReport report = validate_relations(table);
  Json j = header(c, "validate");
  Json checks = Json::array();
  for (const auto& r : report.checks) checks.push_back(Json{{"category", r.category}, {"name", r.name}, {"passed", r.passed}});
  j["passed"] = report.all_passed();
  j["failures"] = report.failures();
  const int code = report.all_passed() ? 0 : 1;
  if (c.format == "csv") return {to_csv(j, {"category", "name", "passed"}, checks), code};
  j["checks"] = std::move(checks);
  return {j.dump(2) + "\n", code};
}

Output cmd_table(const RunConfig& c) { return {serialize_table(builtin_table(checked_genus(c))), 0}; }

Output cmd_pair(const RunConfig& c) {
  const TwistTable table = load(c);
  const CurveResolver r(table);
  const CurveSpec c1 = parse_curve_spec(table.genus(), c.c1);
  const CurveSpec c2 = parse_curve_spec(table.genus(), c.c2);
  const PairReport report = classify_pair(c1, c2, c.cap, r);
  Json row = pair_row(report);
  const int code = row["violations"].empty() ? 0 : 1;
  Json j = header(c, "pair");
  if (c.format == "csv") {
    row["violations"] = static_cast<int>(row["violations"].size());
    return {to_csv(j, {"c1", "c2", "commuting", "braid", "algebraic", "ijf", "depth_cap", "violations"},
                   Json::array({row})),
            code};
  }
  for (auto& [k, v] : row.items()) j[k] = v;
  j["ijf"] = to_json(report.ijf);
  return {j.dump(2) + "\n", code};
}

std::vector<std::string> corollary_violations(const CorollaryReport& rep) {
  std::vector<std::string> out;
  int previous = 0;
  for (const auto& row : rep.rows) {
    const std::string m = "m=" + std::to_string(row.nesting);
    if (!row.nontrivial) out.push_back(m + ": element is the identity");
    if (row.certified_level < std::min(row.expected_level, rep.cap)) out.push_back(m + ": certified level below expectation");
    if (row.nesting > 1 && row.certified_level < std::min(previous + 2, rep.cap)) {
      out.push_back(m + ": level did not grow by 2");
    }
    previous = row.certified_level;
  }
  for (std::size_t k = 0; k < rep.witnesses.size(); ++k) {
    if (rep.witnesses[k] == 0) out.push_back("no non-identity witness in M(" + std::to_string(k + 1) + ")");
  }
  return out;
}

Output cmd_corollary(const RunConfig& c) {
  const TwistTable table = load(c);
  const CurveResolver r(table);
  const CorollaryReport rep = run_corollary(r, c.cap, c.extended_cap);
  Json j = header(c, "corollary");
  j["a"] = to_string(rep.a);
  j["b"] = to_string(rep.b);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    rows.push_back(Json{{"nesting", row.nesting},
                        {"expected_level", row.expected_level},
                        {"depth", to_string(row.depth)},
                        {"certified_level", row.certified_level},
                        {"nontrivial", row.nontrivial},
                        {"max_image_length", row.max_image_length}});
  }
  const auto violations = corollary_violations(rep);
  const int code = violations.empty() ? 0 : 1;
  if (c.format == "csv") {
    return {to_csv(j, {"nesting", "expected_level", "depth", "certified_level", "nontrivial", "max_image_length"}, rows),
            code};
  }
  j["rows"] = std::move(rows);
  Json witnesses = Json::array();
  for (std::size_t k = 0; k < rep.witnesses.size(); ++k) {
    witnesses.push_back(Json{{"level", k + 1}, {"nesting", rep.witnesses[k]}});
  }
  j["witnesses"] = std::move(witnesses);
  j["finite_level_blind"] = rep.finite_level_blind;
  if (rep.extended_depth) {
    j["extended"] = Json{{"cap", rep.extended_cap}, {"depth", to_json(*rep.extended_depth)}};
  }
  if (!rep.note.empty()) j["note"] = rep.note;
  j["violations"] = violations;
  return {j.dump(2) + "\n", code};
}

Output cmd_scan(const RunConfig& c) {
  const TwistTable table = load(c);
  const CurveResolver r(table);
  Rng rng(c.seed);
  std::vector<std::pair<CurveSpec, CurveSpec>> pairs;
  for (int i = 0; i < c.samples; ++i) {
    CurveSpec a = random_curve_spec(table, rng, c.max_conjugator_len);
    CurveSpec b = random_curve_spec(table, rng, c.max_conjugator_len);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  const auto reports = parallel_map<std::optional<PairReport>>(
      pairs.size(), c.threads, [&](std::size_t i) { return classify_pair(pairs[i].first, pairs[i].second, c.cap, r); });

  Json rows = Json::array();
  std::map<std::string, int> histogram;
  int violations = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    Json row = Json{{"index", i}};
    const Json fields = pair_row(*reports[i]);
    for (const auto& [k, v] : fields.items()) row[k] = v;
    violations += static_cast<int>(row["violations"].size());
    ++histogram[to_string(reports[i]->ijf)];
    rows.push_back(std::move(row));
  }
  const int code = violations == 0 ? 0 : 1;
  Json j = header(c, "scan");
  if (c.format == "csv") {
    for (auto& row : rows) row["violations"] = static_cast<int>(row["violations"].size());
    return {to_csv(j, {"index", "c1", "c2", "commuting", "braid", "algebraic", "ijf", "depth_cap", "violations"}, rows),
            code};
  }
  j["pairs"] = std::move(rows);
  j["summary"] = Json{{"pairs", reports.size()}, {"violations", violations}, {"histogram", histogram}};
  return {j.dump(2) + "\n", code};
}

Output cmd_foxcheck(const RunConfig& c) {
  const TwistTable table = load(c);
  const CurveResolver r(table);
  const Genus g = table.genus();
  const int n = g.rank();
  Rng rng(c.seed);
  Json checks = Json::array();
  bool ok = true;
  const auto record = [&](const std::string& name, int trials, int failures) {
    checks.push_back(Json{{"name", name}, {"trials", trials}, {"failures", failures}, {"passed", failures == 0}});
    ok = ok && failures == 0;
  };

  int failures = 0;
  for (int k = 0; k < c.samples; ++k) {
    const Word w = random_word(g, rng, 0, 12);
    LaurentPoly lhs(n);
    for (int j = 1; j <= n; ++j) {
      LaurentPoly::Exponents e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j - 1)] = 1;
      lhs += fox_derivative_abelianized(w, j) * (LaurentPoly::monomial(e) - LaurentPoly::one(n));
    }
    if (!(lhs == abelian_monomial(w) - LaurentPoly::one(n))) ++failures;
  }
  record("fundamental identity", c.samples, failures);

  failures = 0;
  for (int k = 0; k < c.samples; ++k) {
    const Word u = random_word(g, rng, 0, 12);
    const Word v = random_word(g, rng, 0, 12);
    for (int i = 1; i <= n; ++i) {
      const LaurentPoly expected =
          fox_derivative_abelianized(u, i) + abelian_monomial(u) * fox_derivative_abelianized(v, i);
      if (!(fox_derivative_abelianized(multiply(u, v), i) == expected)) {
        ++failures;
        break;
      }
    }
  }
  record("product rule", c.samples, failures);

  failures = 0;
  int inverse_failures = 0;
  for (int k = 0; k < c.torelli_pairs; ++k) {
    const FreeAutomorphism f = random_torelli(r, rng, 2, 2);
    const FreeAutomorphism h = random_torelli(r, rng, 2, 2);
    if (!(magnus_rep(compose(f, h)) == magnus_rep(f) * magnus_rep(h))) ++failures;
    if (!(magnus_rep(f) * magnus_rep(f.inverse())).is_identity()) ++inverse_failures;
  }
  record("multiplicativity", c.torelli_pairs, failures);
  record("inverse", c.torelli_pairs, inverse_failures);

  Json j = header(c, "foxcheck");
  if (const TwistEntry* sep = table.find("Sep1")) {
    const MagnusMatrix m = magnus_rep(sep->twist);
    record("magnus_rep(Sep1) != I", 1, m.is_identity() ? 1 : 0);
    j["sep1"] = Json{{"is_identity", m.is_identity()}, {"matrix", to_json(m)}};
  } else {
    j["sep1"] = nullptr;
  }

  if (c.suzuki_budget > 0 && g.value >= 2) {
    const SuzukiScan scan = suzuki_scan(r, c.suzuki_budget, c.threads);
    Json hits = Json::array();
    for (const auto& h : scan.hits) {
      hits.push_back(Json{{"a", to_string(h.a)}, {"b", to_string(h.b)}, {"max_image_length", h.commutator.max_image_length()}});
    }
    j["suzuki"] = Json{{"budget", c.suzuki_budget},
                       {"pairs_examined", scan.pairs_examined},
                       {"trivial_commutators", scan.trivial_commutators},
                       {"hits", std::move(hits)}};
  } else {
    j["suzuki"] = Json{{"skipped", true}};
  }

  const int code = ok ? 0 : 1;
  if (c.format == "csv") return {to_csv(j, {"name", "trials", "failures", "passed"}, checks), code};
  j["checks"] = std::move(checks);
  j["passed"] = ok;
  return {j.dump(2) + "\n", code};
}

void add_common(CLI::App* sub, RunConfig& c, int* cap) {
  sub->add_option("--genus", c.genus, "Surface genus")->capture_default_str();
  if (cap) sub->add_option("--cap", *cap, "Magnus truncation degree")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  sub->add_option("--output", c.output, "Write the report to this file instead of stdout");
  sub->add_option("--data-dir", c.data_dir, "Directory with generator tables")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Dehn twist commutators and the Johnson filtration", "curvedetect"};
  app.set_version_flag("--version", std::string(CURVEDETECT_VERSION));
  app.require_subcommand(1);

  auto* validate = app.add_subcommand("validate", "Check the generator table against mapping class group relations");
  add_common(validate, c, nullptr);

  auto* table = app.add_subcommand("table", "Print the built-in generator table");
  table->add_option("--genus", c.genus, "Surface genus")->capture_default_str();

  auto* pair = app.add_subcommand("pair", "Report on a pair of curves");
  add_common(pair, c, &c.cap);
  pair->add_option("--c1", c.c1, "First curve, e.g. \"C1\" or \"Sep1 @ [C3]\"")->required();
  pair->add_option("--c2", c.c2, "Second curve")->required();

  auto* corollary = app.add_subcommand("corollary", "Nested commutators of two separating twists");
  int corollary_cap = 4;
  add_common(corollary, c, &corollary_cap);
  corollary->add_option("--extended-cap", c.extended_cap, "Also compute the first commutator's depth at this cap");

  auto* scan = app.add_subcommand("scan", "Classify random curve pairs and check the consistency relations");
  add_common(scan, c, &c.cap);
  scan->add_option("--seed", c.seed, "RNG seed")->required();
  scan->add_option("--samples", c.samples, "Number of pairs")->check(CLI::NonNegativeNumber)->capture_default_str();
  scan->add_option("--max-conj-len", c.max_conjugator_len, "Longest conjugator")->check(CLI::NonNegativeNumber)->capture_default_str();
  scan->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  auto* fox = app.add_subcommand("foxcheck", "Fox calculus identities and the Magnus representation");
  add_common(fox, c, nullptr);
  fox->add_option("--seed", c.seed, "RNG seed")->capture_default_str();
  fox->add_option("--samples", c.samples, "Random words and word pairs")->check(CLI::NonNegativeNumber)->capture_default_str();
  fox->add_option("--torelli-pairs", c.torelli_pairs, "Random Torelli pairs")->check(CLI::NonNegativeNumber)->capture_default_str();
  fox->add_option("--suzuki-budget", c.suzuki_budget, "Separating pairs to search for kernel elements (0 skips)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  fox->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }
  if (corollary->parsed()) c.cap = corollary_cap;

  Output result;
  try {
    if (validate->parsed()) result = cmd_validate(c);
    else if (table->parsed()) result = cmd_table(c);
    else if (pair->parsed()) result = cmd_pair(c);
    else if (corollary->parsed()) result = cmd_corollary(c);
    else if (scan->parsed()) result = cmd_scan(c);
    else result = cmd_foxcheck(c);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (c.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << c.output << "\n";
      return 2;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace cdt::cli
