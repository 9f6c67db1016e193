#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "curvedetect");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cdt::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, Validate) {
  for (const char* g : {"1", "2", "3"}) {
    const auto r = run({"validate", "--genus", g});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = json_of(r);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_TRUE(j["passed"].get<bool>());
  }
  const auto bad = run({"validate", "--genus", "9"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("unsupported genus"), std::string::npos);
}

TEST(Cli, Pair) {
  auto r = run({"pair", "--genus", "2", "--c1", "C1", "--c2", "C3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["ijf"]["kind"], "Zero");

  r = run({"pair", "--genus", "1", "--c1", "C1", "--c2", "C2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["ijf"]["kind"], "One");

  r = run({"pair", "--genus", "2", "--c1", "Sep1", "--c2", "Sep1 @ [C3]", "--cap", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_EQ(j["ijf"]["text"], "AtLeast(5)");
  EXPECT_FALSE(j["commuting"].get<bool>());
  EXPECT_EQ(j["config"]["cap"], 4);
  EXPECT_EQ(j["version"], CURVEDETECT_VERSION);
}

TEST(Cli, ParseErrorsExitTwo) {
  auto r = run({"pair", "--genus", "2", "--c1", "Sep1 @ [C3", "--c2", "C1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("column 11"), std::string::npos) << r.err;
  EXPECT_EQ(run({"pair", "--genus", "2", "--c1", "C1"}).code, 2);
  EXPECT_EQ(run({"scan", "--genus", "2"}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"pair", "--genus", "2", "--c1", "C1", "--c2", "C3", "--format", "xml"}).code, 2);
}

TEST(Cli, NestedCommutatorCommand) {
  const auto r = run({"corollary", "--genus", "2", "--cap", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json_of(r);
  EXPECT_TRUE(j["finite_level_blind"].get<bool>());
  for (const auto& row : j["rows"]) EXPECT_TRUE(row["nontrivial"].get<bool>());
  EXPECT_TRUE(j["violations"].empty());

  const auto small = run({"corollary", "--genus", "2", "--cap", "1"});
  EXPECT_EQ(small.code, 0);
  EXPECT_TRUE(json_of(small)["rows"].empty());
  EXPECT_TRUE(json_of(small).contains("note"));
  EXPECT_EQ(run({"corollary", "--genus", "1"}).code, 2);
}

TEST(Cli, ScanIsDeterministic) {
  const std::vector<std::string> args{"scan", "--genus", "2", "--seed", "7", "--samples", "40", "--cap", "3"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = json_of(a);
  EXPECT_EQ(j["summary"]["violations"], 0);
  EXPECT_EQ(j["pairs"].size(), 40u);
  int total = 0;
  for (const auto& [k, v] : j["summary"]["histogram"].items()) total += v.get<int>();
  EXPECT_EQ(total, 40);

  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  auto tj = json_of(run(threaded));
  EXPECT_EQ(tj["pairs"], j["pairs"]);
}

TEST(Cli, CsvAndOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "curvedetect_cli_test.csv";
  const auto r = run({"scan", "--genus", "2", "--seed", "3", "--samples", "5", "--format", "csv", "--output", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  int rows = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) continue;
    if (!header) {
      EXPECT_EQ(line.rfind("index,c1,c2", 0), 0u);
      header = true;
      continue;
    }
    ++rows;
  }
  EXPECT_EQ(rows, 5);
  std::filesystem::remove(path);
}

TEST(Cli, Foxcheck) {
  auto r = run({"foxcheck", "--genus", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json_of(r);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_FALSE(j["sep1"]["is_identity"].get<bool>());
  EXPECT_TRUE(j["suzuki"]["skipped"].get<bool>());
  r = run({"foxcheck", "--genus", "2", "--suzuki-budget", "3", "--samples", "5", "--torelli-pairs", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_of(r)["suzuki"]["pairs_examined"], 3);
}

TEST(Cli, TableCommandMatchesDataDirectory) {
  for (const char* g : {"1", "2", "3", "4"}) {
    const auto r = run({"table", "--genus", g});
    ASSERT_EQ(r.code, 0);
    std::ifstream in(std::string(CURVEDETECT_DATA_DIR) + "/genus" + g + ".table");
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(r.out, buf.str());
  }
}
