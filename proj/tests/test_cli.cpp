#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cap_cli.hpp"
#include "test_support.hpp"

namespace cap {
namespace {

using testing::fixture;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

cli::Json report(const Run& r) {
  auto j = cli::Json::parse(r.out);
  j.erase("timing");
  return j;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("cap_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(CliComponents, SixVertexWeak) {
  auto r = run({"components", fixture("gprime_weak.cag"), "--variant", "weak"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = report(r);
  EXPECT_EQ(j["components"], cli::Json::parse("[[0,1,2],[1,2,3,4],[4,5]]"));
  EXPECT_EQ(j["solver"], "locally-chordal");
  EXPECT_EQ(j["budget"], nullptr);
  EXPECT_GE(cli::Json::parse(r.out)["timing"]["total_ms"].get<double>(), 0.0);
}

TEST(CliComponents, DecisionExitCodes) {
  EXPECT_EQ(run({"components", fixture("gadget_p4.cag"), "--variant", "weak-lists", "--at-least", "3"}).code, 1);
  auto yes = run({"components", fixture("gadget_p4.cag"), "--variant", "weak-lists", "--at-least", "2"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(report(yes)["decision"], cli::Json::parse(R"({"at_least":2,"answer":true})"));
  EXPECT_EQ(run({"components", fixture("empty.cag"), "--variant", "edge", "--at-least", "1"}).code, 1);
  EXPECT_EQ(run({"components", fixture("empty.cag"), "--variant", "edge", "--at-least", "0"}).code, 2);
}

TEST(CliComponents, InvalidInput) {
  EXPECT_EQ(run({"components", fixture("triangle.cag"), "--variant", "weak"}).code, 2);
  EXPECT_EQ(run({"components", fixture("bicolor_path.cag"), "--variant", "edge"}).code, 2);
  EXPECT_EQ(run({"components", fixture("bicolor_path.cag"), "--variant", "medium"}).code, 2);
  EXPECT_EQ(run({"components", fixture("missing.cag"), "--variant", "weak"}).code, 2);
  EXPECT_EQ(run({"components", fixture("bicolor_path.cag")}).code, 2);
  EXPECT_EQ(run({"components", fixture("gadget_p4.cag"), "--variant", "weak"}).code, 2);

  auto bad = temp_file("bad.cag", "cag vertices 2 1\nv 0 0\nv 1 3\n");
  auto r = run({"components", bad, "--variant", "weak"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 3, column 5"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(CliComponents, BudgetExhaustion) {
  auto r = run({"components", fixture("gadget_p4.cag"), "--variant", "weak-lists", "--budget", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(CliComponents, ModeOverrideAndNames) {
  auto r = run({"components", fixture("gadget_p4.cag"), "--variant", "weak", "--mode", "resilient"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["input"]["mode"], "resilient");

  auto named = run({"components", fixture("bicolor_path.cag"), "--variant", "weak", "--names", fixture("names5.txt")});
  ASSERT_EQ(named.code, 0) << named.err;
  EXPECT_EQ(report(named)["component_labels"], cli::Json::parse(R"([["v1","v2"],["v2","v3","v4","v5"]])"));
}

TEST(CliComponents, ExpectedReports) {
  int compared = 0;
  for (const auto& entry : std::filesystem::directory_iterator(CAP_EXPECTED_DIR)) {
    const auto name = entry.path().filename().string();  // <fixture>.<variant>.json
    const auto dot = name.find('.');
    const auto stem = name.substr(0, dot);
    const auto variant = name.substr(dot + 1, name.rfind('.') - dot - 1);
    auto r = run({"components", fixture(stem + ".cag"), "--variant", variant});
    ASSERT_EQ(r.code, 0) << name << ": " << r.err;
    std::ifstream in(entry.path());
    EXPECT_EQ(report(r), cli::Json::parse(in)) << name;
    ++compared;
  }
  EXPECT_GE(compared, 11);
}

TEST(CliComponents, ThreadsDoNotChangeReport) {
  auto path = temp_file("er.cag", run({"gen", "er", "--n", "300", "--p", "0.02", "--k", "3", "--seed", "5"}).out);
  for (auto v : {"weak", "strong"})
    EXPECT_EQ(report(run({"components", path, "--variant", v})),
              report(run({"components", path, "--variant", v, "--threads", "3"})));
}

TEST(CliPairwise, EdgeListsWitnesses) {
  auto r = run({"pairwise", fixture("edges_lists.cag"), "1", "3", "--variant", "edge", "--names", fixture("names4.txt"),
                "--color-names", "red,blue,green"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "v2 - v4 (edge): color-avoiding connected\n"
            "  red: v2-v4\n"
            "  blue: v2-v3-v4\n"
            "  green: v2-v1-v4\n");
}

TEST(CliPairwise, WeakFailureNamesColor) {
  auto r = run({"pairwise", fixture("bicolor_path.cag"), "0", "2", "--variant", "weak", "--color-names", "red,blue"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fails: blue"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("red: endpoint removed"), std::string::npos) << r.out;
}

TEST(CliPairwise, Json) {
  auto r = run({"pairwise", fixture("bicolor_path.cag"), "2", "4", "--variant", "weak", "--json"});
  ASSERT_EQ(r.code, 0);
  auto j = cli::Json::parse(r.out);
  EXPECT_TRUE(j["related"].get<bool>());
  EXPECT_EQ(j["witnesses"][0]["kind"], "endpoint-removed");
  EXPECT_EQ(j["witnesses"][1]["path"], cli::Json::parse("[2,3,4]"));
  EXPECT_EQ(j["failing_color"], nullptr);
}

TEST(CliPairwise, InvalidPairs) {
  EXPECT_EQ(run({"pairwise", fixture("bicolor_path.cag"), "1", "1", "--variant", "weak"}).code, 2);
  EXPECT_EQ(run({"pairwise", fixture("bicolor_path.cag"), "0", "5", "--variant", "weak"}).code, 2);
  EXPECT_EQ(run({"pairwise", fixture("bicolor_path.cag"), "-1", "2", "--variant", "weak"}).code, 2);
}

TEST(CliGen, ErIsDeterministicAndReparses) {
  const std::vector<std::string> args{"gen", "er", "--n", "20", "--p", "0.15", "--k", "3", "--target", "vertices", "--seed", "1"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto g = parse_graph(a.out);
  EXPECT_EQ(g.vertex_count(), 20u);
  EXPECT_EQ(g.palette_size(), 3u);
  EXPECT_EQ(serialize_graph(g), a.out);
  EXPECT_EQ(serialize_graph(generate_er(20, 0.15, 3, ColoringTarget::vertices, 1)), a.out);
}

TEST(CliGen, InvalidParameters) {
  EXPECT_EQ(run({"gen", "er", "--n", "5", "--p", "1.5", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"gen", "er", "--n", "5", "--p", "0.5", "--k", "0"}).code, 2);
  EXPECT_EQ(run({"gen", "er", "--n", "5", "--p", "0.5", "--k", "2", "--target", "faces"}).code, 2);
  EXPECT_EQ(run({"gen", "er", "--p", "0.5"}).code, 2);
  EXPECT_EQ(run({"gen"}).code, 2);
}

TEST(CliGen, GadgetFromEdgeList) {
  auto r = run({"gen", "gadget", "--from", fixture("path4.edgelist")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_graph(r.out), testing::load_fixture("gadget_p4.cag"));

  auto reduced = parse_graph(run({"gen", "gadget-reduced", "--from", fixture("path4.edgelist")}).out);
  EXPECT_EQ(reduced.palette_size(), 3u);

  auto padded = parse_graph(run({"gen", "gadget", "--from", fixture("path4.edgelist"), "--n", "6"}).out);
  EXPECT_EQ(padded.vertex_count(), 6u);
  EXPECT_EQ(run({"gen", "gadget", "--from", fixture("path4.edgelist"), "--n", "2"}).code, 2);
}

TEST(CliCheck, LocalChordal) {
  for (auto f : {"bicolor_path.cag", "gprime_weak.cag"}) {
    auto r = run({"check", fixture(f), "--check", "local-chordal"});
    EXPECT_EQ(r.code, 0) << f;
    EXPECT_EQ(r.out, "locally chordal\n");
  }
  EXPECT_EQ(run({"check", fixture("triangle.cag"), "--check", "local-chordal"}).code, 2);
}

TEST(CliCheck, RawWheelGivesCertificate) {
  auto r = run({"check", fixture("w5.edgelist"), "--check", "local-chordal", "--raw", "--json"});
  EXPECT_EQ(r.code, 1);
  auto j = cli::Json::parse(r.out);
  EXPECT_FALSE(j["ok"].get<bool>());
  EXPECT_EQ(j["wheel"]["center"], 0);
  auto rim = j["wheel"]["cycle"].get<std::vector<Vertex>>();
  std::sort(rim.begin(), rim.end());
  EXPECT_EQ(rim, (std::vector<Vertex>{1, 2, 3, 4}));
}

TEST(CliCheck, OracleAgreesOnAllFixtures) {
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(CAP_FIXTURE_DIR)) {
    if (entry.path().extension() != ".cag") continue;
    auto r = run({"check", entry.path().string(), "--check", "oracle-agree"});
    EXPECT_EQ(r.code, 0) << entry.path() << r.out << r.err;
    ++checked;
  }
  EXPECT_GE(checked, 8);
}

TEST(CliCheck, OracleRejectsLargeInput) {
  auto path = temp_file("big.cag", run({"gen", "er", "--n", "16", "--p", "0.2", "--k", "2"}).out);
  EXPECT_EQ(run({"check", path, "--check", "oracle-agree"}).code, 2);
  EXPECT_EQ(run({"check", path, "--check", "planarity"}).code, 2);
}

TEST(CliExportDot, Triangle) {
  auto r = run({"export-dot", fixture("triangle.cag")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph cag {", 0), 0u);
  EXPECT_NE(r.out.find("0 -- 1"), std::string::npos);
}

TEST(CliHelp, ExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("components"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliDeterminism, RepeatedRunsAreIdentical) {
  auto gen = run({"gen", "er", "--n", "40", "--p", "0.1", "--k", "3", "--seed", "8"});
  auto path = temp_file("det.cag", gen.out);
  const std::vector<std::vector<std::string>> commands{
      {"components", path, "--variant", "weak"},
      {"components", path, "--variant", "strong"},
      {"components", path, "--variant", "weak-lists"},
      {"pairwise", path, "0", "1", "--variant", "weak", "--json"},
      {"check", fixture("gprime_weak.cag"), "--check", "oracle-agree", "--json"},
      {"export-dot", path},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    ASSERT_EQ(a.code, b.code);
    if (c[0] == "components")
      EXPECT_EQ(report(a).dump(), report(b).dump());
    else
      EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace cap
