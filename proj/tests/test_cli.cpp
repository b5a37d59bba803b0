#include <gtest/gtest.h>

#include <json.hpp>

#include "common.hpp"
#include "singknot/cli.hpp"

using namespace singknot;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "singknot");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string file(const std::string& name) { return testutil::corpus_path(name); }

std::string temp_file(const std::string& text) {
  static int counter = 0;
  auto path = std::filesystem::temp_directory_path() / ("singknot_cli_" + std::to_string(counter++) + ".knot");
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, ComputeIndexedJones) {
  auto r = run({"compute", file("singular_trefoil"), "--invariant", "jones", "--mode", "indexed"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, testutil::expected_jones_T().to_string() + "\n");
}

TEST(Cli, ComputeAlexanderAndSubstitute) {
  auto r = run({"compute", file("singular_trefoil"), "--invariant", "alexander", "--mode", "indexed"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, testutil::expected_alexander(1).to_string() + "\n");
  r = run({"compute", file("singular_trefoil"), "--invariant", "alexander", "--mode", "indexed", "--at", "B1=0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, testutil::A(-2, 2).to_string() + "\n");
  r = run({"compute", file("singular_trefoil"), "--invariant", "alexander", "--mode", "indexed", "--identify-B"});
  EXPECT_EQ(r.out, identify_b_variables(testutil::expected_alexander(1)).to_string() + "\n");
}

TEST(Cli, Invertible) {
  auto r = run({"invertible", file("singular_trefoil")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("jones: NotInvertible"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("alexander: NotInvertible"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("B1->B2 B2->B1"), std::string::npos) << r.out;
  r = run({"invertible", file("trefoil_long")});
  EXPECT_EQ(r.out, "jones: Inconclusive\nalexander: Inconclusive\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"compute", file("trefoil_closed"), "--invariant", "alexander"}).code, 3);
  EXPECT_EQ(run({"invertible", file("trefoil_closed")}).code, 3);
  EXPECT_EQ(run({"compute", file("singular_trefoil"), "--mode", "indexed", "--at", "B1=0"}).code, 3);
  EXPECT_EQ(run({"compute", temp_file("X+ 1 2 3\n")}).code, 2);
  EXPECT_EQ(run({"compute", temp_file("X+ 2 1 1 3\nX+ 4 3 3 2\nX+ 2 4 4 3\n")}).code, 2);
  EXPECT_EQ(run({"compute", "/nonexistent/file.knot"}).code, 2);
  EXPECT_EQ(run({"compute", file("trefoil_long"), "--invariant", "homfly"}).code, 2);
  EXPECT_EQ(run({"compute", file("trefoil_long"), "--at", "C=2"}).code, 2);
  EXPECT_EQ(run({"compute", file("trefoil_long"), "--at", "B3=1"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, MalformedInputNamesLine) {
  auto r = run({"info", temp_file("# x\nLONG 1 1\nbogus\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("MalformedLine"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("3"), std::string::npos) << r.err;
}

TEST(Cli, JsonIsIndependentOfJobs) {
  auto one = run({"compute", file("singular_torus_two_dp_long"), "--mode", "indexed", "--format", "json", "--jobs", "1"});
  auto many = run({"compute", file("singular_torus_two_dp_long"), "--mode", "indexed", "--format", "json", "--jobs", "4"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, many.out);
  auto j = nlohmann::json::parse(one.out);
  auto d = testutil::load("singular_torus_two_dp_long");
  EXPECT_EQ(j["result"]["text"], jones_vs(d, {Mode::IndexedB, 1, DoublePointWeightTable::standard()}).to_string());
  EXPECT_EQ(j["states"], std::uint64_t{1} << d.vertices().size());
}

TEST(Cli, Fuzz) {
  auto r = run({"fuzz", file("singular_trefoil"), "--steps", "8", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("ok: 8 moves"), std::string::npos) << r.out;
  EXPECT_EQ(run({"fuzz", file("singular_trefoil"), "--steps", "8", "--seed", "3"}).out, r.out);
  bool violation = false;
  for (int seed = 1; seed <= 20 && !violation; ++seed)
    violation = run({"fuzz", file("singular_trefoil"), "--steps", "8", "--seed", std::to_string(seed), "--corrupt-table"}).code == 4;
  EXPECT_TRUE(violation);
  auto j = nlohmann::json::parse(run({"fuzz", file("trefoil_long"), "--steps", "4", "--format", "json"}).out);
  EXPECT_EQ(j["steps"].size(), 4U);
  EXPECT_TRUE(j["first_failure"].is_null());
}

TEST(Cli, InfoCanonInverse) {
  auto j = nlohmann::json::parse(run({"info", file("singular_trefoil"), "--format", "json"}).out);
  EXPECT_EQ(j["vertices"], 4);
  EXPECT_EQ(j["double_points"], 2);
  EXPECT_EQ(j["faces"], 6);
  EXPECT_EQ(j["double_point_order"].size(), 2U);

  auto canon = run({"canon", file("five_two_long")});
  EXPECT_EQ(canon.code, 0);
  EXPECT_EQ(parse_diagram(canon.out).serialize(), canon.out);

  auto inv = run({"inverse", file("singular_trefoil")});
  EXPECT_EQ(inv.code, 0);
  EXPECT_TRUE(parse_diagram(inv.out).isomorphic(testutil::load("singular_trefoil_inverse")));
  EXPECT_EQ(run({"inverse", file("trefoil_closed")}).code, 3);
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("compute"), std::string::npos);
}
