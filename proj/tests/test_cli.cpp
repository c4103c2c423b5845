#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "specdet/canonical.hpp"
#include "specdet/families.hpp"
#include "specdet/graph_io.hpp"

using namespace specdet;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

class Files : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() / ("specdet-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& content) {
    std::ofstream(dir / name) << content;
    return (dir / name).string();
  }
};

}  // namespace

TEST(Cli, TuranGraph6Line) {
  auto r = run({"gen", "--family", "turan", "--n", "17", "--k", "7", "--out", "g6"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u);
  EXPECT_EQ(parse_graph6(ls[0]), generate(family::Turan{17, 7}));
}

TEST(Cli, GenEnumeratesAndFilters) {
  auto r = run({"gen", "--n", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 34u);
  auto reg = run({"gen", "--n", "10", "--regular", "4", "--connected"});
  ASSERT_EQ(reg.code, 0) << reg.err;
  EXPECT_EQ(lines(reg.out).size(), 59u);
}

TEST(Cli, GenJsonAndDot) {
  auto j = run({"gen", "--family", "cycle", "--n", "4", "--out", "json"});
  ASSERT_EQ(j.code, 0);
  auto doc = nlohmann::json::parse(lines(j.out)[0]);
  EXPECT_EQ(doc["n"], 4);
  EXPECT_EQ(doc["edges"].size(), 4u);
  auto d = run({"gen", "--family", "petersen", "--out", "dot"});
  ASSERT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("--"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"gen", "--family", "bogus"}).code, 1);
  EXPECT_EQ(run({"gen", "--family", "turan", "--n", "3", "--k", "5"}).code, 1);
  EXPECT_EQ(run({"gen", "--n", "10"}).code, 1);
  EXPECT_EQ(run({"census", "--n", "10"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"spectrum", "/nonexistent/file.g6"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  auto r = run({"gen", "--family", "bogus"});
  EXPECT_EQ(lines(r.err).size(), 1u);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(Files, MalformedGraph6IsAnInputError) {
  auto f = write("bad.g6", "D?x\n");
  auto r = run({"spectrum", f});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(lines(r.err).size(), 1u);
}

TEST_F(Files, CospectralVerdicts) {
  auto s5 = write("s5.g6", "D?{\n");
  auto c4k1 = write("c4k1.g6", emit_graph6(disjoint_union(generate(family::Cycle{4}), Graph(1))) + "\n");
  auto a = run({"cospectral", "--kinds", "A", s5, c4k1});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, "COSPECTRAL\n");
  auto b = run({"cospectral", "--kinds", "A,L,Q,NL", s5, c4k1});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(b.out, "DIFFER kind=L\n");
}

TEST_F(Files, DsListsTheMate) {
  auto s5 = write("s5.g6", "D?{\n");
  auto r = run({"ds", "--kinds", "A", "--graph", s5});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_FALSE(doc["ds"].get<bool>());
  ASSERT_EQ(doc["mates"].size(), 1u);
  const Graph mate = parse_graph6(doc["mates"][0].get<std::string>());
  EXPECT_TRUE(are_isomorphic(mate, disjoint_union(generate(family::Cycle{4}), Graph(1))));
}

TEST_F(Files, SpectrumOutput) {
  auto s5 = write("s5.g6", "D?{\n");
  auto r = run({"spectrum", "--kinds", "A", s5});
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(lines(r.out)[0]);
  EXPECT_EQ(doc["charpolys"][0]["coeffs"], nlohmann::json::parse(R"(["1","0","-4","0","0","0"])"));
}

TEST(Cli, SpectrumClosedFormForFamilies) {
  auto r = run({"spectrum", "--family", "turan", "--n", "17", "--k", "7", "--kinds", "A"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(lines(r.out)[0]);
  EXPECT_TRUE(doc.contains("closed"));
}

TEST(Cli, SrgFromParameters) {
  auto r = run({"srg", "--params", "10,3,0,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["params"]["n"], 10);
  auto bad = run({"srg", "--params", "10,3,1,1"});
  ASSERT_EQ(bad.code, 0);
  EXPECT_FALSE(nlohmann::json::parse(bad.out)["feasible"].get<bool>());
  EXPECT_EQ(run({"srg", "--params", "10,3"}).code, 1);
}

TEST(Cli, CensusRow) {
  auto r = run({"census", "--n", "5", "--kinds", "A", "--jobs", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(lines(r.out)[0]);
  EXPECT_EQ(doc["total"], 34);
  EXPECT_EQ(doc["nicsClasses"], nlohmann::json::parse(R"([["DBW","D?{"]])"));
}

TEST_F(Files, ConstructAndCertify) {
  auto seeds = write("seeds.g6", "IILd[rCcW\nIJLDeMKbG\n");
  auto c = run({"certify", "--recipe", "ns-join", seeds});
  ASSERT_EQ(c.code, 0) << c.err;
  auto doc = nlohmann::json::parse(lines(c.out)[0]);
  EXPECT_EQ(doc["kinds"].size(), 4u);
  auto k2 = write("k2.g6", emit_graph6(generate(family::Complete{2})) + "\n");
  auto s = run({"construct", "--op", "subdivision", k2});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_TRUE(are_isomorphic(parse_graph6(lines(s.out)[0]), generate(family::Path{3})));
  auto bad = write("c6.g6", emit_graph6(generate(family::Cycle{6})) + "\n");
  EXPECT_EQ(run({"certify", "--recipe", "ns-join", bad, bad}).code, 1);
}

TEST_F(Files, SeidelSearchIsDeterministic) {
  auto l44 = write("l44.g6", emit_graph6(line_graph(generate(family::CompleteBipartite{4, 4}))) + "\n");
  std::vector<std::string> args{"construct", "--op", "seidel", "--max-size", "4", "--independent", "--seed", "7", l44};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(are_isomorphic(parse_graph6(lines(a.out)[0]), line_graph(generate(family::CompleteBipartite{4, 4}))));
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gen", "--n", "6", "--jobs", "3"},
           {"census", "--n", "6", "--kinds", "A,L", "--jobs", "3"},
           {"invariants", "--family", "petersen"},
       }) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}
