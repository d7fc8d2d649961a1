#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gotzmann/cli.hpp"
#include "gotzmann/io.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = gotzmann::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

void check_golden(const std::string& name) {
  const std::string base = std::string(GOLDEN_DIR) + "/" + name;
  const auto o = run(lines(base + ".args"));
  EXPECT_EQ(o.out, slurp(base + ".json"));
  EXPECT_EQ(std::to_string(o.code) + "\n", slurp(base + ".code"));
  // re-serializing the emitted document is idempotent
  const auto doc = gotzmann::Json::parse(o.out);
  EXPECT_EQ(doc.dump(2) + "\n", o.out);
  EXPECT_EQ(gotzmann::Json::parse(doc.dump()), doc);
}

}  // namespace

TEST(CliGolden, GotzmannNumber) { check_golden("gotzmann_number"); }
TEST(CliGolden, GotzmannRepNonexistent) { check_golden("gotzmann_rep_nonexistent"); }
TEST(CliGolden, ChernFromHp) { check_golden("chern_from_hp"); }

TEST(Cli, TextMode) {
  EXPECT_EQ(run({"gotzmann", "number", "2,3"}).out, "5\n");
  const auto rep = run({"gotzmann", "rep", "0,1"});
  EXPECT_EQ(rep.code, 1);
  EXPECT_NE(rep.err.find("NoGotzmannRepresentation"), std::string::npos);
  EXPECT_EQ(run({"chern", "from-hp", "4,11/3,4,1/3"}).out, "c1=4 c2=16 c3=64 bound_ok=true chi12_ok=false\n");
  EXPECT_EQ(run({"macaulay", "transform", "11", "3"}).out, "16\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"macaulay", "rep", "x", "3"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, LibraryErrorsExitOne) {
  EXPECT_EQ(run({"gotzmann", "rep", "0,0,1/2"}).code, 1);
  EXPECT_EQ(run({"chern", "from-hp", "1,1"}).code, 1);
  const auto bad = run({"--json", "hilbert", "/nonexistent/module.json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(gotzmann::Json::parse(bad.out)["error"]["kind"], "ParseError");
}

TEST(Cli, EveryStructuredDocumentEchoesInput) {
  const auto path = write_temp("cli_module.json",
                               R"({"vars":3,"components":[{"twist":-1,"gens":["x0"]},{"twist":0,"gens":["x0^2","x0 x1","x1^2"]}]})");
  const std::vector<std::vector<std::string>> cmds = {
      {"macaulay", "rep", "11", "3"},
      {"macaulay", "transform", "11", "3"},
      {"gotzmann", "rep", "2,3"},
      {"gotzmann", "hf", "2,3", "--upto", "6"},
      {"hilbert", path, "--polynomial"},
      {"hilbert", path, "--function", "0", "5"},
      {"lexify", path},
      {"regcheck", path},
      {"quot", "p1", "2", "0"},
      {"quot", "embed", "2,2", "1", "3"},
      {"quot", "lemma", "2", "3"},
      {"chern", "to-hp", "4", "16", "64"},
      {"chern", "bounds", "4"},
  };
  for (auto c : cmds) {
    c.insert(c.begin(), "--json");
    const auto o = run(c);
    EXPECT_EQ(o.code, 0) << c[1] << " " << o.err;
    const auto doc = gotzmann::Json::parse(o.out);
    EXPECT_TRUE(doc.contains("input")) << o.out;
    EXPECT_TRUE(doc.contains("result")) << o.out;
    EXPECT_EQ(gotzmann::Json::parse(doc.dump()), doc);
  }
}

TEST(Cli, Values) {
  const auto path = write_temp("cli_line.json", R"({"vars":3,"components":[{"twist":0,"gens":["x0"]}]})");
  EXPECT_EQ(run({"hilbert", path, "--polynomial"}).out, "d + 1\n");
  EXPECT_EQ(run({"gotzmann", "hf", "2,3", "--upto", "5"}).out, "1 3 6 10 14 17\n");
  const auto embed = gotzmann::Json::parse(run({"--json", "quot", "embed", "2,2", "1", "3", "--degree", "0"}).out);
  EXPECT_EQ(embed["result"]["grassmannian"]["ambient_dim"], 3);
  EXPECT_EQ(embed["result"]["next"]["codim"], 4);
  const auto to_hp = gotzmann::Json::parse(run({"--json", "chern", "to-hp", "4", "16", "64"}).out);
  EXPECT_EQ(to_hp["result"]["hilbert_polynomial"]["coeffs"], "4,11/3,4,1/3");
}
