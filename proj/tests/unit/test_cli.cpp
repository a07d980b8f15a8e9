#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "metriclab/graph_io.hpp"

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(METRICLAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, GenerateHairySpider) {
  auto r = run("gen hs --d 6 --k 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(metriclab::parse_graph6(r.out).order(), 16);
  auto j = nlohmann::json::parse(run("gen hs --d 6 --k 2 --format json").out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["predicted_metric_dimension"], 2);
}

TEST(Cli, RoundTripGeneratorThroughSolver) {
  for (const char* gen : {"hs --d 6 --k 2", "hs --d 7 --k 3 --a 1", "o --d 6 --k 3", "L --r 4", "grid --t 3"}) {
    auto spec = nlohmann::json::parse(run(std::string("gen ") + gen + " --format json").out);
    auto r = run("solve md --graph6 '" + spec["graph6"].get<std::string>() + "'");
    ASSERT_EQ(r.status, 0) << gen;
    auto j = nlohmann::json::parse(r.out);
    if (spec.contains("predicted_metric_dimension")) EXPECT_EQ(j["dimension"], spec["predicted_metric_dimension"]) << gen;
    EXPECT_EQ(j["verified"], true);
  }
}

TEST(Cli, SolveFromFile) {
  auto path = temp_file("p4.g6", metriclab::encode_graph6(metriclab::path_graph(4)) + "\n");
  auto j = nlohmann::json::parse(run("solve md --in " + path).out);
  EXPECT_EQ(j["dimension"], 1);
  auto check = nlohmann::json::parse(run("solve resolving-check --set 1 --in " + path).out);
  EXPECT_EQ(check["resolving"], false);
  auto edges = temp_file("c4.txt", "0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(nlohmann::json::parse(run("solve tree-md --in " + temp_file("s3.txt", "0 1\n0 2\n0 3\n")).out)["dimension"], 2);
  EXPECT_EQ(run("solve tree-md --in " + edges).status, 2);
}

TEST(Cli, HypergraphVerbs) {
  auto dhg = run("hyper dhg --graph6 Bg");
  EXPECT_EQ(dhg.status, 0);
  EXPECT_EQ(dhg.out.rfind("p hyper 3 6", 0), 0u);
  auto path = temp_file("p3.hyp", dhg.out);
  EXPECT_EQ(nlohmann::json::parse(run("hyper vc --in " + path).out)["dimension"], 2);
  EXPECT_EQ(nlohmann::json::parse(run("hyper tc --in " + path).out)["size"], 2);
  EXPECT_EQ(run("hyper dual --in " + path).out.rfind("p hyper 6 3", 0), 0u);
  EXPECT_EQ(nlohmann::json::parse(run("hyper prop9 --graph6 Bg").out)["test_cover_size"].get<int>() >= 1, true);
  EXPECT_EQ(nlohmann::json::parse(run("hyper vc2 --graph6 Bg").out)["mode"], "pairs");
}

TEST(Cli, DecompositionVerbs) {
  auto c5 = temp_file("c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  auto tw = run("td tw --in " + c5);
  EXPECT_EQ(tw.status, 0);
  auto td = temp_file("c5.td", tw.out);
  EXPECT_EQ(nlohmann::json::parse(run("td validate --in " + c5 + " --td " + td).out)["valid"], true);
  EXPECT_EQ(nlohmann::json::parse(run("td width --in " + c5 + " --td " + td).out)["width"], 2);
  EXPECT_EQ(run("td reduce --in " + c5 + " --td " + td).status, 0);
  auto bad = temp_file("bad.td", "s td 1 2 5\nb 1 1 2\n");
  auto v = nlohmann::json::parse(run("td validate --in " + c5 + " --td " + bad).out);
  EXPECT_EQ(v["valid"], false);
  EXPECT_EQ(run("td width --in " + c5 + " --td " + bad).status, 2);
  EXPECT_EQ(run("td cliquetree --in " + c5).status, 2);
}

TEST(Cli, Bound) {
  auto j = nlohmann::json::parse(run("bound tree --d 8 --k 3").out);
  EXPECT_EQ(j["value"], "35");
  EXPECT_EQ(run("bound tree --d 8").status, 2);
}

TEST(Cli, VerifyExitCodes) {
  auto pass = run("verify tree_bound --nmax 10 --json -");
  EXPECT_EQ(pass.status, 0);
  EXPECT_EQ(nlohmann::json::parse(pass.out)["verdict"], "pass");
  auto fail = run("verify line_example --nmax 2");
  EXPECT_EQ(fail.status, 1);
  EXPECT_NE(fail.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ReplayFailureFromGraph6) {
  auto report = nlohmann::json::parse(run("verify line_example --nmax 2 --json -").out);
  std::string witness = report["failures"][0]["witness"];
  auto replay = run("verify prop8 --graph6 '" + witness + "' --json -");
  EXPECT_EQ(replay.status, 0);
  EXPECT_EQ(nlohmann::json::parse(replay.out)["instances"], 1);
}

TEST(Cli, UsageAndLimits) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("gen hs --d 6 --k 2 --bogus").status, 2);
  auto r = run("solve md --graph6 'C~x'");
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run("--cap metric_dimension_vertices=10 gen o --d 6 --k 3 | " + std::string(METRICLAB_CLI) +
                " --cap metric_dimension_vertices=10 solve md")
                .status,
            3);
  EXPECT_EQ(run("--cap nonsense=1 gen L --r 2").status, 2);
  auto cfg = temp_file("caps.cfg", "metric_dimension_vertices = 5\n");
  EXPECT_EQ(run("--config " + cfg + " solve md --graph6 'Ch'").status, 0);
  EXPECT_EQ(run("--config " + cfg + " solve md --graph6 'E?Bw'").status, 3);
  EXPECT_EQ(run("--config " + cfg + " --cap metric_dimension_vertices=6 solve md --graph6 'E?Bw'").status, 0);
}
