#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "posr/posr.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("posr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& args, const char* exe = POSR_CLI_PATH) const {
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = "cd '" + dir_.string() + "' && '" + exe + "' " + args + " 2>'" + err.string() + "'";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err)};
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string l; std::getline(ss, l);) out.push_back(l);
  return out;
}

bool has_line(const std::string& s, const std::string& line) {
  for (const auto& l : lines(s))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_F(Cli, ConstructWritesAValidFile) {
  const Result c = run("construct example-2.6:k=2 -o e26.psr");
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_TRUE(posr::isomorphic(posr::read_psr_file(path("e26.psr")), posr::example_2_6(2)));
  const Result v = run("verify e26.psr");
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "valid\n");
  const Result s = run("construct bool:n=1");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out, posr::format_psr(posr::boolean_power(1)));
}

TEST_F(Cli, VerifyReportsViolations) {
  posr::write_text_file(path("bad.psr"),
                        "psr 1\norder 3\nnames 0 c 1\nadd\n0 1 2\n1 1 2\n2 2 2\nmul\n0 0 0\n1 0 1\n0 1 2\n");
  const Result v = run("verify bad.psr");
  EXPECT_EQ(v.code, 1);
  const auto ls = lines(v.out);
  ASSERT_GE(ls.size(), 2u);
  EXPECT_EQ(ls[0], "invalid");
  EXPECT_EQ(ls[1].rfind("violation ", 0), 0u) << ls[1];
  const Result j = run("verify bad.psr --json");
  EXPECT_EQ(j.code, 1);
  const json parsed = json::parse(j.out);
  EXPECT_FALSE(parsed["valid"].get<bool>());
  EXPECT_FALSE(parsed["violations"].empty());
}

TEST_F(Cli, AnalyzeExampleTwoSix) {
  const Result a = run("analyze example-2.6:k=2");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_TRUE(has_line(a.out, "order=5"));
  EXPECT_TRUE(has_line(a.out, "Z={a,b1,b2}")) << a.out;
  EXPECT_TRUE(has_line(a.out, "c2=false counterexample=b1")) << a.out;
  EXPECT_TRUE(has_line(a.out, "c3=true")) << a.out;
  const json j = json::parse(run("--json analyze example-2.6:k=2").out);
  EXPECT_EQ(j["zero_divisors"], json({"a", "b1", "b2"}));
  EXPECT_FALSE(j["c2"]["holds"].get<bool>());
  EXPECT_TRUE(j["c3"]["holds"].get<bool>());
}

TEST_F(Cli, GraphShapesAndDot) {
  const Result g = run("graph example-2.6:k=3 --shape");
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(lines(g.out).size(), 1u);
  EXPECT_EQ(g.out.rfind("star", 0), 0u) << g.out;
  const Result d = run("graph example-3.2:k=2 --dot g.dot");
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_TRUE(has_line(d.out, "single-vertex")) << d.out;
  EXPECT_TRUE(has_line(d.out, "components=1")) << d.out;
  const std::string dot = slurp(path("g.dot"));
  EXPECT_EQ(dot.rfind("graph", 0), 0u) << dot;
  const json j = json::parse(run("graph example-2.6:k=2 --json").out);
  EXPECT_TRUE(j.contains("vertices"));
}

TEST_F(Cli, ProductAndIso) {
  ASSERT_EQ(run("construct chain:k=1 -o c.psr").code, 0);
  const Result p = run("product c.psr bool:n=1 -o p.psr");
  ASSERT_EQ(p.code, 0) << p.err;
  const auto prod = posr::read_psr_file(path("p.psr"));
  EXPECT_TRUE(posr::isomorphic(prod, posr::direct_product(posr::chain_lattice(1), posr::boolean_power(1))));
  const Result same = run("iso p.psr 'product(chain:k=1,bool:n=1)'");
  ASSERT_EQ(same.code, 0) << same.err;
  ASSERT_FALSE(lines(same.out).empty());
  EXPECT_EQ(lines(same.out).front(), "isomorphic");
  EXPECT_EQ(lines(same.out).size(), 1u + prod.order());
}

TEST_F(Cli, IsoOnTheTwoOrderThreeCensusFiles) {
  const Result e = run("enumerate --order 3 --emit-dir out");
  ASSERT_EQ(e.code, 0) << e.err;
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir_ / "out")) files.push_back(entry.path().string());
  ASSERT_EQ(files.size(), 2u);
  const Result r = run("iso '" + files[0] + "' '" + files[1] + "'");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "non-isomorphic\n");
  const Result self = run("iso '" + files[0] + "' '" + files[0] + "' --json");
  EXPECT_EQ(self.code, 0);
  EXPECT_TRUE(json::parse(self.out)["isomorphic"].get<bool>());
}

TEST_F(Cli, EnumerateSummaryAndEmittedNames) {
  const Result e = run("enumerate --order 4 --mode naive --emit-dir out4");
  ASSERT_EQ(e.code, 0) << e.err;
  const auto ls = lines(e.out);
  ASSERT_EQ(ls.size(), 1u);
  const auto fast = posr::enumerate_posemirings(4);
  const std::string prefix =
      "order=4 classes=" + std::to_string(fast.count_up_to_iso) + " labeled=" + std::to_string(fast.count_labeled) + " seconds=";
  EXPECT_EQ(ls[0].rfind(prefix, 0), 0u) << ls[0];
  std::set<std::string> expected, seen;
  for (const auto& f : fast.canonical_forms) expected.insert(posr::form_hash(f) + ".psr");
  for (const auto& entry : fs::directory_iterator(dir_ / "out4")) seen.insert(entry.path().filename().string());
  EXPECT_EQ(seen, expected);
  const json j = json::parse(run("enumerate --order 3 --json").out);
  EXPECT_EQ(j["classes"], 2);
}

TEST_F(Cli, RingSubcommands) {
  const Result ideals = run("ring ideals zn:12");
  ASSERT_EQ(ideals.code, 0) << ideals.err;
  const auto ls = lines(ideals.out);
  ASSERT_EQ(ls.size(), 6u);
  EXPECT_EQ(ls[0], "(0) size=1");
  EXPECT_EQ(ls[1], "(6) size=2");
  EXPECT_EQ(ls[5], "(1) size=12");
  EXPECT_EQ(run("ring ag zn:8 --shape").out, "complete n=2\n");
  EXPECT_EQ(run("ring ag zn:12 --shape").out, "two-star r=1 s=1 (K1+K1+K1+K1)\n");
  EXPECT_EQ(run("ring zdgraph zn:9 --shape").out, "complete n=2\n");
  const Result rad = run("ring radicals zn:12");
  EXPECT_TRUE(has_line(rad.out, "N=(6)")) << rad.out;
  EXPECT_TRUE(has_line(rad.out, "J=(6)")) << rad.out;
  ASSERT_EQ(run("ring semiring zn:6 -o i6.psr").code, 0);
  EXPECT_TRUE(posr::isomorphic(posr::read_psr_file(path("i6.psr")), posr::boolean_power(2)));
  posr::write_text_file(path("z4.ring"), posr::format_ring(posr::make_ring("zn:4")));
  EXPECT_EQ(lines(run("ring ideals z4.ring").out).size(), 3u);
  EXPECT_EQ(run("ring ideals zpx:4:0:0").code, 2);
}

TEST_F(Cli, TheoremsExitCodesAndReports) {
  const Result t = run("theorems --corpus census:4+grid --check T2.2,T2.7");
  EXPECT_EQ(t.code, 0) << t.err;
  const auto ls = lines(t.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0].rfind("T2.2 [posemiring] pass=", 0), 0u);
  EXPECT_EQ(ls[2], "total failures=0");
  const Result j = run("theorems --corpus rings:default --check C4.4 --report json");
  ASSERT_EQ(j.code, 0) << j.err;
  const json parsed = json::parse(j.out);
  EXPECT_EQ(parsed["failures"], 0);
  ASSERT_FALSE(parsed["entries"].empty());
  for (const auto& e : parsed["entries"]) {
    EXPECT_EQ(e["check"], "C4.4");
    EXPECT_TRUE(e.contains("instance") && e.contains("result"));
  }
  EXPECT_EQ(run("theorems --check T9.9").code, 2);
  EXPECT_EQ(run("theorems --corpus bogus").code, 2);
}

TEST_F(Cli, TheoremsOverFiles) {
  ASSERT_EQ(run("enumerate --order 4 --emit-dir c4").code, 0);
  const Result t = run("theorems --corpus files:c4 --check P2.1a");
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(lines(t.out).front(), "P2.1a [posemiring] pass=7 fail=0 not-applicable=0");
}

TEST_F(Cli, JsonIsKeySorted) {
  const std::string out = run("analyze chain:k=1 --json").out;
  std::vector<std::size_t> positions;
  for (const char* key : {"\"c1\"", "\"c2\"", "\"c3\"", "\"idempotents\"", "\"integral\"", "\"maximals\"", "\"minimals\"",
                          "\"nilpotent\"", "\"order\"", "\"primes\"", "\"primitive_idempotents\"", "\"zero_divisors\""})
    positions.push_back(out.find(key));
  EXPECT_TRUE(std::is_sorted(positions.begin(), positions.end())) << out;
  EXPECT_EQ(std::find(positions.begin(), positions.end(), std::string::npos), positions.end());
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("verify x.psr --bogus").code, 2);
  EXPECT_EQ(run("enumerate --order 9").code, 2);
  EXPECT_EQ(run("enumerate --order 4 --mode slow").code, 2);
  EXPECT_EQ(run("--help").code, 0);
  const Result missing = run("verify nope.psr");
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.err, "posr: nope.psr:0: cannot open file\n");
  posr::write_text_file(path("bad.psr"), "psr 1\norder 3\nnames 0 c 1\nadd\n0 1 2\n1 x 2\n");
  const Result bad = run("verify bad.psr");
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("bad.psr:6:"), std::string::npos) << bad.err;
  EXPECT_EQ(run("construct example-9.9").code, 2);
}

TEST_F(Cli, SampleTourRuns) {
  const Result t = run("", POSR_SAMPLE_PATH);
  EXPECT_EQ(t.code, 0) << t.err;
  EXPECT_NE(t.out.find("K1+K1+K1+K1"), std::string::npos) << t.out;
}
