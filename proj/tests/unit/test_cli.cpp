#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "linelab/families.hpp"
#include "linelab/h3_format.hpp"

namespace fs = std::filesystem;
using namespace linelab;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("linelab_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliRun run(const std::string& args) const {
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = std::string("\"") + LINELAB_CLI + "\" " + args + " 2>\"" + err.string() + "\"";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = read_text_file(err);
    return r;
  }

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  std::string path(const std::string& name) const { return "\"" + (dir_ / name).string() + "\""; }

  fs::path dir_;
};

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

TEST_F(CliTest, LinesOnF0) {
  write("f0.h3", to_h3(make_F0()));
  const CliRun r = run("lines " + path("f0.h3") + " --manifest " + path("m.txt"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("lines: 10\nDBE: no\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, LinesOnNearPencilAndComplete) {
  write("np.h3", to_h3(make_near_pencil(5)));
  write("k4.h3", to_h3(Hypergraph::complete(4)));
  EXPECT_NE(run("lines " + path("np.h3")).out.find("lines: 5\nDBE: yes\n"), std::string::npos);
  const CliRun k4 = run("lines " + path("k4.h3"));
  EXPECT_EQ(k4.out, "{0,1,2,3}\nlines: 1\nDBE: yes\n");
}

TEST_F(CliTest, GenRoundTrips) {
  const CliRun r = run("gen F2 -o " + path("f2.h3"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_h3_file(dir_ / "f2.h3"), make_F2());
  EXPECT_EQ(parse_h3(run("gen layered --sizes 2,2").out), make_layered(std::vector<int>{2, 2}));
  EXPECT_EQ(parse_h3(run("gen near-pencil --n 6").out), make_near_pencil(6));
  EXPECT_EQ(run("gen nonsense").code, 2);
}

TEST_F(CliTest, ParseErrorExitsTwoWithPosition) {
  write("bad.h3", "n 4\n0 1 9\n");
  const CliRun r = run("lines " + path("bad.h3"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bad.h3:2:5:"), std::string::npos) << r.err;
}

TEST_F(CliTest, UsageErrorExitsTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("lines").code, 2);
  EXPECT_EQ(run("lines " + path("missing.h3")).code, 2);
}

TEST_F(CliTest, EnumListsOneFormPerClass) {
  const CliRun r = run("enum --n 5");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(count_lines(r.out), 34);
}

TEST_F(CliTest, EnumShardsMerge) {
  for (int s = 0; s < 2; ++s)
    EXPECT_EQ(run("enum --n 5 --shards 2 --shard-index " + std::to_string(s) + " --out " + path("o")).code, 0);
  const CliRun merged = run("enum --merge " + path("o/forms-n5-shard0of2.txt") + " " + path("o/forms-n5-shard1of2.txt"));
  EXPECT_EQ(merged.code, 0) << merged.err;
  EXPECT_EQ(merged.out, run("enum --n 5").out);
}

TEST_F(CliTest, PseudoAndMetric) {
  write("fano.h3", to_h3(make_fano()));
  write("f1.h3", to_h3(make_F1()));
  const CliRun p = run("pseudo " + path("fano.h3"));
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out.rfind("PSEUDOMETRIC\n", 0), 0u);
  const CliRun q = run("pseudo " + path("f1.h3"));
  EXPECT_EQ(q.out.rfind("NOT-PSEUDOMETRIC\n", 0), 0u);
  const CliRun m = run("metric " + path("f1.h3"));
  EXPECT_NE(m.out.find("NOT-METRIC\nstage: no-pseudometric-B\n"), std::string::npos) << m.out;
  write("one.h3", "n 3\n0 1 2\n");
  const CliRun ok = run("metric " + path("one.h3"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.rfind("METRIC\n", 0), 0u);
}

TEST_F(CliTest, MetricTableCheck) {
  write("one.h3", "n 3\n0 1 2\n");
  write("line.csv", ",a,b,c\na,0,1,2\nb,1,0,1\nc,2,1,0\n");
  write("flat.csv", ",a,b,c\na,0,1,1\nb,1,0,1\nc,1,1,0\n");
  const CliRun good = run("metric " + path("one.h3") + " --table " + path("line.csv"));
  EXPECT_EQ(good.code, 0) << good.err;
  EXPECT_NE(good.out.find("TABLE-REALIZES"), std::string::npos);
  const CliRun bad = run("metric " + path("one.h3") + " --table " + path("flat.csv"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("TABLE-MISMATCH"), std::string::npos);
}

TEST_F(CliTest, VerifyAndQuestionReports) {
  const CliRun v = run("verify T5 --n 5 --out " + path("rep"));
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_NE(v.out.find("verdict=holds-at-this-n"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir_ / "rep" / "manifest.txt"));
  const CliRun q = run("question Q2 --n 5");
  EXPECT_EQ(q.code, 0) << q.err;
  EXPECT_NE(q.out.find("verdict=no-counterexample-at-this-n"), std::string::npos);
  EXPECT_EQ(run("verify T3 --n 5").code, 2);
  EXPECT_EQ(run("question Q1 --n 7").code, 2);
}

TEST_F(CliTest, ManifestContents) {
  write("k4.h3", to_h3(Hypergraph::complete(4)));
  const CliRun r = run("lines " + path("k4.h3") + " --manifest " + path("m.txt"));
  EXPECT_EQ(r.code, 0);
  const std::string m = read_text_file(dir_ / "m.txt");
  EXPECT_NE(m.find("command="), std::string::npos);
  EXPECT_NE(m.find("version="), std::string::npos);
  EXPECT_NE(m.find("fnv1a:"), std::string::npos);
  EXPECT_NE(m.find("started="), std::string::npos);
  EXPECT_NE(m.find("finished="), std::string::npos);
  EXPECT_NE(m.find("exit_code=0"), std::string::npos);
  const CliRun again = run("lines " + path("k4.h3") + " --manifest " + path("m2.txt"));
  auto results = [](const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
      if (line.rfind("result.", 0) == 0) out += line + "\n";
    return out;
  };
  EXPECT_FALSE(results(m).empty());
  EXPECT_EQ(results(m), results(read_text_file(dir_ / "m2.txt")));
}

TEST_F(CliTest, AcceptanceCommandOnly) {
  const CliRun r = run("verify-paper --only thm1");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(count_lines(r.out), 1);
  EXPECT_EQ(r.out.rfind("PASS [6] thm1:", 0), 0u) << r.out;
}

TEST_F(CliTest, AcceptanceCommandUnknownCheck) { EXPECT_EQ(run("verify-paper --only nope").code, 2); }

TEST_F(CliTest, AcceptanceCommandDetectsCorruptedF2) {
  ASSERT_EQ(run("gen fixtures -o " + path("fx")).code, 0);
  // Flip one triple: drop the first edge line after the header.
  const fs::path f2 = dir_ / "fx" / "F2.h3";
  std::istringstream in(read_text_file(f2));
  std::string line, text;
  bool dropped = false;
  while (std::getline(in, line)) {
    if (!dropped && !line.empty() && line[0] != '#' && line[0] != 'n') {
      dropped = true;
      continue;
    }
    text += line + "\n";
  }
  ASSERT_TRUE(dropped);
  std::ofstream(f2) << text;
  const CliRun r = run("verify-paper --fixtures " + path("fx") + " --only count113,f23");
  EXPECT_NE(r.code, 0);
  EXPECT_TRUE(r.err.find("(count113)") != std::string::npos || r.err.find("(f23)") != std::string::npos) << r.err;
}

TEST_F(CliTest, WrittenFixturesMatchBuiltins) {
  ASSERT_EQ(run("gen fixtures -o " + path("fx")).code, 0);
  EXPECT_EQ(read_h3_file(dir_ / "fx" / "F0.h3"), make_F0());
  EXPECT_EQ(read_h3_file(dir_ / "fx" / "F3.h3"), make_F3());
  const CliRun r = run("verify-paper --fixtures " + path("fx") + " --only f1,f23");
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}
