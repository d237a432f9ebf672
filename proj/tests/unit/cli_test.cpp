#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "moonlight/io/result_file.hpp"
#include "moonlight/io/trace_file.hpp"

namespace moonlight::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "moonlight");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / "moonlight_cli_test";
    fs::create_directories(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenerateAndMonitorSensorNetwork) {
  ASSERT_EQ(run({"generate", "sensor", "--nodes", "10", "--steps", "3", "--seed", "4", "--out",
                 path("net.json"), "--script-out", path("sensor.mls")})
                .code,
            kOk);
  const Invocation r = run({"monitor", "--script", path("sensor.mls"), "--formula", "Ppar", "--param", "k=5",
                     "--trace", path("net.json"), "--out", path("r.csv")});
  ASSERT_EQ(r.code, kOk) << r.err;
  const MonitorResult result = io::load_result(path("r.csv"));
  EXPECT_EQ(result.location_count(), 10u);
  EXPECT_EQ(result.grid().size(), 3u);

  const Invocation q = run({"monitor", "--script", path("sensor.mls"), "--formula", "P2", "--domain",
                     "minmax", "--trace", path("net.json"), "--out", path("r.json"), "--threads", "2"});
  ASSERT_EQ(q.code, kOk) << q.err;
  EXPECT_EQ(io::load_result(path("r.json")).domain(), DomainKind::MinMax);
}

TEST_F(CliTest, EmittedFilesAreAccepted) {
  ASSERT_EQ(run({"generate", "automotive", "--out", path("car.json"), "--script-out", path("car.mls")})
                .code,
            kOk);
  EXPECT_NO_THROW(io::load_trace(path("car.json")));
  EXPECT_EQ(run({"check", path("car.mls")}).code, kOk);
  const Invocation printed = run({"check", path("car.mls"), "--print"});
  ASSERT_EQ(printed.code, kOk);
  const std::string canonical = printed.out.substr(0, printed.out.rfind("ok:"));
  std::ofstream(path("canonical.mls")) << canonical;
  const Invocation again = run({"check", path("canonical.mls"), "--print"});
  EXPECT_EQ(again.out, printed.out);
  const Invocation r = run({"monitor", "--script", path("car.mls"), "--formula", "R3", "--param",
                     "wbar=4500", "--param", "vbar=120", "--param", "T=4", "--trace", path("car.json"),
                     "--out", path("car.csv")});
  EXPECT_EQ(r.code, kOk) << r.err;
}

TEST_F(CliTest, UsageErrors) {
  const Invocation missing = run({"monitor", "--script", "x.mls", "--trace", "t.json", "--out", "r.csv"});
  EXPECT_EQ(missing.code, kUsage);
  EXPECT_NE((missing.out + missing.err).find("--formula"), std::string::npos);
  EXPECT_EQ(run({}).code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST_F(CliTest, RuntimeFailures) {
  ASSERT_EQ(run({"generate", "sensor", "--out", path("n.json"), "--script-out", path("s.mls")}).code,
            kOk);
  EXPECT_EQ(run({"monitor", "--script", path("s.mls"), "--formula", "Ppar", "--trace", path("n.json"),
                 "--out", path("r.csv")})
                .code,
            kFailure);
  EXPECT_EQ(run({"monitor", "--script", path("s.mls"), "--formula", "P1", "--param", "k=abc",
                 "--trace", path("n.json"), "--out", path("r.csv")})
                .code,
            kUsage);
  EXPECT_EQ(run({"monitor", "--script", path("s.mls"), "--formula", "P1", "--trace",
                 path("missing.json"), "--out", path("r.csv")})
                .code,
            kFailure);
  std::ofstream(path("bad.mls")) << "signal { real x; }\nformula f = (y > 1);\n";
  const Invocation bad = run({"check", path("bad.mls")});
  EXPECT_EQ(bad.code, kFailure);
  EXPECT_NE(bad.err.find("2:"), std::string::npos) << bad.err;
}

TEST_F(CliTest, BenchSpatialPrintsRows) {
  const Invocation r = run({"bench", "spatial", "--nodes", "20", "--reps", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  for (const char* name : {"P2", "P3", "P4"}) EXPECT_NE(r.out.find(name), std::string::npos);
  EXPECT_NE(r.out.find("minmax"), std::string::npos);
}

}  // namespace
}  // namespace moonlight::cli
