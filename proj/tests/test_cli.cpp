#include "test_support.hpp"

#include "venus/cli.hpp"
#include "venus/service.hpp"
#include "venus/svg.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace venus {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("venus_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  std::string write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << content;
    return p.string();
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Cli, RenderStateWritesFile) {
  const std::string out = (dir_ / "s.svg").string();
  EXPECT_EQ(run({"render-state", "--state", "[[1,0],[0,0]]", "--out", out}), cli::kExitOk) << err_.str();
  ASSERT_TRUE(fs::exists(out));
  EXPECT_NE(slurp(out).find("<svg"), std::string::npos);
}

TEST_F(Cli, RejectsUnnormalizedState) {
  EXPECT_EQ(run({"render-state", "--state", "[[2,0],[0,0]]"}), cli::kExitInvalid);
  EXPECT_NE(err_.str().find("not normalized"), std::string::npos);
  EXPECT_EQ(run({"render-state", "--state", "[[2,0],[0,0]]", "--renormalize", "--json"}), cli::kExitOk);
  EXPECT_NE(err_.str().find("norm=2"), std::string::npos);
}

TEST_F(Cli, JsonOutputFlagsPhaseFlip) {
  ASSERT_EQ(run({"render-state", "--state", "[[0.5,0],[0.5,0],[0.5,0],[-0.5,0]]", "--json"}), cli::kExitOk);
  const auto j = json::parse(out_.str());
  int negatives = 0;
  for (const auto& p : j["diagram"]["primitives"])
    if (p["kind"] == "amplitude_segment" && p["negative"].get<bool>()) ++negatives;
  EXPECT_EQ(negatives, 1);
}

TEST_F(Cli, StateFromFileAndParity) {
  const std::string path = write("state.json", "[[0.6,0],[0,0.8]]");
  ASSERT_EQ(run({"render-state", "--state", "@" + path, "--json", "--scale", "100"}), cli::kExitOk);
  const auto api = handle_state_geometry(R"({"state":[[0.6,0],[0,0.8]],"scale":100})");
  EXPECT_EQ(out_.str(), api.body + "\n");

  ASSERT_EQ(run({"render-state", "--state", "[[0.5,0],[0.5,0],[0.5,0],[-0.5,0]]", "--json", "--order", "1,0"}),
            cli::kExitOk);
  EXPECT_EQ(out_.str(),
            handle_state_geometry(R"({"state":[[0.5,0],[0.5,0],[0.5,0],[-0.5,0]],"order":[1,0]})").body + "\n");
}

TEST_F(Cli, BadArguments) {
  EXPECT_EQ(run({}), cli::kExitInvalid);
  EXPECT_EQ(run({"render-state"}), cli::kExitInvalid);
  EXPECT_EQ(run({"render-state", "--state", "[[1,0],[0,0]]", "--order", "2,0"}), cli::kExitInvalid);
  EXPECT_EQ(run({"render-state", "--state", "[[1,0],[0,0]]", "--scale", "-3"}), cli::kExitInvalid);
  EXPECT_EQ(run({"render-state", "--state", "@/nonexistent/state.json"}), cli::kExitInvalid);
  EXPECT_EQ(run({"frobnicate"}), cli::kExitInvalid);
  EXPECT_EQ(run({"--help"}), cli::kExitOk);
}

TEST_F(Cli, UnwritableOutput) {
  EXPECT_EQ(run({"render-state", "--state", "[[1,0],[0,0]]", "--out", "/nonexistent-dir/x/s.svg"}),
            cli::kExitUnwritable);
  const std::string circuit = write("c.json", R"({"qubits":1,"gates":[]})");
  const std::string blocker = write("file", "x");
  EXPECT_EQ(run({"run-circuit", "--circuit", circuit, "--frames-dir", blocker + "/frames"}), cli::kExitUnwritable);
}

std::vector<double> final_probabilities(const fs::path& frames_dir) {
  std::ifstream in(frames_dir / "manifest.json");
  const auto m = json::parse(in);
  return m["frames"].back()["probabilities"].get<std::vector<double>>();
}

TEST_F(Cli, RunGroverCircuit) {
  const std::string circuit = write("grover.json", testing::kGroverJson);
  const fs::path frames = dir_ / "frames";
  ASSERT_EQ(run({"run-circuit", "--circuit", circuit, "--frames-dir", frames.string()}), cli::kExitOk) << err_.str();
  for (int k = 0; k <= 12; ++k) EXPECT_TRUE(fs::exists(frames / frame_filename(k))) << k;
  EXPECT_FALSE(fs::exists(frames / frame_filename(13)));
  const auto p = final_probabilities(frames);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_NEAR(p[0], 0.0, 1e-9);
  EXPECT_NEAR(p[1], 0.0, 1e-9);
  EXPECT_NEAR(p[2], 0.0, 1e-9);
  EXPECT_NEAR(p[3], 1.0, 1e-9);
}

TEST_F(Cli, RunTwoIterationGrover) {
  const std::string circuit = write("grover2.json", serialize(grover_circuit(2)));
  const fs::path frames = dir_ / "frames";
  ASSERT_EQ(run({"run-circuit", "--circuit", circuit, "--frames-dir", frames.string(), "--json"}), cli::kExitOk);
  EXPECT_TRUE(fs::exists(frames / "frame_0022.json"));
  for (double p : final_probabilities(frames)) EXPECT_NEAR(p, 0.25, 1e-9);
}

TEST_F(Cli, RunSingleQubitHadamard) {
  const std::string circuit = write("h.json", R"({"qubits":1,"gates":[{"name":"h","targets":[0]}]})");
  const fs::path frames = dir_ / "frames";
  ASSERT_EQ(run({"run-circuit", "--circuit", circuit, "--frames-dir", frames.string()}), cli::kExitOk);
  const auto p = final_probabilities(frames);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[1], 0.5, 1e-12);
}

TEST_F(Cli, RunCircuitErrors) {
  EXPECT_EQ(run({"run-circuit", "--circuit", write("bad.json", "{"), "--frames-dir", dir_.string()}),
            cli::kExitInvalid);
  EXPECT_EQ(run({"run-circuit", "--circuit", (dir_ / "missing.json").string(), "--frames-dir", dir_.string()}),
            cli::kExitInvalid);
}

}  // namespace
}  // namespace venus
