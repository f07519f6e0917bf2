// Copyright 2026 The posmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "posmap/cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "posmap/io.hpp"
#include "test_util.hpp"

namespace posmap {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "posmap");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("posmap_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    ::unsetenv("POSMAP_SEED");
  }
  void TearDown() override {
    ::unsetenv("POSMAP_SEED");
    fs::remove_all(dir_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(dir_ / name) << content;
    return path(name);
  }

  int file_count() const {
    int n = 0;
    for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir_)) ++n;
    return n;
  }

  fs::path dir_;
};

TEST_F(Cli, BuiltinRoundTripsThroughInspect) {
  ASSERT_EQ(run({"builtin", "choi-lam", "-o", path("cl.json")}).code, kExitOk);
  CliRun r = run({"inspect", path("cl.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = parse_json(r.out);
  EXPECT_NEAR(j["min_eigenvalue_pt"].get<double>(), -0.5, 1e-14);
  EXPECT_NEAR(j["unitality_residual"].get<double>(), 0.0, 1e-14);
  EXPECT_FALSE(j["ppt"].get<bool>());

  ASSERT_EQ(run({"builtin", "choi-lam", "--scale", "paper", "-o", path("clp.json")}).code, kExitOk);
  j = parse_json(run({"inspect", path("clp.json")}).out);
  EXPECT_NEAR(j["min_eigenvalue_pt"].get<double>(), -1.0, 1e-14);

  ASSERT_EQ(run({"builtin", "horodecki-2x4", "-o", path("h.json")}).code, kExitOk);
  r = run({"inspect", path("h.json")});
  ASSERT_EQ(r.code, kExitOk);
  j = parse_json(r.out);
  EXPECT_EQ(j["m"], 2);
  EXPECT_EQ(j["n"], 4);
  const Witness w = read_witness_file(path("h.json"));
  EXPECT_EQ(w.matrix().matrix(), horodecki_2x4_witness().matrix().matrix());
}

TEST_F(Cli, BuiltinIdentityReportsPpt) {
  ASSERT_EQ(run({"builtin", "identity", "-k", "2", "-o", path("id.json")}).code, kExitOk);
  const Json j = parse_json(run({"inspect", path("id.json")}).out);
  EXPECT_TRUE(j["ppt"].get<bool>());
  EXPECT_EQ(run({"builtin", "nope"}).code, kExitPrecondition);
  EXPECT_EQ(run({"builtin", "horodecki-2x4", "--scale", "paper"}).code, kExitPrecondition);
}

TEST_F(Cli, MalformedJsonIsAParseError) {
  const std::string bad = write("bad.json", "{\n  \"m\": 3,\n  oops\n}\n");
  const CliRun r = run({"inspect", bad});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_NE(r.err.find(bad + ":3:"), std::string::npos) << r.err;
  EXPECT_EQ(run({"normalize", bad}).code, kExitParse);
  EXPECT_EQ(run({"zeros", bad}).code, kExitParse);
  EXPECT_EQ(run({"section", "--witness", bad}).code, kExitParse);
}

TEST_F(Cli, PreconditionFailures) {
  EXPECT_EQ(run({"inspect", path("missing.json")}).code, kExitPrecondition);
  EXPECT_EQ(run({"rings", "--samples", "0"}).code, kExitPrecondition);
  EXPECT_EQ(run({"section", "--frame", "sideways"}).code, kExitPrecondition);
  EXPECT_EQ(run({"section", "--type", "Q"}).code, kExitPrecondition);
  EXPECT_EQ(run({"section", "--type", "tangent", "-k", "4"}).code, kExitPrecondition);
  EXPECT_EQ(run({"section", "--frame", "image"}).code, kExitPrecondition);
}

TEST_F(Cli, BadFlagsExitWithPrecondition) {
  EXPECT_EQ(run({"rings", "--bogus"}).code, kExitPrecondition);
  EXPECT_EQ(run({"frobnicate"}).code, kExitPrecondition);
  EXPECT_EQ(run({}).code, kExitPrecondition);
  EXPECT_EQ(run({"normalize", "x.json", "--max-iter", "many"}).code, kExitPrecondition);
}

TEST_F(Cli, HelpExitsCleanly) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("section"), std::string::npos);
}

TEST_F(Cli, NormalizeChoiLam) {
  ASSERT_EQ(run({"builtin", "choi-lam", "-o", path("cl.json")}).code, kExitOk);
  const CliRun r = run({"normalize", path("cl.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_TRUE(j["converged"].get<bool>());
  EXPECT_EQ(j["iterations"], 1);
  EXPECT_EQ(j["history"].size(), 1u);
}

TEST_F(Cli, NormalizeInteriorWitness) {
  Rng rng(70);
  const Witness w = testing::interior_witness(rng, 3, 3, 0.1);
  const std::string in = write("w.json", to_json(w).dump());
  CliRun r = run({"normalize", in, "-o", path("n.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = parse_json(read_text_file(path("n.json")));
  EXPECT_LE(j["unitality_residual"].get<double>(), 1e-10);
  EXPECT_LE(j["trace_preservation_residual"].get<double>(), 1e-10);

  // Out of iterations: exit 3, result still written for inspection.
  r = run({"normalize", in, "--max-iter", "1", "-o", path("n1.json")});
  EXPECT_EQ(r.code, kExitNonConvergence);
  EXPECT_NE(r.err.find("no convergence"), std::string::npos);
  EXPECT_FALSE(parse_json(read_text_file(path("n1.json")))["converged"].get<bool>());
}

TEST_F(Cli, NormalizeWithStartMatrix) {
  Rng rng(71);
  const std::string in = write("w.json", to_json(testing::interior_witness(rng, 3, 3, 0.3)).dump());
  const std::string x0 = write("x0.json", to_json(rng.positive_definite(3)).dump());
  const CliRun a = run({"normalize", in});
  const CliRun b = run({"normalize", in, "--x0", x0});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  const Json ja = parse_json(a.out);
  const Json jb = parse_json(b.out);
  const Witness wa = witness_from_json(ja["witness"]);
  const Witness wb = witness_from_json(jb["witness"]);
  EXPECT_LE((wa.matrix().matrix() - wb.matrix().matrix()).norm(), 1e-9);
}

TEST_F(Cli, NoPartialFilesOnFailure) {
  ASSERT_EQ(run({"builtin", "choi-lam", "-o", path("cl.json")}).code, kExitOk);
  RealVector d(3);
  d << 1.0, -1.0, 1.0;
  const std::string x0 = write("x0.json", to_json(HermitianMatrix::diagonal(d)).dump());
  const int before = file_count();
  EXPECT_EQ(run({"normalize", path("cl.json"), "--x0", x0, "-o", path("out.json")}).code,
            kExitPrecondition);
  EXPECT_EQ(run({"section", "--type", "Z", "-o", path("s.csv"), "--json", path("s.json")}).code,
            kExitPrecondition);
  EXPECT_EQ(file_count(), before);
  EXPECT_FALSE(fs::exists(path("out.json")));
}

TEST_F(Cli, RingsAreUnitVectors) {
  const CliRun r = run({"rings", "--samples", "1000"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,branch,x,y,z");
  int rows = 0;
  while (std::getline(in, line)) {
    double v[5];
    std::string branch;
    std::istringstream ls(line);
    std::string cell;
    for (int c = 0; c < 5; ++c) {
      std::getline(ls, cell, ',');
      if (c == 1) {
        branch = cell;
      } else {
        v[c] = std::stod(cell);
      }
    }
    EXPECT_TRUE(branch == "+" || branch == "-");
    EXPECT_NEAR(v[2] * v[2] + v[3] * v[3] + v[4] * v[4], 1.0, 1e-12);
    ++rows;
  }
  EXPECT_EQ(rows, 2000);
}

TEST_F(Cli, SectionDiagRotatesTheImage) {
  const CliRun r = run({"section", "--builtin", "choi-lam", "--type", "diag", "--samples", "720",
                     "--json", path("s.json"), "--svg", path("s.svg")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::map<std::string, std::vector<std::pair<double, double>>> curves;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "theta,r,label");
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string t, rr, label;
    std::getline(ls, t, ',');
    std::getline(ls, rr, ',');
    std::getline(ls, label, ',');
    curves[label].emplace_back(std::stod(t), std::stod(rr));
  }
  ASSERT_EQ(curves.size(), 3u);
  const auto& src = curves["source"];
  const auto& img = curves["image_of_source"];
  ASSERT_EQ(src.size(), 720u);
  ASSERT_EQ(img.size(), 720u);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const double a = src[i].first + std::numbers::pi / 3;
    const double x = 0.5 * src[i].second * std::cos(a);
    const double y = 0.5 * src[i].second * std::sin(a);
    EXPECT_NEAR(img[i].second * std::cos(img[i].first), x, 1e-8);
    EXPECT_NEAR(img[i].second * std::sin(img[i].first), y, 1e-8);
  }
  const Json side = parse_json(read_text_file(path("s.json")));
  EXPECT_TRUE(side["has_map"].get<bool>());
  EXPECT_EQ(side["curves"].size(), 3u);
  EXPECT_EQ(read_text_file(path("s.svg")).rfind("<svg", 0), 0u);
}

TEST_F(Cli, SectionRectangularMapSkipsSourceFrameImage) {
  const CliRun r = run({"section", "--builtin", "horodecki-2x4", "--type", "A", "--samples", "16"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.find("image_of_source"), std::string::npos);
  EXPECT_NE(r.out.find("image_plane"), std::string::npos);
  const CliRun s =
      run({"section", "--builtin", "horodecki-2x4", "--type", "A", "--frame", "image", "--samples", "16"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  EXPECT_NE(s.out.find("image_of_source"), std::string::npos);
}

TEST_F(Cli, ZerosAreDeterministicAndHonourSeedOverride) {
  ASSERT_EQ(run({"builtin", "choi-lam", "-o", path("cl.json")}).code, kExitOk);
  const CliRun a = run({"zeros", path("cl.json"), "--starts", "30", "--seed", "5"});
  const CliRun b = run({"zeros", path("cl.json"), "--starts", "30", "--seed", "5"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const CliRun c = run({"zeros", path("cl.json"), "--starts", "30", "--seed", "6"});
  EXPECT_NE(a.out, c.out);

  ::setenv("POSMAP_SEED", "5", 1);
  const CliRun d = run({"zeros", path("cl.json"), "--starts", "30", "--seed", "6"});
  EXPECT_EQ(d.out, a.out);
  ::setenv("POSMAP_SEED", "five", 1);
  EXPECT_EQ(run({"zeros", path("cl.json"), "--starts", "3"}).code, kExitPrecondition);
}

TEST_F(Cli, RandomSectionsAreDeterministic) {
  const CliRun a = run({"section", "--type", "B", "--samples", "32", "--seed", "9"});
  const CliRun b = run({"section", "--type", "B", "--samples", "32", "--seed", "9"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"section", "--type", "B", "--samples", "32", "--seed", "10"}).out);
}

}  // namespace
}  // namespace posmap
