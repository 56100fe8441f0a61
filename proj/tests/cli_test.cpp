// Copyright 2026 The Hypergame Rationaliser Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "app.hpp"
#include "doctest.h"
#include "hypergame/hypergame.hpp"
#include "support/fixtures.hpp"

using namespace hypergame;
using namespace hypergame::testing;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run hgr(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("hgr_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

const std::vector<std::string> kPdAttitudes{"--enumerate-ranks", "--attitudes-own", "po,jo",
                                            "--attitudes-opp", "po,jo"};

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

TEST_CASE("validate exit codes") {
  CHECK(hgr({"validate", scenario_path("pd.hg")}).code == cli::kExitOk);

  Run bad = hgr({"validate", write_temp("arity.hg", "payoff(c, d, 1).")});
  CHECK(bad.code == cli::kExitInputError);
  CHECK(bad.err.find(":1:1: arity mismatch: payoff/3 given, expected payoff/4") != std::string::npos);

  Run missing = hgr({"validate", "/nonexistent/game.hg"});
  CHECK(missing.code == cli::kExitIoError);
  CHECK(hgr({"validate"}).code == cli::kExitInputError);
  CHECK(hgr({"frobnicate"}).code == cli::kExitInputError);
}

TEST_CASE("bundled scenarios are in canonical form") {
  for (const char* name : {"pd.hg", "france.hg", "france_view.hg"}) {
    CAPTURE(name);
    std::string text = slurp(scenario_path(name));
    Run r = hgr({"render", scenario_path(name)});
    CHECK(r.code == 0);
    CHECK(r.out == text);
  }
  CHECK(slurp(scenario_path("pd.hg")) == kPdListing);
}

TEST_CASE("solve reports the equilibria of each view") {
  Run pd = hgr({"solve", scenario_path("pd.hg"), "--json"});
  REQUIRE(pd.code == 0);
  json j = json::parse(pd.out);
  REQUIRE(j["result"]["views"].size() == 1);
  CHECK(j["result"]["views"][0]["equilibria"] == json::parse(R"([{"row":"defect","col":"defect"}])"));

  Run france = hgr({"solve", scenario_path("france.hg")});
  CHECK(france.code == 0);
  CHECK(france.out.find("NE: (g2, f3)") != std::string::npos);
  CHECK(hgr({"solve", scenario_path("france_view.hg")}).out.find("NE: (g2, f2)") != std::string::npos);
  CHECK(hgr({"solve", scenario_path("pd.hg"), "--ordinal", "--cardinal"}).code == cli::kExitInputError);
}

TEST_CASE("rationalise the prisoner's dilemma") {
  Run level2 = hgr(concat({"rationalise", scenario_path("pd.hg")}, kPdAttitudes));
  REQUIRE(level2.code == 0);
  CHECK(level2.out.find("hypergames: 16") != std::string::npos);

  Run level1 = hgr(concat({"rationalize", scenario_path("pd.hg"), "--level", "1"}, kPdAttitudes));
  REQUIRE(level1.code == 0);
  CHECK(level1.out.find("hypergames: 4") != std::string::npos);

  Run selfish = hgr({"rationalise", scenario_path("pd.hg"), "--enumerate-ranks", "--attitudes-own",
                     "so", "--attitudes-opp", "so"});
  CHECK(selfish.code == 0);
  CHECK(selfish.out.find("no rationalising structure exists") != std::string::npos);
}

TEST_CASE("rationalise the fall of France") {
  Run r = hgr({"rationalise", scenario_path("france.hg"), "--concept", "weak",
               "--enumerate-opp-actions", "--fix-view", "france=france_view.hg", "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  const json& result = j["result"];
  CHECK(result["players"][0]["generated"] == 7);
  REQUIRE(result["hypergames"].size() == 1);
  const json& germany = result["players"][0]["retained"][0];
  CHECK(germany["cols"] == json::array({"f2"}));
  CHECK(germany["equilibria"] == json::parse(R"([{"row":"g3","col":"f2"}])"));
}

TEST_CASE("JSON and text reports agree") {
  auto args = concat({"rationalise", scenario_path("pd.hg"), "--level", "1"}, kPdAttitudes);
  Run text = hgr(args);
  args.push_back("--json");
  json j = json::parse(hgr(args).out);
  const json& result = j["result"];
  CHECK(text.out.find("hypergames: " + std::to_string(result["hypergames"].size())) !=
        std::string::npos);
  for (const auto& p : result["players"]) {
    std::ostringstream line;
    line << p["generated"].get<int>() << " generated, " << p["retained_count"].get<int>()
         << " retained, " << p["admitted_count"].get<int>() << " admitted";
    CHECK(text.out.find(line.str()) != std::string::npos);
  }
  CHECK(j["configuration"]["level"] == "1");
}

TEST_CASE("--out writes the report to a file") {
  auto path = (std::filesystem::temp_directory_path() / "hgr_cli_test_out.json").string();
  std::filesystem::remove(path);
  Run r = hgr({"validate", scenario_path("pd.hg"), "--json", "--out", path});
  CHECK(r.code == 0);
  CHECK(json::parse(slurp(path))["command"] == "validate");
  CHECK(hgr({"validate", scenario_path("pd.hg"), "--out", "/nonexistent/dir/x.txt"}).code ==
        cli::kExitIoError);
}

TEST_CASE("rationalise refuses blow-ups and inconsistent flags") {
  Run blowup = hgr({"rationalise", scenario_path("france.hg"), "--enumerate-ranks"});
  CHECK(blowup.code == cli::kExitBudgetExceeded);
  CHECK(blowup.err.find("exceeds") != std::string::npos);

  CHECK(hgr({"rationalise", scenario_path("pd.hg"), "--enumerate-ranks", "--max-candidates", "100"})
            .code == cli::kExitBudgetExceeded);

  Run joint = hgr({"rationalise", scenario_path("pd.hg"), "--enumerate-ranks", "--enumerate-opp-actions"});
  CHECK(joint.code == cli::kExitInputError);
  CHECK(hgr({"rationalise", scenario_path("pd.hg"), "--enumerate-ranks", "--enumerate-opp-actions",
             "--allow-joint"})
            .code == 0);

  CHECK(hgr({"rationalise", scenario_path("pd.hg"), "--attitudes-own", "po"}).code ==
        cli::kExitInputError);
  CHECK(hgr({"rationalise", scenario_path("pd.hg"), "--concept", "medium"}).code ==
        cli::kExitInputError);
  CHECK(hgr({"rationalise", scenario_path("pd.hg"), "--level", "3"}).code == cli::kExitInputError);
  CHECK(hgr({"rationalise", scenario_path("pd.hg"), "--target", "attack,defect"}).code ==
        cli::kExitInputError);
  CHECK(hgr({"rationalise", scenario_path("france.hg"), "--fix-view", "nobody=france_view.hg"}).code ==
        cli::kExitInputError);
  CHECK(hgr({"rationalise", scenario_path("france.hg"), "--fix-view", "france=missing.hg"}).code ==
        cli::kExitIoError);
}

TEST_CASE("--target overrides the chosen fact with a warning") {
  Run r = hgr({"rationalise", scenario_path("pd.hg"), "--target", "defect,defect"});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning: --target overrides the chosen fact") != std::string::npos);
  CHECK(r.out.find("target: (defect, defect)") != std::string::npos);
}
