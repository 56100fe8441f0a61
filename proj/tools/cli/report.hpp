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

#ifndef HYPERGAME_TOOLS_CLI_REPORT_HPP_
#define HYPERGAME_TOOLS_CLI_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypergame/model.hpp"
#include "json.hpp"

namespace hypergame::cli {

// A rank table plus its equilibria, rendered as a (r_row, r_col) matrix.
struct MatrixReport {
  std::string label;
  std::string owner;  // empty for the base view
  RankTable table;
  std::vector<StrategyProfile> equilibria;
};

struct ValidateSection {
  bool valid = false;
  std::vector<std::string> diagnostics;
};

struct SolveSection {
  std::string mode;  // "ordinal" (declared views) or "cardinal" (base payoffs)
  std::vector<MatrixReport> views;
};

struct PlayerSection {
  Player player;
  std::size_t action_spaces = 0;
  std::size_t generated = 0;
  std::size_t admitted = 0;
  std::vector<MatrixReport> retained;
};

struct HypergameEntry {
  // 0-based index into each player's retained list, in player order. Rendered
  // 1-based.
  std::vector<std::size_t> picks;
};

struct RationaliseSection {
  StrategyProfile target;
  std::string concept_name;
  int level = 2;
  double candidate_estimate = 0;
  std::vector<PlayerSection> players;
  std::vector<HypergameEntry> hypergames;
};

struct Report {
  std::string command;
  std::string input_path;
  std::string input_canonical;
  std::vector<std::pair<std::string, std::string>> configuration;
  std::vector<std::string> warnings;
  std::optional<ValidateSection> validate;
  std::optional<SolveSection> solve;
  std::optional<RationaliseSection> rationalise;
};

nlohmann::ordered_json to_json(const Report& report);
std::string to_text(const Report& report);

// Text matrix: rows are row-role actions, columns column-role actions.
std::string render_matrix(const RankTable& table);

}  // namespace hypergame::cli

#endif  // HYPERGAME_TOOLS_CLI_REPORT_HPP_
