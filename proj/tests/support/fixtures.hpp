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

#ifndef HYPERGAME_TESTS_SUPPORT_FIXTURES_HPP_
#define HYPERGAME_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "hypergame/hypergame.hpp"

namespace hypergame::testing {

inline constexpr const char* kPdListing = R"(player(alice).
player(bob).
role(alice, row).
role(bob, column).
option(row, cooperate).
option(row, defect).
option(column, cooperate).
option(column, defect).
payoff(cooperate, cooperate, 3, 3).
payoff(cooperate, defect, 0, 5).
payoff(defect, cooperate, 5, 0).
payoff(defect, defect, 1, 1).
chosen(cooperate, cooperate).
)";

inline std::vector<OptionId> ids(std::initializer_list<const char*> names) {
  std::vector<OptionId> out;
  for (const char* n : names) out.push_back({n});
  return out;
}

inline StrategyProfile profile(const char* row, const char* col) { return {{row}, {col}}; }

inline GameDescription pd_description() {
  GameDescription g;
  g.players = {{{"alice"}, Role::row}, {{"bob"}, Role::column}};
  g.row_options = ids({"cooperate", "defect"});
  g.col_options = ids({"cooperate", "defect"});
  g.payoffs = {{profile("cooperate", "cooperate"), {3, 3}},
               {profile("cooperate", "defect"), {0, 5}},
               {profile("defect", "cooperate"), {5, 0}},
               {profile("defect", "defect"), {1, 1}}};
  return g;
}

inline BaseGame pd_game() { return BaseGame::create(pd_description()); }

inline RankTable table(std::vector<OptionId> rows, std::vector<OptionId> cols,
                       std::vector<RankPair> ranks) {
  return RankTable::create(std::move(rows), std::move(cols), std::move(ranks));
}

inline RankTable pd_table(std::vector<RankPair> ranks) {
  return table(ids({"cooperate", "defect"}), ids({"cooperate", "defect"}), std::move(ranks));
}

// The four rank tables rationalising (C,C) under prosocial (po) and joint (jo)
// attitudes, named row_col. Cells row-major: CC, CD, DC, DD.
inline RankTable po_po() { return pd_table({{3, 3}, {4, 1}, {1, 4}, {2, 2}}); }
inline RankTable jo_po() { return pd_table({{4, 3}, {1, 1}, {3, 4}, {2, 2}}); }
inline RankTable jo_jo() { return pd_table({{4, 4}, {1, 3}, {3, 1}, {2, 2}}); }
inline RankTable po_jo() { return pd_table({{3, 4}, {4, 3}, {1, 1}, {2, 2}}); }

inline std::vector<RankTable> prosocial_tables() { return {po_po(), jo_po(), jo_jo(), po_jo()}; }

// Fall of France: Germany holds the row role, France the column role.
inline BaseGame france_game() {
  GameDescription g;
  g.players = {{{"germany"}, Role::row}, {{"france"}, Role::column}};
  g.row_options = ids({"g1", "g2", "g3"});
  g.col_options = ids({"f1", "f2", "f3"});
  const double u[3][3][2] = {{{1, 4}, {2, 3}, {2, 3}},
                             {{4, 1}, {3, 2}, {3, 2}},
                             {{3, 2}, {5, 0}, {2, 3}}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      g.payoffs.push_back({{g.row_options[r], g.col_options[c]}, {u[r][c][0], u[r][c][1]}});
    }
  }
  return BaseGame::create(g);
}

inline RankTable german_view() {
  return table(ids({"g1", "g2", "g3"}), ids({"f1", "f2", "f3"}),
               {{1, 4}, {2, 3}, {2, 3}, {4, 1}, {3, 2}, {3, 2}, {3, 2}, {5, 0}, {2, 3}});
}

inline RankTable french_view() {
  return table(ids({"g1", "g2"}), ids({"f1", "f2"}), {{1, 4}, {2, 3}, {4, 1}, {3, 2}});
}

inline std::string scenario_path(const std::string& name) {
  return std::string(HYPERGAME_SCENARIO_DIR) + "/" + name;
}

}  // namespace hypergame::testing

#endif  // HYPERGAME_TESTS_SUPPORT_FIXTURES_HPP_
