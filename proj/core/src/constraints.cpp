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

#include "hypergame/constraints.hpp"

#include <algorithm>
#include <array>

namespace hypergame {

DilemmaFrame dilemma_frame(const BaseGame& base) {
  const auto& rows = base.row_options();
  const auto& cols = base.col_options();
  if (rows.size() != 2 || cols.size() != 2) {
    throw ConfigError("attitude constraints require a 2x2 base game");
  }
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      if (base.payoff(i, j).row != base.payoff(j, i).col) {
        throw ConfigError("attitude constraints require a symmetric base game");
      }
    }
  }
  return {rows[0], rows[1], cols[0], cols[1]};
}

OutcomeClass classify_outcome(const StrategyProfile& profile, Role perspective,
                              const DilemmaFrame& frame) {
  auto cooperates = [](const OptionId& a, const OptionId& coop, const OptionId& defect) {
    if (a == coop) return true;
    if (a == defect) return false;
    throw ConfigError("action '" + a.name + "' is neither the cooperate nor the defect move");
  };
  const bool row_c = cooperates(profile.row_action, frame.row_coop, frame.row_defect);
  const bool col_c = cooperates(profile.col_action, frame.col_coop, frame.col_defect);
  const bool own = perspective == Role::row ? row_c : col_c;
  const bool other = perspective == Role::row ? col_c : row_c;
  if (own) return other ? OutcomeClass::R : OutcomeClass::S;
  return other ? OutcomeClass::T : OutcomeClass::P;
}

OutcomeClass classify_outcome(const StrategyProfile& profile, Role perspective,
                              const OptionId& coop, const OptionId& defect) {
  return classify_outcome(profile, perspective, DilemmaFrame{coop, defect, coop, defect});
}

bool matches_attitude(const RankTable& table, Role perspective,
                      const AttitudeTemplate& attitude, const DilemmaFrame& frame) {
  if (table.row_count() != 2 || table.col_count() != 2) {
    throw ConfigError("attitude constraint on a non-2x2 domain");
  }
  // rank_of[class] for this perspective
  std::array<int, 4> rank_of{};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      StrategyProfile profile{table.rows()[r], table.cols()[c]};
      rank_of[static_cast<std::size_t>(classify_outcome(profile, perspective, frame))] =
          table.rank(perspective, r, c);
    }
  }
  std::array<int, 4> sorted = rank_of;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConfigError("attitude matching requires strict ranks");
  }
  for (std::size_t k = 0; k + 1 < 4; ++k) {
    auto better = static_cast<std::size_t>(attitude.ordering[k]);
    auto worse = static_cast<std::size_t>(attitude.ordering[k + 1]);
    if (rank_of[better] <= rank_of[worse]) return false;
  }
  return true;
}

bool matches_any_attitude(const RankTable& table, Role perspective,
                          std::span<const Attitude> attitudes, const DilemmaFrame& frame) {
  return std::any_of(attitudes.begin(), attitudes.end(), [&](Attitude a) {
    return matches_attitude(table, perspective, attitude_template(a), frame);
  });
}

bool is_symmetric_expectation(const BaseGame& base, const RankTable& table) {
  if (base.row_options().size() != base.col_options().size()) return false;
  if (table.row_count() != table.col_count()) return false;

  // Positional correspondence between base row and column options.
  std::vector<std::size_t> row_pos;
  std::vector<std::size_t> col_pos;
  for (const auto& a : table.rows()) {
    auto i = base.index_of(Role::row, a);
    if (!i) return false;
    row_pos.push_back(*i);
  }
  for (const auto& b : table.cols()) {
    auto i = base.index_of(Role::column, b);
    if (!i) return false;
    col_pos.push_back(*i);
  }
  auto sorted_rows = row_pos;
  auto sorted_cols = col_pos;
  std::sort(sorted_rows.begin(), sorted_rows.end());
  std::sort(sorted_cols.begin(), sorted_cols.end());
  if (sorted_rows != sorted_cols) return false;

  auto local = [](const std::vector<std::size_t>& pos, std::size_t base_index) {
    return static_cast<std::size_t>(std::find(pos.begin(), pos.end(), base_index) - pos.begin());
  };
  for (std::size_t r = 0; r < table.row_count(); ++r) {
    for (std::size_t c = 0; c < table.col_count(); ++c) {
      // (a, b) transposed is (row counterpart of b, column counterpart of a).
      const std::size_t tr = local(row_pos, col_pos[c]);
      const std::size_t tc = local(col_pos, row_pos[r]);
      if (table.at(r, c).col != table.at(tr, tc).row) return false;
    }
  }
  return true;
}

bool is_symmetric_expectation(const BaseGame& base, const SubjectiveGame& game) {
  return is_symmetric_expectation(base, game.table());
}

}  // namespace hypergame
