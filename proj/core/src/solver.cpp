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

#include "hypergame/solver.hpp"

#include <algorithm>

namespace hypergame {

namespace {

std::vector<int> dense_ranks(const std::vector<double>& values) {
  std::vector<double> levels = values;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<int> ranks;
  ranks.reserve(values.size());
  for (double v : values) {
    ranks.push_back(static_cast<int>(std::lower_bound(levels.begin(), levels.end(), v) -
                                     levels.begin()) + 1);
  }
  return ranks;
}

// Row r is a weak best response to column c for the row role.
bool row_best(const GameView& view, std::size_t r, std::size_t c) {
  const int here = view.at(r, c).row;
  for (std::size_t other = 0; other < view.row_count(); ++other) {
    if (view.at(other, c).row > here) return false;
  }
  return true;
}

bool col_best(const GameView& view, std::size_t r, std::size_t c) {
  const int here = view.at(r, c).col;
  for (std::size_t other = 0; other < view.col_count(); ++other) {
    if (view.at(r, other).col > here) return false;
  }
  return true;
}

void require_active(const Hypergame& hypergame) {
  if (hypergame.level() < 1) {
    throw Error("hypergame solution concepts need subjective views (level >= 1)");
  }
}

}  // namespace

GameView ordinal_from_cardinal(const BaseGame& base) {
  const std::size_t rows = base.row_options().size();
  const std::size_t cols = base.col_options().size();
  std::vector<double> row_payoffs;
  std::vector<double> col_payoffs;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      row_payoffs.push_back(base.payoff(r, c).row);
      col_payoffs.push_back(base.payoff(r, c).col);
    }
  }
  auto row_ranks = dense_ranks(row_payoffs);
  auto col_ranks = dense_ranks(col_payoffs);
  std::vector<RankPair> ranks(rows * cols);
  for (std::size_t i = 0; i < ranks.size(); ++i) ranks[i] = {row_ranks[i], col_ranks[i]};
  return RankTable::create(base.row_options(), base.col_options(), std::move(ranks));
}

std::vector<OptionId> best_response_set(const GameView& view, Role role,
                                        const OptionId& opponent_action) {
  auto opp = view.index_of(opposite(role), opponent_action);
  if (!opp) {
    throw Error("unknown opponent action '" + opponent_action.name + "' for the " +
                std::string(to_string(role)) + " role");
  }
  std::vector<OptionId> best;
  if (role == Role::row) {
    for (std::size_t r = 0; r < view.row_count(); ++r) {
      if (row_best(view, r, *opp)) best.push_back(view.rows()[r]);
    }
  } else {
    for (std::size_t c = 0; c < view.col_count(); ++c) {
      if (col_best(view, *opp, c)) best.push_back(view.cols()[c]);
    }
  }
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> nash_cells(const GameView& view) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < view.row_count(); ++r) {
    for (std::size_t c = 0; c < view.col_count(); ++c) {
      if (row_best(view, r, c) && col_best(view, r, c)) cells.emplace_back(r, c);
    }
  }
  return cells;
}

std::vector<StrategyProfile> nash_equilibria(const GameView& view) {
  std::vector<StrategyProfile> out;
  for (auto [r, c] : nash_cells(view)) out.push_back({view.rows()[r], view.cols()[c]});
  return out;
}

std::vector<OptionId> nash_components(const GameView& view, Role role) {
  const auto& actions = view.actions(role);
  std::vector<bool> member(actions.size(), false);
  for (auto [r, c] : nash_cells(view)) member[role == Role::row ? r : c] = true;
  std::vector<OptionId> out;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (member[i]) out.push_back(actions[i]);
  }
  return out;
}

bool is_nash_equilibrium(const GameView& view, const StrategyProfile& profile) {
  auto r = view.index_of(Role::row, profile.row_action);
  auto c = view.index_of(Role::column, profile.col_action);
  return r && c && row_best(view, *r, *c) && col_best(view, *r, *c);
}

bool in_nash_component(const GameView& view, Role role, const OptionId& action) {
  auto i = view.index_of(role, action);
  if (!i) return false;
  for (auto [r, c] : nash_cells(view)) {
    if ((role == Role::row ? r : c) == *i) return true;
  }
  return false;
}

bool is_strong_hne(const Hypergame& hypergame, const StrategyProfile& profile) {
  require_active(hypergame);
  return std::all_of(hypergame.views().begin(), hypergame.views().end(),
                     [&](const SubjectiveGame& g) { return is_nash_equilibrium(g.table(), profile); });
}

bool is_weak_hne(const Hypergame& hypergame, const StrategyProfile& profile) {
  require_active(hypergame);
  return std::all_of(hypergame.views().begin(), hypergame.views().end(),
                     [&](const SubjectiveGame& g) {
                       Role role = hypergame.base().find_player(g.owner())->role;
                       return in_nash_component(g.table(), role, profile.action(role));
                     });
}

}  // namespace hypergame
