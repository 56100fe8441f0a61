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

#ifndef HYPERGAME_SOLVER_HPP_
#define HYPERGAME_SOLVER_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "hypergame/model.hpp"

namespace hypergame {

// A game as seen by one observer: ordered action lists and ordinal ranks.
// Subjective games carry one directly; base games go through
// ordinal_from_cardinal.
using GameView = RankTable;

// Dense ranking from 1 per perspective; equal payoffs share a rank.
GameView ordinal_from_cardinal(const BaseGame& base);

// Actions of `role` attaining the maximum rank against `opponent_action`,
// in declaration order. Throws Error if the opponent action is not in view.
std::vector<OptionId> best_response_set(const GameView& view, Role role,
                                        const OptionId& opponent_action);

// Pure equilibria under weak best responses, row-major.
std::vector<StrategyProfile> nash_equilibria(const GameView& view);

// Same, as (row index, column index) cells of the view.
std::vector<std::pair<std::size_t, std::size_t>> nash_cells(const GameView& view);

// Actions of `role` appearing in at least one equilibrium.
std::vector<OptionId> nash_components(const GameView& view, Role role);

bool is_nash_equilibrium(const GameView& view, const StrategyProfile& profile);
bool in_nash_component(const GameView& view, Role role, const OptionId& action);

// `profile` is an equilibrium of every player's view.
bool is_strong_hne(const Hypergame& hypergame, const StrategyProfile& profile);
// Each player's own component belongs to an equilibrium of that player's view.
bool is_weak_hne(const Hypergame& hypergame, const StrategyProfile& profile);

}  // namespace hypergame

#endif  // HYPERGAME_SOLVER_HPP_
