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

#ifndef HYPERGAME_CONSTRAINTS_HPP_
#define HYPERGAME_CONSTRAINTS_HPP_

#include <span>

#include "hypergame/model.hpp"

namespace hypergame {

// Which option plays the cooperate-like and defect-like move on each side of
// a symmetric 2x2 dilemma.
struct DilemmaFrame {
  OptionId row_coop;
  OptionId row_defect;
  OptionId col_coop;
  OptionId col_defect;
};

// The first declared option of each side is cooperate-like. Throws
// ConfigError unless the base game is 2x2 and payoff-symmetric under the
// positional option correspondence.
DilemmaFrame dilemma_frame(const BaseGame& base);

OutcomeClass classify_outcome(const StrategyProfile& profile, Role perspective,
                              const DilemmaFrame& frame);
OutcomeClass classify_outcome(const StrategyProfile& profile, Role perspective,
                              const OptionId& coop, const OptionId& defect);

// True iff the perspective's ranks order {T, R, P, S} exactly as the
// template does. The table must span the frame's 2x2 domain and hold
// distinct ranks for that perspective.
bool matches_attitude(const RankTable& table, Role perspective,
                      const AttitudeTemplate& attitude, const DilemmaFrame& frame);

bool matches_any_attitude(const RankTable& table, Role perspective,
                          std::span<const Attitude> attitudes, const DilemmaFrame& frame);

// The view expects the opponent to reason as the owner does: believed sets
// correspond positionally and the column ranks are the transposed row ranks.
bool is_symmetric_expectation(const BaseGame& base, const RankTable& table);
bool is_symmetric_expectation(const BaseGame& base, const SubjectiveGame& game);

}  // namespace hypergame

#endif  // HYPERGAME_CONSTRAINTS_HPP_
