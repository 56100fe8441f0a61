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

#ifndef HYPERGAME_RATIONALISER_HPP_
#define HYPERGAME_RATIONALISER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hypergame/constraints.hpp"
#include "hypergame/model.hpp"

namespace hypergame {

// Preflight refusal: the generation space exceeds the caller's budget.
class CandidateBudgetExceeded : public Error {
 public:
  CandidateBudgetExceeded(double estimate, std::uint64_t budget);

  double estimate() const { return estimate_; }
  std::uint64_t budget() const { return budget_; }

 private:
  double estimate_;
  std::uint64_t budget_;
};

struct ActionSpace {
  std::vector<OptionId> rows;
  std::vector<OptionId> cols;

  bool operator==(const ActionSpace&) const = default;
};

// How rank tables are enumerated for one player's candidates.
struct RankEnumeration {
  Role owner_role = Role::row;
  bool strict = true;
  std::optional<std::vector<Attitude>> own_attitudes;
  std::optional<std::vector<Attitude>> opponent_attitudes;
  // Required when either attitude list is present.
  std::optional<DilemmaFrame> frame;
};

// Every pair of per-perspective rankings (row perspective outer, column
// inner, each in lexicographic order), filtered by the attitude lists.
// Strict rankings are permutations of 1..cells; non-strict rankings are all
// dense weak orders.
void for_each_rank_table(const std::vector<OptionId>& rows, const std::vector<OptionId>& cols,
                         const RankEnumeration& config,
                         const std::function<void(RankTable)>& sink);
std::vector<RankTable> enumerate_rank_tables(const std::vector<OptionId>& rows,
                                             const std::vector<OptionId>& cols,
                                             const RankEnumeration& config);

// Own side per policy; opponent side over every non-empty subset when
// `enumerate_opponent` is set. Subsets ordered by size, then by declaration
// position.
std::vector<ActionSpace> enumerate_action_spaces(const BaseGame& base, const PlayerId& owner,
                                                 const StrategyProfile& target,
                                                 OwnActionPolicy policy,
                                                 bool enumerate_opponent);

// Throws ConfigError on inconsistent configuration.
void check_consistency(const ConstraintSet& constraints, const BaseGame& base);

// Number of candidates generation would produce for the player.
double estimate_candidates(const BaseGame& base, const StrategyProfile& target,
                           const PlayerConstraints& entry);

void for_each_candidate(const BaseGame& base, const StrategyProfile& target,
                        const PlayerConstraints& entry,
                        const std::function<void(SubjectiveGame)>& sink);
std::vector<SubjectiveGame> generate_candidates(const BaseGame& base,
                                                const StrategyProfile& target,
                                                const PlayerConstraints& entry);

bool satisfies_concept(const SubjectiveGame& candidate, const StrategyProfile& target,
                       SolutionConcept solution_concept, Role player_role);

std::vector<SubjectiveGame> filter_candidates(const std::vector<SubjectiveGame>& candidates,
                                              const StrategyProfile& target,
                                              SolutionConcept solution_concept,
                                              Role player_role);

// `per_player_retained` is ordered as base.players().
std::vector<Hypergame> assemble_hypergames(
    const BaseGame& base, const std::vector<std::vector<SubjectiveGame>>& per_player_retained,
    int level);

struct RationaliseOptions {
  std::optional<std::uint64_t> max_candidates;
  // Worker threads used for filtering; output does not depend on it.
  unsigned jobs = 1;
};

RationalisationResult rationalise(const BaseGame& base, const StrategyProfile& target,
                                  const ConstraintSet& constraints,
                                  const RationaliseOptions& options = {});

}  // namespace hypergame

#endif  // HYPERGAME_RATIONALISER_HPP_
