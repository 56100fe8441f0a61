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

#ifndef HYPERGAME_MODEL_HPP_
#define HYPERGAME_MODEL_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypergame/error.hpp"

namespace hypergame {

// True for tokens matching [a-z][a-z0-9_]*.
bool is_symbol(std::string_view token);

struct OptionId {
  std::string name;

  auto operator<=>(const OptionId&) const = default;
};

struct PlayerId {
  std::string name;

  auto operator<=>(const PlayerId&) const = default;
};

enum class Role { row, column };

Role opposite(Role role);
std::string_view to_string(Role role);
std::optional<Role> parse_role(std::string_view token);

struct Player {
  PlayerId id;
  Role role;

  bool operator==(const Player&) const = default;
};

struct Payoff {
  double row = 0.0;
  double col = 0.0;

  bool operator==(const Payoff&) const = default;
};

struct StrategyProfile {
  OptionId row_action;
  OptionId col_action;

  auto operator<=>(const StrategyProfile&) const = default;

  const OptionId& action(Role role) const {
    return role == Role::row ? row_action : col_action;
  }
};

// Unchecked ingredients of a base game, as collected by a front-end.
struct GameDescription {
  std::vector<Player> players;
  std::vector<OptionId> row_options;
  std::vector<OptionId> col_options;
  std::vector<std::pair<StrategyProfile, Payoff>> payoffs;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate_problem(
    const GameDescription& game,
    const std::optional<StrategyProfile>& target = std::nullopt);

// The ground-truth game: two players, ordered option lists and a total
// table of cardinal payoffs. Only obtainable through create().
class BaseGame {
 public:
  static BaseGame create(const GameDescription& game);

  // Players in declaration order.
  const std::array<Player, 2>& players() const { return players_; }
  const Player& player(Role role) const;
  const Player* find_player(const PlayerId& id) const;

  const std::vector<OptionId>& options(Role role) const {
    return role == Role::row ? row_options_ : col_options_;
  }
  const std::vector<OptionId>& row_options() const { return row_options_; }
  const std::vector<OptionId>& col_options() const { return col_options_; }
  std::optional<std::size_t> index_of(Role role, const OptionId& option) const;

  const Payoff& payoff(std::size_t row, std::size_t col) const {
    return payoffs_[row * col_options_.size() + col];
  }
  std::size_t payoff_count() const { return payoffs_.size(); }
  bool contains(const StrategyProfile& profile) const;

  GameDescription describe() const;

  bool operator==(const BaseGame&) const = default;

 private:
  BaseGame() = default;

  std::array<Player, 2> players_;
  std::vector<OptionId> row_options_;
  std::vector<OptionId> col_options_;
  std::vector<Payoff> payoffs_;  // row-major
};

struct RankPair {
  int row = 0;
  int col = 0;

  bool operator==(const RankPair&) const = default;
};

// Ordinal ranks over a rectangular domain; higher is more preferred.
class RankTable {
 public:
  // `ranks` is row-major over rows x cols.
  static RankTable create(std::vector<OptionId> rows, std::vector<OptionId> cols,
                          std::vector<RankPair> ranks);

  const std::vector<OptionId>& rows() const { return rows_; }
  const std::vector<OptionId>& cols() const { return cols_; }
  const std::vector<OptionId>& actions(Role role) const {
    return role == Role::row ? rows_ : cols_;
  }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_.size(); }

  const RankPair& at(std::size_t row, std::size_t col) const {
    return ranks_[row * cols_.size() + col];
  }
  int rank(Role perspective, std::size_t row, std::size_t col) const {
    const RankPair& p = at(row, col);
    return perspective == Role::row ? p.row : p.col;
  }
  std::span<const RankPair> cells() const { return ranks_; }

  std::optional<std::size_t> index_of(Role role, const OptionId& option) const;
  std::optional<RankPair> find(const StrategyProfile& profile) const;
  bool contains(const StrategyProfile& profile) const {
    return find(profile).has_value();
  }

  // Each perspective's ranks form a permutation of 1..cells.
  bool is_strict() const;

  // Sub-table over the given subsets; ranks are copied verbatim.
  RankTable restrict_to(const std::vector<OptionId>& rows,
                        const std::vector<OptionId>& cols) const;

  bool operator==(const RankTable&) const = default;

 private:
  RankTable() = default;

  std::vector<OptionId> rows_;
  std::vector<OptionId> cols_;
  std::vector<RankPair> ranks_;
};

// One player's private view: believed action sets plus an ordinal table
// over exactly those sets.
class SubjectiveGame {
 public:
  static SubjectiveGame create(const BaseGame& base, PlayerId owner, RankTable table);

  const PlayerId& owner() const { return owner_; }
  const RankTable& table() const { return table_; }
  const std::vector<OptionId>& believed(Role role) const { return table_.actions(role); }

  bool operator==(const SubjectiveGame&) const = default;

 private:
  SubjectiveGame(PlayerId owner, RankTable table)
      : owner_(std::move(owner)), table_(std::move(table)) {}

  PlayerId owner_;
  RankTable table_;
};

class Hypergame {
 public:
  // level 0 takes no views; levels 1 and 2 take one view per player.
  static Hypergame create(int level, BaseGame base, std::vector<SubjectiveGame> views);

  int level() const { return level_; }
  const BaseGame& base() const { return base_; }
  // Ordered as base().players().
  const std::vector<SubjectiveGame>& views() const { return views_; }
  const SubjectiveGame& view_of(const PlayerId& player) const;

  bool operator==(const Hypergame&) const = default;

 private:
  Hypergame(int level, BaseGame base, std::vector<SubjectiveGame> views)
      : level_(level), base_(std::move(base)), views_(std::move(views)) {}

  int level_ = 0;
  BaseGame base_;
  std::vector<SubjectiveGame> views_;
};

enum class OutcomeClass { T, R, P, S };

enum class Attitude { so, po, no, jo };

struct AttitudeTemplate {
  Attitude name;
  // Most preferred class first.
  std::array<OutcomeClass, 4> ordering;
};

std::span<const AttitudeTemplate> builtin_attitudes();
const AttitudeTemplate& attitude_template(Attitude attitude);
std::string_view to_string(Attitude attitude);
std::string_view to_string(OutcomeClass outcome);
std::optional<Attitude> parse_attitude(std::string_view token);

enum class SolutionConcept { strong_hne, weak_hne };

std::string_view to_string(SolutionConcept concept_);

enum class OwnActionPolicy { full_options, contains_own_component };

std::string_view to_string(OwnActionPolicy policy);

struct PlayerConstraints {
  PlayerId player;
  // Used verbatim as the player's only candidate.
  std::optional<SubjectiveGame> fixed_game;
  // Full-domain ranks restricted to each believed action space when rank
  // tables are not enumerated. Defaults to the ordinal base view.
  std::optional<RankTable> reference_ranks;
  std::optional<std::vector<Attitude>> own_rank_attitudes;
  std::optional<std::vector<Attitude>> believed_opponent_rank_attitudes;
  bool enumerate_rank_tables = false;
  bool enumerate_believed_opponent_actions = false;
  OwnActionPolicy own_action_policy = OwnActionPolicy::full_options;
  bool strict_ranks = true;
};

struct ConstraintSet {
  SolutionConcept solution_concept = SolutionConcept::strong_hne;
  int level = 2;
  // Players without an entry use a default-constructed entry.
  std::vector<PlayerConstraints> players;
  // Enumerating rank tables and opponent actions for the same player.
  bool allow_joint_enumeration = false;

  PlayerConstraints entry_for(const PlayerId& player) const;
};

struct PlayerOutcome {
  Player player;
  std::size_t action_spaces = 0;
  // Candidates produced by generation, before filtering.
  std::size_t generated = 0;
  // Candidates satisfying the solution concept.
  std::vector<SubjectiveGame> retained;
  // Retained candidates that also pass the level filter.
  std::vector<SubjectiveGame> admitted;
};

struct RationalisationResult {
  StrategyProfile target;
  SolutionConcept solution_concept = SolutionConcept::strong_hne;
  int level = 2;
  // Ordered as the base game's players.
  std::vector<PlayerOutcome> players;
  std::vector<Hypergame> hypergames;

  bool empty() const { return hypergames.empty(); }
};

}  // namespace hypergame

#endif  // HYPERGAME_MODEL_HPP_
