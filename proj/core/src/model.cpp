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

#include "hypergame/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "hypergame/constraints.hpp"

namespace hypergame {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

std::optional<std::size_t> find_index(const std::vector<OptionId>& options,
                                      const OptionId& option) {
  auto it = std::find(options.begin(), options.end(), option);
  if (it == options.end()) return std::nullopt;
  return static_cast<std::size_t>(it - options.begin());
}

void check_option_list(const std::vector<OptionId>& options, Role role,
                       std::vector<std::string>& out) {
  if (options.empty()) {
    out.push_back("no " + std::string(to_string(role)) + " options declared");
  }
  std::set<OptionId> seen;
  for (const auto& o : options) {
    if (!is_symbol(o.name)) {
      out.push_back("invalid option token " + quoted(o.name));
    }
    if (!seen.insert(o).second) {
      out.push_back("duplicate " + std::string(to_string(role)) + " option " +
                    quoted(o.name));
    }
  }
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

bool is_symbol(std::string_view token) {
  if (token.empty() || token[0] < 'a' || token[0] > 'z') return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

Role opposite(Role role) { return role == Role::row ? Role::column : Role::row; }

std::string_view to_string(Role role) { return role == Role::row ? "row" : "column"; }

std::optional<Role> parse_role(std::string_view token) {
  if (token == "row") return Role::row;
  if (token == "column") return Role::column;
  return std::nullopt;
}

ValidationReport validate_problem(const GameDescription& game,
                                  const std::optional<StrategyProfile>& target) {
  ValidationReport report;
  auto& out = report.violations;

  if (game.players.size() != 2) {
    out.push_back("expected exactly 2 players, found " +
                  std::to_string(game.players.size()));
  }
  std::set<PlayerId> ids;
  int row_holders = 0;
  int col_holders = 0;
  for (const auto& p : game.players) {
    if (!is_symbol(p.id.name)) out.push_back("invalid player token " + quoted(p.id.name));
    if (!ids.insert(p.id).second) out.push_back("duplicate player " + quoted(p.id.name));
    (p.role == Role::row ? row_holders : col_holders)++;
  }
  if (game.players.size() == 2 && (row_holders != 1 || col_holders != 1)) {
    out.push_back("conflicting role assignment: each role needs exactly one player");
  }

  check_option_list(game.row_options, Role::row, out);
  check_option_list(game.col_options, Role::column, out);

  const std::size_t rows = game.row_options.size();
  const std::size_t cols = game.col_options.size();
  std::vector<int> filled(rows * cols, 0);
  for (const auto& [profile, payoff] : game.payoffs) {
    auto r = find_index(game.row_options, profile.row_action);
    auto c = find_index(game.col_options, profile.col_action);
    if (!r) out.push_back("payoff references undeclared row option " + quoted(profile.row_action.name));
    if (!c) out.push_back("payoff references undeclared column option " + quoted(profile.col_action.name));
    if (!std::isfinite(payoff.row) || !std::isfinite(payoff.col)) {
      out.push_back("non-finite payoff at (" + profile.row_action.name + ", " +
                    profile.col_action.name + ")");
    }
    if (r && c && ++filled[*r * cols + *c] == 2) {
      out.push_back("duplicate payoff cell (" + profile.row_action.name + ", " +
                    profile.col_action.name + ")");
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (filled[r * cols + c] == 0) {
        out.push_back("incomplete payoff table: missing (" + game.row_options[r].name +
                      ", " + game.col_options[c].name + ")");
      }
    }
  }

  if (target) {
    if (!find_index(game.row_options, target->row_action)) {
      out.push_back("unknown row action " + quoted(target->row_action.name));
    }
    if (!find_index(game.col_options, target->col_action)) {
      out.push_back("unknown column action " + quoted(target->col_action.name));
    }
  }
  return report;
}

BaseGame BaseGame::create(const GameDescription& game) {
  ValidationReport report = validate_problem(game);
  if (!report.ok()) throw ValidationError(std::move(report.violations));

  BaseGame base;
  base.players_ = {game.players[0], game.players[1]};
  base.row_options_ = game.row_options;
  base.col_options_ = game.col_options;
  base.payoffs_.resize(game.row_options.size() * game.col_options.size());
  for (const auto& [profile, payoff] : game.payoffs) {
    auto r = *find_index(game.row_options, profile.row_action);
    auto c = *find_index(game.col_options, profile.col_action);
    base.payoffs_[r * game.col_options.size() + c] = payoff;
  }
  return base;
}

const Player& BaseGame::player(Role role) const {
  return players_[0].role == role ? players_[0] : players_[1];
}

const Player* BaseGame::find_player(const PlayerId& id) const {
  for (const auto& p : players_) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

std::optional<std::size_t> BaseGame::index_of(Role role, const OptionId& option) const {
  return find_index(options(role), option);
}

bool BaseGame::contains(const StrategyProfile& profile) const {
  return index_of(Role::row, profile.row_action) && index_of(Role::column, profile.col_action);
}

GameDescription BaseGame::describe() const {
  GameDescription game;
  game.players = {players_[0], players_[1]};
  game.row_options = row_options_;
  game.col_options = col_options_;
  for (std::size_t r = 0; r < row_options_.size(); ++r) {
    for (std::size_t c = 0; c < col_options_.size(); ++c) {
      game.payoffs.push_back({{row_options_[r], col_options_[c]}, payoff(r, c)});
    }
  }
  return game;
}

RankTable RankTable::create(std::vector<OptionId> rows, std::vector<OptionId> cols,
                            std::vector<RankPair> ranks) {
  std::vector<std::string> out;
  check_option_list(rows, Role::row, out);
  check_option_list(cols, Role::column, out);
  if (ranks.size() != rows.size() * cols.size()) {
    out.push_back("rank table has " + std::to_string(ranks.size()) + " cells, expected " +
                  std::to_string(rows.size() * cols.size()));
  }
  for (const auto& p : ranks) {
    if (p.row < 0 || p.col < 0) {
      out.push_back("ranks must be non-negative");
      break;
    }
  }
  if (!out.empty()) throw ValidationError(std::move(out));

  RankTable table;
  table.rows_ = std::move(rows);
  table.cols_ = std::move(cols);
  table.ranks_ = std::move(ranks);
  return table;
}

std::optional<std::size_t> RankTable::index_of(Role role, const OptionId& option) const {
  return find_index(actions(role), option);
}

std::optional<RankPair> RankTable::find(const StrategyProfile& profile) const {
  auto r = index_of(Role::row, profile.row_action);
  auto c = index_of(Role::column, profile.col_action);
  if (!r || !c) return std::nullopt;
  return at(*r, *c);
}

bool RankTable::is_strict() const {
  const std::size_t n = ranks_.size();
  std::vector<bool> seen_row(n + 1, false);
  std::vector<bool> seen_col(n + 1, false);
  for (const auto& p : ranks_) {
    if (p.row < 1 || static_cast<std::size_t>(p.row) > n || seen_row[p.row]) return false;
    if (p.col < 1 || static_cast<std::size_t>(p.col) > n || seen_col[p.col]) return false;
    seen_row[p.row] = true;
    seen_col[p.col] = true;
  }
  return true;
}

RankTable RankTable::restrict_to(const std::vector<OptionId>& rows,
                                 const std::vector<OptionId>& cols) const {
  std::vector<RankPair> ranks;
  ranks.reserve(rows.size() * cols.size());
  std::vector<std::string> missing;
  for (const auto& r : rows) {
    auto ri = index_of(Role::row, r);
    if (!ri) missing.push_back("row action " + quoted(r.name) + " outside rank table");
    for (const auto& c : cols) {
      auto ci = index_of(Role::column, c);
      if (!ri || !ci) continue;
      ranks.push_back(at(*ri, *ci));
    }
  }
  for (const auto& c : cols) {
    if (!index_of(Role::column, c)) {
      missing.push_back("column action " + quoted(c.name) + " outside rank table");
    }
  }
  if (!missing.empty()) throw ValidationError(std::move(missing));
  return create(rows, cols, std::move(ranks));
}

SubjectiveGame SubjectiveGame::create(const BaseGame& base, PlayerId owner, RankTable table) {
  std::vector<std::string> out;
  if (!base.find_player(owner)) out.push_back("unknown player " + quoted(owner.name));
  for (Role role : {Role::row, Role::column}) {
    for (const auto& a : table.actions(role)) {
      if (!base.index_of(role, a)) {
        out.push_back("believed " + std::string(to_string(role)) + " action " +
                      quoted(a.name) + " is not a base option");
      }
    }
  }
  if (!out.empty()) throw ValidationError(std::move(out));
  return SubjectiveGame(std::move(owner), std::move(table));
}

Hypergame Hypergame::create(int level, BaseGame base, std::vector<SubjectiveGame> views) {
  std::vector<std::string> out;
  if (level < 0 || level > 2) {
    throw ValidationError({"hypergame level must be 0, 1 or 2"});
  }
  if (level == 0) {
    if (!views.empty()) out.push_back("level-0 hypergame takes no subjective views");
    if (!out.empty()) throw ValidationError(std::move(out));
    return Hypergame(level, std::move(base), {});
  }

  std::vector<SubjectiveGame> ordered;
  for (const auto& p : base.players()) {
    auto it = std::find_if(views.begin(), views.end(),
                           [&](const SubjectiveGame& g) { return g.owner() == p.id; });
    if (it == views.end()) {
      out.push_back("missing subjective view for " + quoted(p.id.name));
      continue;
    }
    if (std::count_if(views.begin(), views.end(),
                      [&](const SubjectiveGame& g) { return g.owner() == p.id; }) > 1) {
      out.push_back("duplicate subjective view for " + quoted(p.id.name));
    }
    if (level == 1 && !is_symmetric_expectation(base, *it)) {
      out.push_back("view of " + quoted(p.id.name) +
                    " fails the symmetric-expectation test required at level 1");
    }
    ordered.push_back(*it);
  }
  if (views.size() > ordered.size() && out.empty()) {
    out.push_back("subjective view owned by a non-player");
  }
  if (!out.empty()) throw ValidationError(std::move(out));
  return Hypergame(level, std::move(base), std::move(ordered));
}

const SubjectiveGame& Hypergame::view_of(const PlayerId& player) const {
  for (const auto& v : views_) {
    if (v.owner() == player) return v;
  }
  throw Error("no subjective view for '" + player.name + "'");
}

namespace {

using enum OutcomeClass;

constexpr std::array<AttitudeTemplate, 4> kAttitudes = {{
    {Attitude::so, {T, R, P, S}},
    {Attitude::po, {S, R, P, T}},
    {Attitude::no, {T, P, R, S}},
    {Attitude::jo, {R, T, P, S}},
}};

}  // namespace

std::span<const AttitudeTemplate> builtin_attitudes() { return kAttitudes; }

const AttitudeTemplate& attitude_template(Attitude attitude) {
  return kAttitudes[static_cast<std::size_t>(attitude)];
}

std::string_view to_string(Attitude attitude) {
  switch (attitude) {
    case Attitude::so: return "so";
    case Attitude::po: return "po";
    case Attitude::no: return "no";
    case Attitude::jo: return "jo";
  }
  return "?";
}

std::string_view to_string(OutcomeClass outcome) {
  switch (outcome) {
    case T: return "T";
    case R: return "R";
    case P: return "P";
    case S: return "S";
  }
  return "?";
}

std::optional<Attitude> parse_attitude(std::string_view token) {
  for (const auto& t : kAttitudes) {
    if (to_string(t.name) == token) return t.name;
  }
  return std::nullopt;
}

std::string_view to_string(SolutionConcept concept_) {
  return concept_ == SolutionConcept::strong_hne ? "strong_hne" : "weak_hne";
}

std::string_view to_string(OwnActionPolicy policy) {
  return policy == OwnActionPolicy::full_options ? "full_options" : "contains_own_component";
}

PlayerConstraints ConstraintSet::entry_for(const PlayerId& player) const {
  for (const auto& e : players) {
    if (e.player == player) return e;
  }
  PlayerConstraints entry;
  entry.player = player;
  return entry;
}

}  // namespace hypergame
