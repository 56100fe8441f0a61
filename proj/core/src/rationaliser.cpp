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

#include "hypergame/rationaliser.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "hypergame/solver.hpp"

namespace hypergame {

namespace {

constexpr std::size_t kFilterBatch = 4096;

std::string budget_message(double estimate, std::uint64_t budget) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "candidate estimate %.0f exceeds the limit of %llu", estimate,
                static_cast<unsigned long long>(budget));
  return buf;
}

// All strict rankings of n cells: permutations of 1..n in lexicographic order.
std::vector<std::vector<int>> strict_rankings(std::size_t n) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i) + 1;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// All dense weak rankings of n cells (every value in 1..max used), in
// lexicographic order.
void dense_rankings(std::size_t n, std::vector<int>& prefix, std::vector<int>& uses,
                    int current_max, std::vector<std::vector<int>>& out) {
  const std::size_t remaining = n - prefix.size();
  int distinct = 0;
  for (int v = 1; v <= current_max; ++v) distinct += uses[v] > 0;
  if (static_cast<std::size_t>(current_max - distinct) > remaining) return;
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int v = 1; v <= static_cast<int>(n); ++v) {
    prefix.push_back(v);
    ++uses[v];
    dense_rankings(n, prefix, uses, std::max(current_max, v), out);
    --uses[v];
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> dense_rankings(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::vector<int> uses(n + 1, 0);
  dense_rankings(n, prefix, uses, 0, out);
  return out;
}

double factorial(std::size_t n) {
  double f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

// Ordered Bell (Fubini) number: count of dense weak rankings of n cells.
double fubini(std::size_t n) {
  std::vector<double> a(n + 1, 0.0);
  a[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    double binom = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      binom = binom * static_cast<double>(m - k + 1) / static_cast<double>(k);
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

std::vector<std::vector<int>> admissible_rankings(const std::vector<OptionId>& rows,
                                                  const std::vector<OptionId>& cols,
                                                  const RankEnumeration& config, Role perspective,
                                                  const std::optional<std::vector<Attitude>>& attitudes) {
  const std::size_t cells = rows.size() * cols.size();
  auto all = config.strict ? strict_rankings(cells) : dense_rankings(cells);
  if (!attitudes) return all;
  if (!config.strict) throw ConfigError("attitude constraints require strict ranks");
  if (rows.size() != 2 || cols.size() != 2) {
    throw ConfigError("attitude constraint on a non-2x2 domain");
  }
  if (!config.frame) throw ConfigError("attitude constraints need a dilemma frame");
  std::vector<std::vector<int>> kept;
  for (auto& ranks : all) {
    std::vector<RankPair> pairs;
    for (int r : ranks) pairs.push_back({r, r});
    RankTable probe = RankTable::create(rows, cols, std::move(pairs));
    if (matches_any_attitude(probe, perspective, *attitudes, *config.frame)) {
      kept.push_back(std::move(ranks));
    }
  }
  return kept;
}

std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    // prev_permutation over a true-first mask walks combinations in
    // lexicographic order of their index sets.
    do {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (pick[i]) subset.push_back(i);
      }
      out.push_back(std::move(subset));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return out;
}

std::vector<OptionId> pick(const std::vector<OptionId>& options,
                           const std::vector<std::size_t>& indices) {
  std::vector<OptionId> out;
  for (auto i : indices) out.push_back(options[i]);
  return out;
}

const Player& require_player(const BaseGame& base, const PlayerId& id) {
  const Player* p = base.find_player(id);
  if (!p) throw ConfigError("unknown player '" + id.name + "'");
  return *p;
}

RankEnumeration rank_enumeration_for(const BaseGame& base, const PlayerConstraints& entry,
                                     Role role) {
  RankEnumeration config;
  config.owner_role = role;
  config.strict = entry.strict_ranks;
  config.own_attitudes = entry.own_rank_attitudes;
  config.opponent_attitudes = entry.believed_opponent_rank_attitudes;
  if (config.own_attitudes || config.opponent_attitudes) config.frame = dilemma_frame(base);
  return config;
}

double rankings_per_perspective(std::size_t cells, bool strict,
                                const std::optional<std::vector<Attitude>>& attitudes) {
  if (attitudes && strict && cells == 4) {
    std::set<Attitude> distinct(attitudes->begin(), attitudes->end());
    return static_cast<double>(distinct.size());
  }
  return strict ? factorial(cells) : fubini(cells);
}

template <typename Pred>
std::vector<SubjectiveGame> filter_batch(std::vector<SubjectiveGame>& batch, unsigned jobs,
                                         const Pred& keep_if) {
  std::vector<char> keep(batch.size(), 0);
  if (jobs <= 1 || batch.size() < 2 * static_cast<std::size_t>(jobs)) {
    for (std::size_t i = 0; i < batch.size(); ++i) keep[i] = keep_if(batch[i]);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (batch.size() + jobs - 1) / jobs;
    for (std::size_t start = 0; start < batch.size(); start += chunk) {
      const std::size_t stop = std::min(batch.size(), start + chunk);
      workers.emplace_back([&, start, stop] {
        for (std::size_t i = start; i < stop; ++i) keep[i] = keep_if(batch[i]);
      });
    }
  }
  std::vector<SubjectiveGame> kept;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (keep[i]) kept.push_back(std::move(batch[i]));
  }
  batch.clear();
  return kept;
}

}  // namespace

CandidateBudgetExceeded::CandidateBudgetExceeded(double estimate, std::uint64_t budget)
    : Error(budget_message(estimate, budget)), estimate_(estimate), budget_(budget) {}

void for_each_rank_table(const std::vector<OptionId>& rows, const std::vector<OptionId>& cols,
                         const RankEnumeration& config,
                         const std::function<void(RankTable)>& sink) {
  if (rows.empty() || cols.empty()) throw ConfigError("rank tables need non-empty action sets");
  const Role own = config.owner_role;
  const auto& row_attitudes = own == Role::row ? config.own_attitudes : config.opponent_attitudes;
  const auto& col_attitudes = own == Role::row ? config.opponent_attitudes : config.own_attitudes;
  auto row_side = admissible_rankings(rows, cols, config, Role::row, row_attitudes);
  auto col_side = admissible_rankings(rows, cols, config, Role::column, col_attitudes);
  for (const auto& rr : row_side) {
    for (const auto& cr : col_side) {
      std::vector<RankPair> pairs(rr.size());
      for (std::size_t i = 0; i < rr.size(); ++i) pairs[i] = {rr[i], cr[i]};
      sink(RankTable::create(rows, cols, std::move(pairs)));
    }
  }
}

std::vector<RankTable> enumerate_rank_tables(const std::vector<OptionId>& rows,
                                             const std::vector<OptionId>& cols,
                                             const RankEnumeration& config) {
  std::vector<RankTable> out;
  for_each_rank_table(rows, cols, config, [&](RankTable t) { out.push_back(std::move(t)); });
  return out;
}

std::vector<ActionSpace> enumerate_action_spaces(const BaseGame& base, const PlayerId& owner,
                                                 const StrategyProfile& target,
                                                 OwnActionPolicy policy,
                                                 bool enumerate_opponent) {
  const Role own = require_player(base, owner).role;
  const Role other = opposite(own);
  const auto& own_options = base.options(own);
  const auto& other_options = base.options(other);

  std::vector<std::vector<OptionId>> own_sides;
  if (policy == OwnActionPolicy::full_options) {
    own_sides.push_back(own_options);
  } else {
    auto target_index = base.index_of(own, target.action(own));
    if (!target_index) throw ConfigError("target action outside the base game");
    for (const auto& subset : subsets_by_size(own_options.size())) {
      if (std::find(subset.begin(), subset.end(), *target_index) != subset.end()) {
        own_sides.push_back(pick(own_options, subset));
      }
    }
  }

  std::vector<std::vector<OptionId>> other_sides;
  if (enumerate_opponent) {
    for (const auto& subset : subsets_by_size(other_options.size())) {
      other_sides.push_back(pick(other_options, subset));
    }
  } else {
    other_sides.push_back(other_options);
  }

  std::vector<ActionSpace> spaces;
  for (const auto& mine : own_sides) {
    for (const auto& theirs : other_sides) {
      if (own == Role::row) {
        spaces.push_back({mine, theirs});
      } else {
        spaces.push_back({theirs, mine});
      }
    }
  }
  return spaces;
}

void check_consistency(const ConstraintSet& constraints, const BaseGame& base) {
  if (constraints.level != 1 && constraints.level != 2) {
    throw ConfigError("rationalisation level must be 1 or 2");
  }
  std::set<PlayerId> seen;
  for (const auto& entry : constraints.players) {
    require_player(base, entry.player);
    if (!seen.insert(entry.player).second) {
      throw ConfigError("duplicate constraint entry for '" + entry.player.name + "'");
    }
    const std::string who = "'" + entry.player.name + "'";
    if (entry.fixed_game) {
      if (entry.enumerate_rank_tables || entry.enumerate_believed_opponent_actions) {
        throw ConfigError("fixed_game provided simultaneously with enumeration flags for " + who);
      }
      if (entry.fixed_game->owner() != entry.player) {
        throw ConfigError("fixed game for " + who + " is owned by another player");
      }
      if (entry.own_rank_attitudes || entry.believed_opponent_rank_attitudes) {
        throw ConfigError("attitude constraints cannot apply to the fixed game of " + who);
      }
    }
    if (entry.enumerate_rank_tables && entry.enumerate_believed_opponent_actions &&
        !constraints.allow_joint_enumeration) {
      throw ConfigError("joint enumeration of rank tables and opponent actions for " + who +
                        " needs explicit permission");
    }
    const bool attitudes = entry.own_rank_attitudes || entry.believed_opponent_rank_attitudes;
    if (attitudes) {
      if (!entry.enumerate_rank_tables) {
        throw ConfigError("attitude constraints for " + who + " require rank-table enumeration");
      }
      if (!entry.strict_ranks) {
        throw ConfigError("attitude constraints for " + who + " require strict ranks");
      }
      for (const auto* list : {&entry.own_rank_attitudes, &entry.believed_opponent_rank_attitudes}) {
        if (*list && (*list)->empty()) {
          throw ConfigError("empty attitude list for " + who);
        }
      }
      dilemma_frame(base);
    }
    if (entry.reference_ranks && (entry.reference_ranks->rows() != base.row_options() ||
                                  entry.reference_ranks->cols() != base.col_options())) {
      throw ConfigError("reference ranks for " + who + " must cover the full base game");
    }
  }
}

double estimate_candidates(const BaseGame& base, const StrategyProfile& target,
                           const PlayerConstraints& entry) {
  if (entry.fixed_game) return 1;
  const Role role = require_player(base, entry.player).role;
  const auto spaces = enumerate_action_spaces(base, entry.player, target, entry.own_action_policy,
                                              entry.enumerate_believed_opponent_actions);
  if (!entry.enumerate_rank_tables) return static_cast<double>(spaces.size());
  const auto& row_att = role == Role::row ? entry.own_rank_attitudes
                                          : entry.believed_opponent_rank_attitudes;
  const auto& col_att = role == Role::row ? entry.believed_opponent_rank_attitudes
                                          : entry.own_rank_attitudes;
  double total = 0;
  for (const auto& s : spaces) {
    const std::size_t cells = s.rows.size() * s.cols.size();
    total += rankings_per_perspective(cells, entry.strict_ranks, row_att) *
             rankings_per_perspective(cells, entry.strict_ranks, col_att);
  }
  return total;
}

void for_each_candidate(const BaseGame& base, const StrategyProfile& target,
                        const PlayerConstraints& entry,
                        const std::function<void(SubjectiveGame)>& sink) {
  const Role role = require_player(base, entry.player).role;
  const OptionId& own_action = target.action(role);

  if (entry.fixed_game) {
    if (entry.enumerate_rank_tables || entry.enumerate_believed_opponent_actions) {
      throw ConfigError("fixed_game provided simultaneously with enumeration flags for '" +
                        entry.player.name + "'");
    }
    if (!entry.fixed_game->table().index_of(role, own_action)) {
      throw ConfigError("fixed game for '" + entry.player.name + "' lacks its own target action '" +
                        own_action.name + "'");
    }
    sink(*entry.fixed_game);
    return;
  }

  const auto spaces = enumerate_action_spaces(base, entry.player, target, entry.own_action_policy,
                                              entry.enumerate_believed_opponent_actions);
  if (entry.enumerate_rank_tables) {
    const RankEnumeration config = rank_enumeration_for(base, entry, role);
    for (const auto& s : spaces) {
      for_each_rank_table(s.rows, s.cols, config, [&](RankTable t) {
        sink(SubjectiveGame::create(base, entry.player, std::move(t)));
      });
    }
    return;
  }

  const RankTable reference =
      entry.reference_ranks ? *entry.reference_ranks : ordinal_from_cardinal(base);
  for (const auto& s : spaces) {
    sink(SubjectiveGame::create(base, entry.player, reference.restrict_to(s.rows, s.cols)));
  }
}

std::vector<SubjectiveGame> generate_candidates(const BaseGame& base,
                                                const StrategyProfile& target,
                                                const PlayerConstraints& entry) {
  std::vector<SubjectiveGame> out;
  for_each_candidate(base, target, entry, [&](SubjectiveGame g) { out.push_back(std::move(g)); });
  return out;
}

bool satisfies_concept(const SubjectiveGame& candidate, const StrategyProfile& target,
                       SolutionConcept solution_concept, Role player_role) {
  if (solution_concept == SolutionConcept::strong_hne) {
    return is_nash_equilibrium(candidate.table(), target);
  }
  return in_nash_component(candidate.table(), player_role, target.action(player_role));
}

std::vector<SubjectiveGame> filter_candidates(const std::vector<SubjectiveGame>& candidates,
                                              const StrategyProfile& target,
                                              SolutionConcept solution_concept,
                                              Role player_role) {
  std::vector<SubjectiveGame> kept;
  for (const auto& c : candidates) {
    if (satisfies_concept(c, target, solution_concept, player_role)) kept.push_back(c);
  }
  return kept;
}

std::vector<Hypergame> assemble_hypergames(
    const BaseGame& base, const std::vector<std::vector<SubjectiveGame>>& per_player_retained,
    int level) {
  if (level != 1 && level != 2) throw ConfigError("hypergames are assembled at level 1 or 2");
  if (per_player_retained.size() != base.players().size()) {
    throw ConfigError("expected retained candidates for both players");
  }
  std::vector<std::vector<SubjectiveGame>> admitted;
  for (const auto& list : per_player_retained) {
    std::vector<SubjectiveGame> keep;
    for (const auto& g : list) {
      if (level == 2 || is_symmetric_expectation(base, g)) keep.push_back(g);
    }
    admitted.push_back(std::move(keep));
  }
  std::vector<Hypergame> out;
  for (const auto& first : admitted[0]) {
    for (const auto& second : admitted[1]) {
      out.push_back(Hypergame::create(level, base, {first, second}));
    }
  }
  return out;
}

RationalisationResult rationalise(const BaseGame& base, const StrategyProfile& target,
                                  const ConstraintSet& constraints,
                                  const RationaliseOptions& options) {
  if (!base.contains(target)) {
    ValidationReport report = validate_problem(base.describe(), target);
    throw ValidationError(std::move(report.violations));
  }
  check_consistency(constraints, base);

  std::vector<PlayerConstraints> entries;
  double estimate = 0;
  for (const auto& p : base.players()) {
    entries.push_back(constraints.entry_for(p.id));
    estimate += estimate_candidates(base, target, entries.back());
  }
  if (options.max_candidates && estimate > static_cast<double>(*options.max_candidates)) {
    throw CandidateBudgetExceeded(estimate, *options.max_candidates);
  }

  RationalisationResult result;
  result.target = target;
  result.solution_concept = constraints.solution_concept;
  result.level = constraints.level;

  std::vector<std::vector<SubjectiveGame>> retained;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const Player& player = base.players()[i];
    const PlayerConstraints& entry = entries[i];
    PlayerOutcome outcome;
    outcome.player = player;
    outcome.action_spaces =
        entry.fixed_game ? 1
                         : enumerate_action_spaces(base, player.id, target, entry.own_action_policy,
                                                   entry.enumerate_believed_opponent_actions)
                               .size();

    auto keep_if = [&](const SubjectiveGame& g) {
      return satisfies_concept(g, target, constraints.solution_concept, player.role);
    };
    std::vector<SubjectiveGame> batch;
    auto flush = [&] {
      for (auto& g : filter_batch(batch, options.jobs, keep_if)) {
        outcome.retained.push_back(std::move(g));
      }
    };
    for_each_candidate(base, target, entry, [&](SubjectiveGame g) {
      ++outcome.generated;
      batch.push_back(std::move(g));
      if (batch.size() >= kFilterBatch) flush();
    });
    flush();

    for (const auto& g : outcome.retained) {
      if (constraints.level == 2 || is_symmetric_expectation(base, g)) outcome.admitted.push_back(g);
    }
    retained.push_back(outcome.retained);
    result.players.push_back(std::move(outcome));
  }

  result.hypergames = assemble_hypergames(base, retained, constraints.level);

  for (const auto& h : result.hypergames) {
    const bool ok = constraints.solution_concept == SolutionConcept::strong_hne
                        ? is_strong_hne(h, target)
                        : is_weak_hne(h, target);
    if (!ok) throw std::logic_error("assembled hypergame fails the configured solution concept");
  }
  return result;
}

}  // namespace hypergame
