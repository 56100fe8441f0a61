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

#ifndef HYPERGAME_TESTS_SUPPORT_GENERATORS_HPP_
#define HYPERGAME_TESTS_SUPPORT_GENERATORS_HPP_

// Random inputs shared by the property tests and the acceptance suite.

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hypergame/hypergame.hpp"
#include "support/oracles.hpp"

namespace hypergame::testing {

inline std::vector<OptionId> random_options(std::mt19937& rng, const std::string& prefix,
                                     std::size_t count) {
  std::set<std::string> seen;
  std::vector<OptionId> out;
  while (out.size() < count) {
    auto s = random_symbol(rng, prefix);
    if (seen.insert(s).second) out.push_back({s});
  }
  return out;
}

inline std::vector<OptionId> random_subset(std::mt19937& rng, const std::vector<OptionId>& all) {
  std::vector<OptionId> out;
  std::bernoulli_distribution keep(0.6);
  for (const auto& o : all) {
    if (keep(rng)) out.push_back(o);
  }
  if (out.empty()) out.push_back(all[rng() % all.size()]);
  return out;
}

inline dsl::ProblemSpec random_spec(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> side(1, 4);
  std::uniform_int_distribution<int> payoff(-20, 20);
  std::uniform_int_distribution<int> rank(0, 9);
  std::bernoulli_distribution coin(0.5);

  GameDescription g;
  std::string p1 = random_symbol(rng, "p");
  std::string p2;
  do {
    p2 = random_symbol(rng, "q");
  } while (p2 == p1);
  if (coin(rng)) {
    g.players = {{{p1}, Role::row}, {{p2}, Role::column}};
  } else {
    g.players = {{{p1}, Role::column}, {{p2}, Role::row}};
  }
  g.row_options = random_options(rng, "a", side(rng));
  // Sometimes share tokens across roles, as the prisoner's dilemma does.
  g.col_options = coin(rng) ? random_options(rng, "b", side(rng)) : g.row_options;
  for (const auto& r : g.row_options) {
    for (const auto& c : g.col_options) {
      double u = payoff(rng);
      double v = coin(rng) ? payoff(rng) : payoff(rng) / 4.0;
      g.payoffs.push_back({{r, c}, {u, v}});
    }
  }
  BaseGame base = BaseGame::create(g);

  std::optional<StrategyProfile> target;
  if (coin(rng)) {
    target = StrategyProfile{g.row_options[rng() % g.row_options.size()],
                             g.col_options[rng() % g.col_options.size()]};
  }
  std::vector<SubjectiveGame> views;
  for (Role role : {Role::row, Role::column}) {
    if (!coin(rng)) continue;
    auto rows = random_subset(rng, g.row_options);
    auto cols = random_subset(rng, g.col_options);
    std::vector<RankPair> ranks;
    for (std::size_t i = 0; i < rows.size() * cols.size(); ++i) ranks.push_back({rank(rng), rank(rng)});
    views.push_back(SubjectiveGame::create(base, base.player(role).id,
                                           RankTable::create(rows, cols, ranks)));
  }
  return dsl::ProblemSpec{std::move(base), target, std::move(views), {}, {}};
}

inline Hypergame random_hypergame(std::mt19937& rng, const BaseGame& base) {
  // Views over random subsets of the base with ranks in 0..3 so that
  // ties and equilibria are common.
  std::uniform_int_distribution<int> rank(0, 3);
  std::vector<SubjectiveGame> views;
  for (const auto& p : base.players()) {
    std::vector<OptionId> rows;
    std::vector<OptionId> cols;
    for (const auto& o : base.row_options()) {
      if (rng() % 3 != 0) rows.push_back(o);
    }
    for (const auto& o : base.col_options()) {
      if (rng() % 3 != 0) cols.push_back(o);
    }
    if (rows.empty()) rows.push_back(base.row_options()[rng() % base.row_options().size()]);
    if (cols.empty()) cols.push_back(base.col_options()[rng() % base.col_options().size()]);
    std::vector<RankPair> ranks;
    for (std::size_t i = 0; i < rows.size() * cols.size(); ++i) ranks.push_back({rank(rng), rank(rng)});
    views.push_back(SubjectiveGame::create(base, p.id, RankTable::create(rows, cols, ranks)));
  }
  return Hypergame::create(2, base, views);
}

}  // namespace hypergame::testing

#endif  // HYPERGAME_TESTS_SUPPORT_GENERATORS_HPP_
