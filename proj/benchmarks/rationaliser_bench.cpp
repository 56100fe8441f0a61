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

#include <benchmark/benchmark.h>

#include "hypergame/hypergame.hpp"

using namespace hypergame;

namespace {

BaseGame pd_game() {
  GameDescription g;
  g.players = {{{"alice"}, Role::row}, {{"bob"}, Role::column}};
  g.row_options = {{"cooperate"}, {"defect"}};
  g.col_options = {{"cooperate"}, {"defect"}};
  g.payoffs = {{{{"cooperate"}, {"cooperate"}}, {3, 3}},
               {{{"cooperate"}, {"defect"}}, {0, 5}},
               {{{"defect"}, {"cooperate"}}, {5, 0}},
               {{{"defect"}, {"defect"}}, {1, 1}}};
  return BaseGame::create(g);
}

ConstraintSet enumerate_both(std::optional<std::vector<Attitude>> attitudes) {
  ConstraintSet cs;
  for (const char* name : {"alice", "bob"}) {
    PlayerConstraints e;
    e.player = {name};
    e.enumerate_rank_tables = true;
    e.own_rank_attitudes = attitudes;
    e.believed_opponent_rank_attitudes = attitudes;
    cs.players.push_back(e);
  }
  return cs;
}

const StrategyProfile kCC{{"cooperate"}, {"cooperate"}};

void BM_RationaliseAttitudes(benchmark::State& state) {
  BaseGame base = pd_game();
  ConstraintSet cs = enumerate_both(std::vector{Attitude::po, Attitude::jo});
  for (auto _ : state) benchmark::DoNotOptimize(rationalise(base, kCC, cs));
}
BENCHMARK(BM_RationaliseAttitudes);

// All 576 strict tables per player; the range is the job count.
void BM_RationaliseUnconstrained(benchmark::State& state) {
  BaseGame base = pd_game();
  ConstraintSet cs = enumerate_both(std::nullopt);
  RationaliseOptions options;
  options.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rationalise(base, kCC, cs, options));
}
BENCHMARK(BM_RationaliseUnconstrained)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_DenseWeakOrders(benchmark::State& state) {
  RankEnumeration weak;
  weak.strict = false;
  std::vector<OptionId> rows{{"a"}};
  std::vector<OptionId> cols{{"w"}, {"x"}, {"y"}, {"z"}};
  for (auto _ : state) {
    std::size_t n = 0;
    for_each_rank_table(rows, cols, weak, [&](RankTable) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_DenseWeakOrders)->Unit(benchmark::kMillisecond);

}  // namespace
