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

#ifndef HYPERGAME_TESTS_SUPPORT_ORACLES_HPP_
#define HYPERGAME_TESTS_SUPPORT_ORACLES_HPP_

// Brute-force reference computations. They work on plain integer grids and
// never call into the solver, so they can check it independently.

#include <algorithm>
#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hypergame/model.hpp"

namespace hypergame::testing {

struct Grid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> row_rank;  // row-major
  std::vector<int> col_rank;

  int r(std::size_t i, std::size_t j) const { return row_rank[i * cols + j]; }
  int c(std::size_t i, std::size_t j) const { return col_rank[i * cols + j]; }
};

inline Grid grid_of(const RankTable& t) {
  Grid g{t.row_count(), t.col_count(), {}, {}};
  for (const auto& p : t.cells()) {
    g.row_rank.push_back(p.row);
    g.col_rank.push_back(p.col);
  }
  return g;
}

// A cell is an equilibrium when neither player has a strictly better
// unilateral deviation.
inline std::vector<std::pair<std::size_t, std::size_t>> brute_force_nash(const Grid& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (std::size_t j = 0; j < g.cols; ++j) {
      bool deviation = false;
      for (std::size_t k = 0; k < g.rows && !deviation; ++k) deviation = g.r(k, j) > g.r(i, j);
      for (std::size_t k = 0; k < g.cols && !deviation; ++k) deviation = g.c(i, k) > g.c(i, j);
      if (!deviation) out.emplace_back(i, j);
    }
  }
  return out;
}

// Outcome classes of a 2x2 dilemma with cooperate first, by cell position.
// Index order: (C,C), (C,D), (D,C), (D,D).
inline std::array<OutcomeClass, 4> positional_classes(Role perspective) {
  using enum OutcomeClass;
  if (perspective == Role::row) return {R, S, T, P};
  return {R, T, S, P};
}

inline std::vector<std::array<int, 4>> all_strict_rankings() {
  std::array<int, 4> v{1, 2, 3, 4};
  std::vector<std::array<int, 4>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

inline std::string random_symbol(std::mt19937& rng, const std::string& prefix) {
  static const char* kTail = "abcdefghijklmnopqrstuvwxyz0123456789_";
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> ch(0, 36);
  std::string s = prefix;
  for (int i = len(rng); i > 0; --i) s += kTail[ch(rng)];
  return s;
}

inline RankTable random_table(std::mt19937& rng, std::size_t max_side = 4, int max_rank = 9) {
  std::uniform_int_distribution<std::size_t> side(1, max_side);
  std::uniform_int_distribution<int> rank(0, max_rank);
  const std::size_t rows = side(rng);
  const std::size_t cols = side(rng);
  std::vector<OptionId> r;
  std::vector<OptionId> c;
  for (std::size_t i = 0; i < rows; ++i) r.push_back({"r" + std::to_string(i)});
  for (std::size_t i = 0; i < cols; ++i) c.push_back({"c" + std::to_string(i)});
  std::vector<RankPair> ranks;
  for (std::size_t i = 0; i < rows * cols; ++i) ranks.push_back({rank(rng), rank(rng)});
  return RankTable::create(r, c, ranks);
}

}  // namespace hypergame::testing

#endif  // HYPERGAME_TESTS_SUPPORT_ORACLES_HPP_
