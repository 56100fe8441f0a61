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

#ifndef HYPERGAME_DSL_HPP_
#define HYPERGAME_DSL_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypergame/model.hpp"

namespace hypergame::dsl {

struct SourcePos {
  int line = 0;  // 1-based; 0 when the problem has no single source location
  int column = 0;

  auto operator<=>(const SourcePos&) const = default;
};

struct Diagnostic {
  SourcePos pos;
  std::string message;
};

std::string format(const Diagnostic& diagnostic, std::string_view source_name = {});

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct Term {
  enum class Kind { symbol, number };

  Kind kind = Kind::symbol;
  std::string text;  // as written
  double value = 0.0;
  bool integral = false;
  SourcePos pos;
};

struct Fact {
  std::string predicate;
  std::vector<Term> args;
  SourcePos pos;
};

// The predicates of the vocabulary, in canonical order, with their arities.
struct PredicateInfo {
  std::string_view name;
  std::size_t arity;
};
const std::vector<PredicateInfo>& vocabulary();

// Lexes and parses ground facts, checking predicate names and arities.
std::vector<Fact> parse_facts(std::string_view text);

struct FactSpan {
  std::string predicate;
  SourcePos pos;
};

struct ProblemSpec {
  BaseGame base;
  std::optional<StrategyProfile> target;
  // Views assembled from `utility`/`action` facts; row role first.
  std::vector<SubjectiveGame> declared_views;
  // Not part of structural equality.
  std::vector<FactSpan> spans;
  std::vector<Diagnostic> warnings;

  const SubjectiveGame* declared_view(Role role) const;

  bool operator==(const ProblemSpec& other) const {
    return base == other.base && target == other.target &&
           declared_views == other.declared_views;
  }
};

// Throws ParseError carrying every positioned diagnostic found.
ProblemSpec parse(std::string_view text);

// Canonical text: facts grouped by predicate in vocabulary order, one per
// line, LF endings.
std::string render(const ProblemSpec& spec);

std::string format_number(double value);

}  // namespace hypergame::dsl

#endif  // HYPERGAME_DSL_HPP_
