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

#ifndef HYPERGAME_HYPERGAME_HPP_
#define HYPERGAME_HYPERGAME_HPP_

#include "hypergame/constraints.hpp"
#include "hypergame/dsl.hpp"
#include "hypergame/error.hpp"
#include "hypergame/model.hpp"
#include "hypergame/rationaliser.hpp"
#include "hypergame/solver.hpp"

#endif  // HYPERGAME_HYPERGAME_HPP_
