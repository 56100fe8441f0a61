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

#ifndef HYPERGAME_ERROR_HPP_
#define HYPERGAME_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace hypergame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a value would be constructed with a violated invariant.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

// Inconsistent rationalisation configuration (flags, constraint sets).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypergame

#endif  // HYPERGAME_ERROR_HPP_
