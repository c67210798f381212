// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MTV_LIMITS_HPP_
#define MTV_LIMITS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>

#include "mtv/errors.hpp"

namespace mtv {

// Resource caps and parallelism shared by every expensive operation.
struct Limits {
  static constexpr std::uint64_t kDefaultMaxFaces = 5'000'000;
  static constexpr std::uint64_t kDefaultMaxTuples = 50'000'000;

  std::uint64_t max_faces = kDefaultMaxFaces;  // per dimension
  std::uint64_t max_tuples = kDefaultMaxTuples;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  int threads = 1;

  void check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      throw ResourceLimitError("time limit exceeded");
    }
  }
};

}  // namespace mtv

#endif  // MTV_LIMITS_HPP_
