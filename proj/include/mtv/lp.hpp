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

#ifndef MTV_LP_HPP_
#define MTV_LP_HPP_

#include <optional>
#include <vector>

#include "mtv/rational.hpp"

namespace mtv {

// Feasibility of { x >= 0 : A x = b } over Q by the phase-1 simplex method
// with Bland's smallest-index rule. Returns a basic feasible solution.
std::optional<std::vector<Rational>> find_nonnegative_solution(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace mtv

#endif  // MTV_LP_HPP_
