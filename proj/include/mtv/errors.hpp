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

#ifndef MTV_ERRORS_HPP_
#define MTV_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mtv {

// Malformed or out-of-range user input (bad ids, bad files, invalid specs).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its domain, e.g. the link of a loop.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configured cap (faces, tuples, wall time) was exceeded. `progress`
// carries the amount of work completed when the cap fired.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t progress = 0)
      : std::runtime_error(what), progress_(progress) {}
  std::uint64_t progress() const { return progress_; }

 private:
  std::uint64_t progress_;
};

}  // namespace mtv

#endif  // MTV_ERRORS_HPP_
