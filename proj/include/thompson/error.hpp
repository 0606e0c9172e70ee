// Copyright 2026 The thompson-gradients Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

enum class ErrorCode {
  InvalidArgument,     // malformed input (parse errors, bad shapes)
  ArityMismatch,       // operands belong to different F_{n,inf}
  ZeroCharacter,       // a nonzero character was required
  ConjectureRequired,  // Sigma^m for n >= 3, m >= 3 without the opt-in flag
  ResourceLimit,       // index cap, enumeration cap, integer overflow
  Precondition,        // documented precondition violated
  InvariantViolation,  // an internal consistency check failed
  ChainExhausted,      // explicit chain has no term s
  SeriesTooShort,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, ErrorCode code, const char* what) {
  if (!condition) throw Error(code, what);
}

}  // namespace thompson
