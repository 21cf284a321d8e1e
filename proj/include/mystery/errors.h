// Copyright 2026 The Data Mystery Authors
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

#ifndef MYSTERY_ERRORS_H_
#define MYSTERY_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mystery {

enum class ErrorCode {
  kParseError,
  kSchemaVersionMismatch,
  kEntityNotFound,
  kVictimNotFound,
  kVictimNotPerson,
  kSourceUnavailable,
  kPoolExhausted,
  kInsufficientCandidates,
  kNoSolvablePuzzle,
  kNoPathFound,
  kSuspectCollision,
  kNoCityAvailable,
  kUnreachableObject,
  kMissingBinding,
  kInvalidDefinition,
  kIllegalAction,
  kGameOver,
  kMalformedWarrant,
  kUnsolvable,
  kInvalidArgument,
};

std::string_view ErrorCodeName(ErrorCode code);

// All recoverable failures in the library are reported as Error. The code
// lets callers (the CLI, the HTTP service) map failures to exit codes and
// status codes without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  // The message without the code prefix.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace mystery

#endif  // MYSTERY_ERRORS_H_
