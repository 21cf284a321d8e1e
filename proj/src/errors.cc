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

#include "mystery/errors.h"

namespace mystery {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kSchemaVersionMismatch: return "SchemaVersionMismatch";
    case ErrorCode::kEntityNotFound: return "EntityNotFound";
    case ErrorCode::kVictimNotFound: return "VictimNotFound";
    case ErrorCode::kVictimNotPerson: return "VictimNotPerson";
    case ErrorCode::kSourceUnavailable: return "SourceUnavailable";
    case ErrorCode::kPoolExhausted: return "PoolExhausted";
    case ErrorCode::kInsufficientCandidates: return "InsufficientCandidates";
    case ErrorCode::kNoSolvablePuzzle: return "NoSolvablePuzzle";
    case ErrorCode::kNoPathFound: return "NoPathFound";
    case ErrorCode::kSuspectCollision: return "SuspectCollision";
    case ErrorCode::kNoCityAvailable: return "NoCityAvailable";
    case ErrorCode::kUnreachableObject: return "UnreachableObject";
    case ErrorCode::kMissingBinding: return "MissingBinding";
    case ErrorCode::kInvalidDefinition: return "InvalidDefinition";
    case ErrorCode::kIllegalAction: return "IllegalAction";
    case ErrorCode::kGameOver: return "GameOver";
    case ErrorCode::kMalformedWarrant: return "MalformedWarrant";
    case ErrorCode::kUnsolvable: return "Unsolvable";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mystery
