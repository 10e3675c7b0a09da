// Copyright 2026 The nlasso Authors.
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

#include "nlasso/error.hpp"

namespace nlasso {

std::string_view ToString(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidEdge: return "InvalidEdge";
    case ErrorKind::kDuplicateEdge: return "DuplicateEdge";
    case ErrorKind::kInvalidWeight: return "InvalidWeight";
    case ErrorKind::kInvalidNode: return "InvalidNode";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNotAugmented: return "NotAugmented";
    case ErrorKind::kIsolatedNode: return "IsolatedNode";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kInvalidProblem: return "InvalidProblem";
    case ErrorKind::kSeedsOutsideCluster: return "SeedsOutsideCluster";
    case ErrorKind::kDisconnected: return "Disconnected";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kInvalidOverride: return "InvalidOverride";
    case ErrorKind::kCountTooLarge: return "CountTooLarge";
    case ErrorKind::kMalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace nlasso
