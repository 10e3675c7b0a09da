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

#ifndef NLASSO_SRC_CHECKS_HPP_
#define NLASSO_SRC_CHECKS_HPP_

#include <cstddef>
#include <string>

#include "nlasso/error.hpp"

namespace nlasso::internal {

inline void CheckLength(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(ErrorKind::kDimensionMismatch, std::string(what) + " has length " +
                                                   std::to_string(got) + ", expected " +
                                                   std::to_string(want));
  }
}

}  // namespace nlasso::internal

#endif  // NLASSO_SRC_CHECKS_HPP_
