// Copyright 2026 The symprod Authors
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

#ifndef SYMPROD_CORE_ERROR_HPP_
#define SYMPROD_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace symprod {

// Numeric values are part of the C ABI (see symprod.h); append only.
enum class ErrorCode : int {
  kEmptyInput = 1,
  kNonFiniteCoordinate = 2,
  kDimensionMismatch = 3,
  kNegativeParameter = 4,
  kDiameterViolation = 5,
  kCapacityExceeded = 6,
  kBadRange = 7,
  kNonUnitDirection = 8,
  kDegenerateFamily = 9,
  kPreconditionViolated = 10,
  kDecompositionFailed = 11,
  kDegenerateSample = 12,
  kOverflow = 13,
  kParseError = 14,
  kSchemaError = 15,
};

std::string_view error_code_name(ErrorCode code);

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

}  // namespace symprod

#endif  // SYMPROD_CORE_ERROR_HPP_
