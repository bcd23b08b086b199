// Copyright 2026 The SSG Coherence Authors.
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

#ifndef SSG_ERROR_H_
#define SSG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssg {

enum class ErrorCode {
  kEmptyDocument,
  kFormatError,
  kDimensionMismatch,
  kZeroVector,
  kSameSentence,
  kTooShort,
  kEmptyEligibleSet,
  kUnsupportedApproach,
  kConfigError,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures surface as ssg::Error. what() is prefixed with the
// code name, e.g. "EmptyEligibleSet: no document has at least 2 sentences".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ssg

#endif  // SSG_ERROR_H_
