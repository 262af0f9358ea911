// Copyright 2026 The nkaec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NKAEC_ERROR_H_
#define NKAEC_ERROR_H_

#include <stdexcept>
#include <string>

namespace nkaec {

// Base class for every error the library raises deliberately.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define NKAEC_DEFINE_ERROR(Name)              \
  class Name : public Error {                 \
   public:                                    \
    using Error::Error;                       \
  };

NKAEC_DEFINE_ERROR(EmptyInput)       // an operation received an empty signal/spectrogram
NKAEC_DEFINE_ERROR(InvalidConfig)    // a config violates its invariants
NKAEC_DEFINE_ERROR(IndexError)       // frame/bin index out of range
NKAEC_DEFINE_ERROR(ShapeError)       // operand dimensions do not match
NKAEC_DEFINE_ERROR(DegenerateInput)  // zero-energy input where a ratio is required
NKAEC_DEFINE_ERROR(NumericalError)   // non-finite values reached a numeric kernel
NKAEC_DEFINE_ERROR(ConfigError)      // user-facing configuration problem (CLI, files)
NKAEC_DEFINE_ERROR(IoError)          // filesystem / file-format failure

#undef NKAEC_DEFINE_ERROR

}  // namespace nkaec

#endif  // NKAEC_ERROR_H_
