// include/contframe/error.hpp

// Copyright 2026  The contframe Authors

// See ../../COPYING for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTFRAME_ERROR_HPP_
#define CONTFRAME_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace contframe {

/// Failure categories raised by the toolkit. The numeric values are part of
/// the C ABI (see contframe.h) and must not be reordered.
enum class Errc : int {
  kSpaceMismatch = 1,
  kWrongSpaceKind = 2,
  kNonPositiveWeight = 3,
  kLengthMismatch = 4,
  kCountMismatch = 5,
  kDimensionTooLarge = 6,
  kNotAFrame = 7,
  kSolverDiverged = 8,
  kZeroVector = 9,
  kBoundOrderViolation = 10,
  kNotAdmissible = 11,
  kZeroScale = 12,
  kGridMismatch = 13,
  kMissingAdmissibility = 14,
  kZeroWindow = 15,
  kInvalidArgument = 16,
  kIo = 17,
  kParse = 18,
};

const char *ErrcName(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void Fail(Errc code, const std::string &message);

// Compact rendering of a real number for error messages (%.6g).
std::string FormatReal(double v);

}  // namespace contframe

#endif  // CONTFRAME_ERROR_HPP_
