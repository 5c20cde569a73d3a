// src/error.cc

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

#include "contframe/error.hpp"

#include <cstdio>

namespace contframe {

const char *ErrcName(Errc code) {
  switch (code) {
    case Errc::kSpaceMismatch: return "SpaceMismatch";
    case Errc::kWrongSpaceKind: return "WrongSpaceKind";
    case Errc::kNonPositiveWeight: return "NonPositiveWeight";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kCountMismatch: return "CountMismatch";
    case Errc::kDimensionTooLarge: return "DimensionTooLarge";
    case Errc::kNotAFrame: return "NotAFrame";
    case Errc::kSolverDiverged: return "SolverDiverged";
    case Errc::kZeroVector: return "ZeroVector";
    case Errc::kBoundOrderViolation: return "BoundOrderViolation";
    case Errc::kNotAdmissible: return "NotAdmissible";
    case Errc::kZeroScale: return "ZeroScale";
    case Errc::kGridMismatch: return "GridMismatch";
    case Errc::kMissingAdmissibility: return "MissingAdmissibility";
    case Errc::kZeroWindow: return "ZeroWindow";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kIo: return "Io";
    case Errc::kParse: return "Parse";
  }
  return "Unknown";
}

void Fail(Errc code, const std::string &message) {
  throw Error(code, std::string(ErrcName(code)) + ": " + message);
}

std::string FormatReal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace contframe
