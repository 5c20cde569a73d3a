// include/contframe/verify.hpp

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

#ifndef CONTFRAME_VERIFY_HPP_
#define CONTFRAME_VERIFY_HPP_

#include <json.hpp>

namespace contframe {

struct SuiteOptions {
  enum class Scale { kSmall, kFull };
  Scale scale = Scale::kSmall;
  double tol_recon = 1e-8;
};

/// Runs the end-to-end checks (one entry per acceptance criterion) and
/// returns {"tool", "version", "scale", "tolerances", "checks": [...],
/// "all_pass"}. Check failures are report entries, never exceptions. The
/// report contains no timing or other run-dependent values.
nlohmann::json RunVerifySuite(const SuiteOptions &opts);

/// One suite entry, id in 1..10 (11 is the suite-level determinism check).
nlohmann::json RunCheck(int id, const SuiteOptions &opts);

}  // namespace contframe

#endif  // CONTFRAME_VERIFY_HPP_
