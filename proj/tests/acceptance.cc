// tests/acceptance.cc

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

// Acceptance run: one PASS/FAIL line per criterion, full-scale sizes,
// runtime limits enforced here (timings never enter the suite reports).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "contframe/verify.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  const char *title;
  double time_limit_s;  // <= 0: no limit stated
};

constexpr Criterion kCriteria[] = {
    {1, "Parseval construction, dims 2..64 x 20 partitions", 5.0},
    {2, "bound transfer, 50 random frames in dims 2..32", 0.0},
    {3, "factorization S = T T*", 0.0},
    {4, "sigma-finite support bound and nesting", 0.0},
    {5, "Bessel-only case, N = 4 cells in dim 16", 0.0},
    {6, "unbounded Bessel map, 4 refinements", 10.0},
    {7, "norm-unbounded frame, B1 = 0.01", 0.0},
    {8, "CWT tight frame, Mexican hat", 60.0},
    {9, "admissibility vs 10x finer grid; Gaussian rejected", 0.0},
    {10, "STFT orthogonality relation", 30.0},
};

std::string Brief(const json &metrics) {
  std::string s = metrics.dump();
  if (s.size() > 220) s = s.substr(0, 217) + "...";
  return s;
}

}  // namespace

int main() {
  contframe::SuiteOptions full;
  full.scale = contframe::SuiteOptions::Scale::kFull;
  int failed = 0;

  for (const Criterion &c : kCriteria) {
    const auto t0 = Clock::now();
    const json entry = contframe::RunCheck(c.id, full);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const bool in_time = c.time_limit_s <= 0.0 || secs < c.time_limit_s;
    const bool pass = entry["pass"].get<bool>() && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s criterion %d: %s [%.2fs%s] %s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                in_time ? "" : " over limit", Brief(entry["metrics"]).c_str());
  }

  // 11: repeated small-suite runs give byte-identical reports with one
  // entry per criterion.
  contframe::SuiteOptions small;
  const std::string a = contframe::RunVerifySuite(small).dump(2);
  const std::string b = contframe::RunVerifySuite(small).dump(2);
  const json report = json::parse(a);
  bool ids_ok = report["checks"].size() == 11;
  for (std::size_t i = 0; ids_ok && i < report["checks"].size(); ++i)
    ids_ok = report["checks"][i]["id"].get<int>() == static_cast<int>(i + 1);
  const bool pass11 = a == b && ids_ok && report["all_pass"].get<bool>();
  failed += pass11 ? 0 : 1;
  std::printf("%s criterion 11: determinism of repeated small-suite reports [%zu bytes, %s, %s]\n",
              pass11 ? "PASS" : "FAIL", a.size(), a == b ? "identical" : "DIFFERENT",
              ids_ok ? "one entry per criterion" : "entry list wrong");

  std::printf("%d of 11 criteria passed\n", 11 - failed);
  return failed == 0 ? 0 : 1;
}
