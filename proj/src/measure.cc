// src/measure.cc

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

#include "contframe/measure.hpp"

#include <cmath>
#include <set>
#include <string>

#include "contframe/error.hpp"

namespace contframe {

double Partition::total() const {
  double acc = 0.0;
  for (const auto &c : cells) acc += c.weight;
  return acc;
}

std::vector<double> Partition::weights() const {
  std::vector<double> w;
  w.reserve(cells.size());
  for (const auto &c : cells) w.push_back(c.weight);
  return w;
}

Partition MakePartition(std::span<const double> weights, bool truncated) {
  Partition p;
  p.truncated = truncated;
  p.cells.reserve(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!std::isfinite(weights[i]) || !(weights[i] > 0.0))
      Fail(Errc::kNonPositiveWeight, "cell weight at index " + std::to_string(i) +
                                         " is not a positive finite number");
    p.cells.push_back({static_cast<int>(i), weights[i]});
  }
  if (p.cells.empty()) Fail(Errc::kInvalidArgument, "partition needs at least one cell");
  return p;
}

void ValidatePartition(const Partition &p) {
  if (p.cells.empty()) Fail(Errc::kInvalidArgument, "partition needs at least one cell");
  std::set<int> ids;
  for (std::size_t i = 0; i < p.cells.size(); ++i) {
    const Cell &c = p.cells[i];
    if (!std::isfinite(c.weight) || !(c.weight > 0.0))
      Fail(Errc::kNonPositiveWeight, "cell weight at index " + std::to_string(i) +
                                         " is not a positive finite number");
    if (!ids.insert(c.id).second)
      Fail(Errc::kInvalidArgument, "duplicate cell id " + std::to_string(c.id));
  }
}

Partition SigmaFiniteCover(CoverRule rule, std::size_t count) {
  if (count < 1) Fail(Errc::kInvalidArgument, "cover needs K >= 1");
  if (rule.kind == CoverRule::Kind::kGeometric &&
      (!std::isfinite(rule.ratio) || !(rule.ratio > 0.0)))
    Fail(Errc::kInvalidArgument, "geometric cover needs ratio r > 0");
  std::vector<double> w(count);
  for (std::size_t k = 0; k < count; ++k)
    w[k] = rule.kind == CoverRule::Kind::kUnit
               ? 1.0
               : std::pow(rule.ratio, static_cast<double>(k));
  return MakePartition(w, true);
}

}  // namespace contframe
