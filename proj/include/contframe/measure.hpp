// include/contframe/measure.hpp

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

#ifndef CONTFRAME_MEASURE_HPP_
#define CONTFRAME_MEASURE_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace contframe {

/// One cell Omega_k of a partition together with its measure mu(Omega_k).
struct Cell {
  int id = 0;
  double weight = 0.0;
};

/// A disjoint decomposition of an index set into cells of positive finite
/// measure. A truncated partition stands for the first `cells.size()` cells
/// of a countable cover of an infinite-measure set; its total is then the
/// measure of the truncation, never infinity.
struct Partition {
  std::vector<Cell> cells;
  bool truncated = false;

  std::size_t size() const { return cells.size(); }
  /// Sum of the cell weights (of the truncation when truncated).
  double total() const;
  /// The truncation index K; equals size() for truncated partitions, 0 otherwise.
  std::size_t truncation_index() const { return truncated ? cells.size() : 0; }
  std::vector<double> weights() const;
};

/// Builds a partition with cells in input order and ids 0..n-1.
/// Throws NonPositiveWeight naming the first offending index.
Partition MakePartition(std::span<const double> weights, bool truncated = false);

/// Checks positivity, finiteness and id uniqueness.
void ValidatePartition(const Partition &p);

struct CoverRule {
  enum class Kind { kUnit, kGeometric };
  Kind kind = Kind::kUnit;
  double ratio = 1.0;

  static CoverRule Unit() { return {}; }
  static CoverRule Geometric(double r) { return {Kind::kGeometric, r}; }
};

/// First K cells of a sigma-finite cover: unit weights, or r^k for k < K.
Partition SigmaFiniteCover(CoverRule rule, std::size_t count);

}  // namespace contframe

#endif  // CONTFRAME_MEASURE_HPP_
