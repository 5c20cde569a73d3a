// include/contframe/construct.hpp

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

#ifndef CONTFRAME_CONSTRUCT_HPP_
#define CONTFRAME_CONSTRUCT_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "contframe/frame.hpp"
#include "contframe/hilbert.hpp"
#include "contframe/measure.hpp"

namespace contframe {

/// A finite (or truncated countable) family {f_k} in one space.
struct DiscreteSystem {
  struct Bounds {
    double lower = 0.0;
    double upper = 0.0;
  };
  std::vector<Vec> vectors;
  std::optional<Bounds> declared_bounds;

  const SpaceDescriptor &space() const { return vectors.front().space(); }
};

void ValidateSystem(const DiscreteSystem &sys);

/// The canonical basis e_1..e_dim of C^dim, declared Parseval.
DiscreteSystem OrthonormalBasis(std::size_t dim);

/// Step frame F(omega) = f_k / sqrt(mu(Omega_k)) on cell Omega_k: one node
/// per cell with weight mu(Omega_k). The weights cancel in the energy, so
/// sum_j w_j |<f, F_j>|^2 = sum_k |<f, f_k>|^2.
DiscretizedFrame StepFrame(const Partition &partition, const DiscreteSystem &sys);

/// Step frame over an orthonormal basis with one cell per basis vector.
DiscretizedFrame ParsevalStepFrame(const Partition &partition);

/// Step frame whose cells are groups of consecutive nodes of `layout`:
/// node block k (sizes as equal as possible) plays the role of Omega_k and
/// carries f_k / sqrt(mass of block k). The result shares layout's nodes
/// and weights, so it can be combined node-wise with layout.
DiscretizedFrame StepFrameOnNodes(const DiscretizedFrame &layout, const DiscreteSystem &sys);

/// {decay^m e_i : 0 <= m < levels, 1 <= i <= dim}, a tight frame with bound
/// sum_{m < levels} decay^{2m}; models a frame with infinitely many members
/// in finite dimension.
DiscreteSystem InfiniteMembersFiniteDim(std::size_t dim, std::size_t levels, double decay);

/// Step map over N cells of a system living in dimension > N. The lower
/// bound necessarily vanishes, leaving a Bessel map.
DiscretizedFrame BesselOnlyMap(const Partition &partition, const DiscreteSystem &sys);

/// Grid for the unbounded Bessel example. The core [-L, L] is cut into
/// `core_cells` equal cells; each half-line beyond L is covered by
/// geometric cells [L r^k, L r^{k+1}] with r = 2^(1/tail_voices) for
/// tail_octaves octaves. Nodes sit at cell midpoints.
struct UnboundedBesselGrid {
  double half_width = 10.0;
  std::size_t core_cells = 20;
  std::size_t tail_octaves = 40;
  std::size_t tail_voices = 1;

  /// Refinement level l: core_cells * 16^l cells, 2^l tail voices.
  UnboundedBesselGrid Refined(int level) const;
};

/// The profile b(x) = |x|^{-1/2} on 0 < |x| < 1, x^{-2} on |x| >= 1, b(0) = 0.
double UnboundedProfile(double x);
/// Exact integral of the profile over the real line.
inline constexpr double kUnboundedProfileMass = 6.0;

/// F(omega) = sqrt(b(omega)) h on the grid above.
DiscretizedFrame UnboundedBessel(const Vec &h, const UnboundedBesselGrid &grid = {});

/// Node-wise difference F - G of a Bessel map with bound B1 and a frame
/// with lower bound A2 > B1 over the same nodes and weights.
DiscretizedFrame UnboundedFrame(const DiscretizedFrame &bessel, const DiscretizedFrame &frame);

/// Node-wise scaling F_j -> s F_j.
DiscretizedFrame Scaled(const DiscretizedFrame &fr, double factor);

}  // namespace contframe

#endif  // CONTFRAME_CONSTRUCT_HPP_
