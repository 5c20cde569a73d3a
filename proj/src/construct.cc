// src/construct.cc

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

#include "contframe/construct.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "contframe/error.hpp"

namespace contframe {

namespace {

DiscretizedFrame FromNodes(const SpaceDescriptor &space, std::vector<IndexPoint> nodes,
                           std::vector<double> weights, const std::vector<Vec> &vectors) {
  std::vector<Complex> data;
  data.reserve(vectors.size() * space.length());
  for (const auto &v : vectors) data.insert(data.end(), v.entries().begin(), v.entries().end());
  return DiscretizedFrame(space, std::move(nodes), std::move(weights), std::move(data));
}

}  // namespace

void ValidateSystem(const DiscreteSystem &sys) {
  if (sys.vectors.empty()) Fail(Errc::kInvalidArgument, "discrete system is empty");
  for (const auto &v : sys.vectors)
    if (v.space() != sys.vectors.front().space())
      Fail(Errc::kSpaceMismatch, "system vectors live in different spaces");
}

DiscreteSystem OrthonormalBasis(std::size_t dim) {
  DiscreteSystem sys;
  for (std::size_t i = 0; i < dim; ++i) sys.vectors.push_back(Vec::Basis(dim, i));
  sys.declared_bounds = DiscreteSystem::Bounds{1.0, 1.0};
  return sys;
}

DiscretizedFrame StepFrame(const Partition &partition, const DiscreteSystem &sys) {
  ValidatePartition(partition);
  ValidateSystem(sys);
  if (partition.size() != sys.vectors.size())
    Fail(Errc::kCountMismatch, std::to_string(partition.size()) + " cells but " +
                                   std::to_string(sys.vectors.size()) + " vectors");
  std::vector<IndexPoint> nodes;
  std::vector<double> weights;
  std::vector<Vec> vectors;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    const Cell &cell = partition.cells[k];
    nodes.push_back({static_cast<double>(cell.id), 0.0});
    weights.push_back(cell.weight);
    vectors.push_back((1.0 / std::sqrt(cell.weight)) * sys.vectors[k]);
  }
  return FromNodes(sys.space(), std::move(nodes), std::move(weights), vectors);
}

DiscretizedFrame ParsevalStepFrame(const Partition &partition) {
  return StepFrame(partition, OrthonormalBasis(partition.size()));
}

DiscretizedFrame StepFrameOnNodes(const DiscretizedFrame &layout, const DiscreteSystem &sys) {
  ValidateSystem(sys);
  const std::size_t n = layout.node_count();
  const std::size_t k = sys.vectors.size();
  if (n < k)
    Fail(Errc::kCountMismatch, "layout has fewer nodes than the system has vectors");
  const SpaceDescriptor &space = sys.space();
  std::vector<Complex> data(n * space.length());
  for (std::size_t b = 0; b < k; ++b) {
    const std::size_t begin = b * n / k;
    const std::size_t end = (b + 1) * n / k;
    double mass = 0.0;
    for (std::size_t j = begin; j < end; ++j) mass += layout.weights()[j];
    const double scale = 1.0 / std::sqrt(mass);
    for (std::size_t j = begin; j < end; ++j)
      for (std::size_t i = 0; i < space.length(); ++i)
        data[j * space.length() + i] = scale * sys.vectors[b][i];
  }
  auto nodes = layout.nodes();
  auto weights = layout.weights();
  return DiscretizedFrame(space, {nodes.begin(), nodes.end()}, {weights.begin(), weights.end()},
                          std::move(data));
}

DiscreteSystem InfiniteMembersFiniteDim(std::size_t dim, std::size_t levels, double decay) {
  if (dim < 1 || levels < 1) Fail(Errc::kInvalidArgument, "dim and levels must be >= 1");
  if (!(decay > 0.0 && decay < 1.0)) Fail(Errc::kInvalidArgument, "decay must lie in (0, 1)");
  DiscreteSystem sys;
  double bound = 0.0;
  double scale = 1.0;
  for (std::size_t m = 0; m < levels; ++m) {
    for (std::size_t i = 0; i < dim; ++i) sys.vectors.push_back(scale * Vec::Basis(dim, i));
    bound += scale * scale;
    scale *= decay;
  }
  sys.declared_bounds = DiscreteSystem::Bounds{bound, bound};
  return sys;
}

DiscretizedFrame BesselOnlyMap(const Partition &partition, const DiscreteSystem &sys) {
  ValidateSystem(sys);
  if (partition.truncated)
    Fail(Errc::kInvalidArgument, "the Bessel-only construction needs a finite partition");
  if (partition.size() != sys.vectors.size())
    Fail(Errc::kCountMismatch, std::to_string(partition.size()) + " cells but " +
                                   std::to_string(sys.vectors.size()) + " vectors");
  if (sys.space().length() <= partition.size())
    Fail(Errc::kInvalidArgument, "ambient dimension must exceed the number of cells");
  return StepFrame(partition, sys);
}

UnboundedBesselGrid UnboundedBesselGrid::Refined(int level) const {
  UnboundedBesselGrid g = *this;
  for (int l = 0; l < level; ++l) {
    g.core_cells *= 16;
    g.tail_voices *= 2;
  }
  return g;
}

double UnboundedProfile(double x) {
  const double ax = std::abs(x);
  if (ax == 0.0) return 0.0;
  return ax < 1.0 ? 1.0 / std::sqrt(ax) : 1.0 / (ax * ax);
}

DiscretizedFrame UnboundedBessel(const Vec &h, const UnboundedBesselGrid &grid) {
  if (NormSquared(h) == 0.0) Fail(Errc::kZeroVector, "h must be nonzero");
  if (!(grid.half_width > 0.0)) Fail(Errc::kInvalidArgument, "half_width must be positive");
  if (grid.core_cells < 2 || grid.core_cells % 2 != 0)
    Fail(Errc::kInvalidArgument, "core_cells must be even so that 0 is a cell boundary");
  if (grid.tail_octaves > 0 && grid.tail_voices < 1)
    Fail(Errc::kInvalidArgument, "tail_voices must be >= 1");

  std::vector<IndexPoint> nodes;
  std::vector<double> weights;
  const double ratio = std::pow(2.0, 1.0 / static_cast<double>(std::max<std::size_t>(1, grid.tail_voices)));
  const std::size_t tail = grid.tail_octaves * grid.tail_voices;
  const double L = grid.half_width;
  auto tail_cell = [&](std::size_t k) {
    const double lo = L * std::pow(ratio, static_cast<double>(k));
    const double hi = L * std::pow(ratio, static_cast<double>(k + 1));
    return std::make_pair(0.5 * (lo + hi), hi - lo);
  };
  nodes.reserve(grid.core_cells + 2 * tail);
  weights.reserve(grid.core_cells + 2 * tail);
  for (std::size_t k = tail; k-- > 0;) {
    auto [mid, width] = tail_cell(k);
    nodes.push_back({-mid, 0.0});
    weights.push_back(width);
  }
  const double width = 2.0 * L / static_cast<double>(grid.core_cells);
  for (std::size_t i = 0; i < grid.core_cells; ++i) {
    const double mid = -L + width * (static_cast<double>(i) + 0.5);
    if (std::abs(std::abs(mid) - 1.0) < 1e-12)
      Fail(Errc::kInvalidArgument, "a midpoint node falls on |x| = 1");
    nodes.push_back({mid, 0.0});
    weights.push_back(width);
  }
  for (std::size_t k = 0; k < tail; ++k) {
    auto [mid, w] = tail_cell(k);
    nodes.push_back({mid, 0.0});
    weights.push_back(w);
  }

  const std::size_t d = h.size();
  std::vector<Complex> data(nodes.size() * d);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double amp = std::sqrt(UnboundedProfile(nodes[j].first));
    for (std::size_t i = 0; i < d; ++i) data[j * d + i] = amp * h[i];
  }
  return DiscretizedFrame(h.space(), std::move(nodes), std::move(weights), std::move(data));
}

DiscretizedFrame UnboundedFrame(const DiscretizedFrame &bessel, const DiscretizedFrame &frame) {
  if (bessel.space() != frame.space())
    Fail(Errc::kSpaceMismatch, "the two maps live in different spaces");
  if (bessel.node_count() != frame.node_count())
    Fail(Errc::kLengthMismatch, "the two maps use different node sets");
  for (std::size_t j = 0; j < bessel.node_count(); ++j) {
    const double a = bessel.weights()[j];
    const double b = frame.weights()[j];
    if (std::abs(a - b) > 1e-12 * std::max(a, b))
      Fail(Errc::kLengthMismatch, "node " + std::to_string(j) + " has different weights");
  }
  const double b1 = FrameBounds(bessel).upper;
  const double a2 = FrameBounds(frame).lower;
  if (!(b1 < a2))
    Fail(Errc::kBoundOrderViolation, "Bessel bound " + FormatReal(b1) +
                                         " is not below the lower frame bound " +
                                         FormatReal(a2));
  std::vector<Complex> data(bessel.node_count() * bessel.dim());
  for (std::size_t j = 0; j < bessel.node_count(); ++j) {
    auto f = bessel.vector(j);
    auto g = frame.vector(j);
    for (std::size_t i = 0; i < f.size(); ++i) data[j * f.size() + i] = f[i] - g[i];
  }
  auto nodes = bessel.nodes();
  auto weights = bessel.weights();
  return DiscretizedFrame(bessel.space(), {nodes.begin(), nodes.end()},
                          {weights.begin(), weights.end()}, std::move(data));
}

DiscretizedFrame Scaled(const DiscretizedFrame &fr, double factor) {
  std::vector<Complex> data;
  data.reserve(fr.node_count() * fr.dim());
  for (std::size_t j = 0; j < fr.node_count(); ++j)
    for (const auto &e : fr.vector(j)) data.push_back(factor * e);
  auto nodes = fr.nodes();
  auto weights = fr.weights();
  return DiscretizedFrame(fr.space(), {nodes.begin(), nodes.end()},
                          {weights.begin(), weights.end()}, std::move(data));
}

}  // namespace contframe
