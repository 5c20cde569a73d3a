// src/gabor.cc

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

#include "contframe/gabor.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contframe/error.hpp"
#include "parallel.hpp"

namespace contframe {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool NearInteger(double v, long long *out) {
  const double r = std::round(v);
  if (std::abs(v - r) > 1e-9 * std::max(1.0, std::abs(v))) return false;
  *out = static_cast<long long>(r);
  return true;
}

// Frequencies g_m land on bin (first + m * step) mod size of a length-size
// transform when g_m = (first + m * step) / (size dx).
struct BinPlan {
  std::size_t size = 0;
  long long first = 0;
  long long step = 0;
};

std::optional<BinPlan> PlanBins(std::size_t n, double dx, const TimeFreqGrid &grid) {
  for (std::size_t size = n; size <= 64 * n; ++size) {
    const double span = static_cast<double>(size) * dx;
    BinPlan plan{size, 0, 0};
    if (NearInteger(grid.dg * span, &plan.step) && NearInteger(grid.gmin * span, &plan.first))
      return plan;
  }
  return std::nullopt;
}

std::size_t BinIndex(const BinPlan &plan, std::size_t m) {
  const auto size = static_cast<long long>(plan.size);
  long long k = (plan.first + static_cast<long long>(m) * plan.step) % size;
  if (k < 0) k += size;
  return static_cast<std::size_t>(k);
}

void RequireCompatible(const Vec &f, const WindowSpec &win) {
  const SpaceDescriptor &fs = f.space();
  const SpaceDescriptor &gs = win.g.space();
  if (!fs.is_sampled() || fs.domain() != SpaceDescriptor::Domain::kTime ||
      !gs.is_sampled() || gs.domain() != SpaceDescriptor::Domain::kTime)
    Fail(Errc::kGridMismatch, "signal and window must be time-domain sampled vectors");
  if (std::abs(fs.step() - gs.step()) > 1e-9 * fs.step())
    Fail(Errc::kGridMismatch, "signal and window grids use different sample spacing");
}

}  // namespace

WindowSpec MakeWindow(Vec g) {
  const double n2 = NormSquared(g);
  if (n2 == 0.0) Fail(Errc::kZeroWindow, "window must be nonzero");
  return {std::move(g), n2};
}

WindowSpec GaussianWindow(const SpaceDescriptor &grid) {
  const double amp = std::pow(2.0, 0.25);
  return MakeWindow(Vec::Sample(grid, [&](double t) {
    return Complex(amp * std::exp(-std::numbers::pi * t * t));
  }));
}

TimeFreqGrid MakeTimeFreqGrid(double ymin, double ymax, double dy, double gmin, double gmax,
                              double dg) {
  if (!(dy > 0.0) || !(dg > 0.0)) Fail(Errc::kInvalidArgument, "grid steps must be positive");
  if (!(ymax >= ymin) || !(gmax >= gmin)) Fail(Errc::kInvalidArgument, "empty grid range");
  TimeFreqGrid g;
  g.ymin = ymin;
  g.dy = dy;
  g.ny = static_cast<std::size_t>(std::floor((ymax - ymin) / dy + 1e-9)) + 1;
  g.gmin = gmin;
  g.dg = dg;
  g.ng = static_cast<std::size_t>(std::floor((gmax - gmin) / dg + 1e-9)) + 1;
  return g;
}

CoefficientField Stft(const Vec &f, const WindowSpec &win, const TimeFreqGrid &grid) {
  RequireCompatible(f, win);
  const SpaceDescriptor &s = f.space();
  const std::size_t n = s.length();
  const double dx = s.step();
  const auto plan = PlanBins(n, dx, grid);

  CoefficientField field;
  field.layout = CoefficientField::Layout::kTimeFrequency;
  field.signal_space = s;
  for (std::size_t m = 0; m < grid.ng; ++m) {
    field.row_coords.push_back(grid.gamma(m));
    field.row_masses.push_back(grid.dg);
  }
  for (std::size_t l = 0; l < grid.ny; ++l) field.col_coords.push_back(grid.y(l));
  field.col_mass = grid.dy;
  field.values.assign(grid.ng * grid.ny, Complex(0.0, 0.0));

  std::vector<Complex> phase(grid.ng);
  for (std::size_t m = 0; m < grid.ng; ++m)
    phase[m] = std::polar(dx, -kTwoPi * s.xmin() * grid.gamma(m));

  internal::ParallelFor(grid.ny, [&](std::size_t l) {
    const double y = grid.y(l);
    std::vector<Complex> h(plan ? plan->size : n, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) h[j] = f[j] * std::conj(Interpolate(win.g, s.x(j) - y));
    if (plan) {
      Fft(h, false);
      for (std::size_t m = 0; m < grid.ng; ++m)
        field.values[m * grid.ny + l] = h[BinIndex(*plan, m)] * phase[m];
    } else {
      for (std::size_t m = 0; m < grid.ng; ++m) {
        Complex acc(0.0, 0.0);
        const double gm = grid.gamma(m);
        for (std::size_t j = 0; j < n; ++j)
          acc += h[j] * std::polar(1.0, -kTwoPi * static_cast<double>(j) * dx * gm);
        field.values[m * grid.ny + l] = acc * phase[m];
      }
    }
  });
  return field;
}

Vec Istft(const CoefficientField &field, const WindowSpec &win) {
  if (win.norm_sq == 0.0) Fail(Errc::kZeroWindow, "window must be nonzero");
  if (field.layout != CoefficientField::Layout::kTimeFrequency)
    Fail(Errc::kGridMismatch, "Istft needs a time-frequency field");
  const SpaceDescriptor &s = field.signal_space;
  RequireCompatible(Vec(s), win);
  const std::size_t n = s.length();
  const double dx = s.step();
  const std::size_t ng = field.rows();
  const std::size_t ny = field.cols();
  if (ng == 0 || ny == 0) return Vec(s);

  TimeFreqGrid grid;
  grid.gmin = field.row_coords.front();
  grid.dg = ng > 1 ? field.row_coords[1] - field.row_coords[0] : field.row_masses.front();
  grid.ng = ng;
  const auto plan = PlanBins(n, dx, grid);

  std::vector<Complex> phase(ng);
  for (std::size_t m = 0; m < ng; ++m)
    phase[m] = std::polar(1.0, kTwoPi * s.xmin() * field.row_coords[m]);

  std::vector<std::vector<Complex>> cols(ny);
  internal::ParallelFor(ny, [&](std::size_t l) {
    std::vector<Complex> acc(n, Complex(0.0, 0.0));
    if (plan) {
      std::vector<Complex> bins(plan->size, Complex(0.0, 0.0));
      for (std::size_t m = 0; m < ng; ++m)
        bins[BinIndex(*plan, m)] += field.at(m, l) * field.weight(m) * phase[m];
      Fft(bins, true);
      std::copy(bins.begin(), bins.begin() + static_cast<std::ptrdiff_t>(n), acc.begin());
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        Complex sum(0.0, 0.0);
        for (std::size_t m = 0; m < ng; ++m)
          sum += field.at(m, l) * field.weight(m) *
                 std::polar(1.0, kTwoPi * s.x(j) * field.row_coords[m]);
        acc[j] = sum;
      }
    }
    const double y = field.col_coords[l];
    for (std::size_t j = 0; j < n; ++j) acc[j] *= Interpolate(win.g, s.x(j) - y);
    cols[l] = std::move(acc);
  });

  std::vector<Complex> out(n, Complex(0.0, 0.0));
  for (const auto &c : cols)
    for (std::size_t j = 0; j < n; ++j) out[j] += c[j];
  for (auto &e : out) e /= win.norm_sq;
  return Vec(s, std::move(out));
}

OrthogonalityCheck OrthogonalityRelation(const Vec &f1, const Vec &f2, const WindowSpec &g1,
                                         const WindowSpec &g2, const TimeFreqGrid &grid) {
  if (f1.space() != f2.space()) Fail(Errc::kGridMismatch, "f1 and f2 use different grids");
  if (g1.g.space() != g2.g.space()) Fail(Errc::kGridMismatch, "g1 and g2 use different grids");
  const CoefficientField a = Stft(f1, g1, grid);
  const CoefficientField b = Stft(f2, g2, grid);
  OrthogonalityCheck out;
  for (std::size_t m = 0; m < a.rows(); ++m) {
    Complex row(0.0, 0.0);
    for (std::size_t l = 0; l < a.cols(); ++l) row += a.at(m, l) * std::conj(b.at(m, l));
    out.lhs += row * a.weight(m);
  }
  out.rhs = Inner(f1, f2) * Inner(g2.g, g1.g);
  const double scale = Norm(f1) * Norm(f2) * Norm(g1.g) * Norm(g2.g);
  out.gap = std::abs(out.lhs - out.rhs) / (scale > 0.0 ? scale : 1.0);
  return out;
}

DiscretizedFrame GaborFrame(const WindowSpec &win, const TimeFreqGrid &grid,
                            const SpaceDescriptor &signal) {
  RequireCompatible(Vec(signal), win);
  std::vector<IndexPoint> nodes;
  std::vector<double> weights;
  std::vector<Complex> data;
  data.reserve(grid.ny * grid.ng * signal.length());
  for (std::size_t m = 0; m < grid.ng; ++m) {
    for (std::size_t l = 0; l < grid.ny; ++l) {
      nodes.push_back({grid.y(l), grid.gamma(m)});
      weights.push_back(grid.weight());
      for (std::size_t j = 0; j < signal.length(); ++j) {
        const double x = signal.x(j);
        data.push_back(std::polar(1.0, kTwoPi * grid.gamma(m) * x) *
                       Interpolate(win.g, x - grid.y(l)));
      }
    }
  }
  return DiscretizedFrame(signal, std::move(nodes), std::move(weights), std::move(data));
}

}  // namespace contframe
