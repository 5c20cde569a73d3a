// src/wavelet.cc

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

#include "contframe/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "contframe/error.hpp"
#include "parallel.hpp"

namespace contframe {

namespace {

void RequireTimeSampled(const Vec &v, const char *what) {
  if (!v.space().is_sampled() || v.space().domain() != SpaceDescriptor::Domain::kTime)
    Fail(Errc::kWrongSpaceKind, std::string(what) + " must be a time-domain sampled vector");
}

// psi_a(t) = |a|^{-1/2} psi(t / a).
Complex Dilated(const Vec &psi, double a, double t) {
  return Interpolate(psi, t / a) / std::sqrt(std::abs(a));
}

struct AdmissibilitySum {
  double positive = 0.0;
  double negative = 0.0;
  double adjacent = 0.0;
  double dc = 0.0;
};

AdmissibilitySum SumOverBins(const Vec &psi, std::size_t padding) {
  const SpaceDescriptor &s = psi.space();
  const std::size_t n = s.length() * padding;
  std::vector<Complex> padded(n, Complex(0.0, 0.0));
  std::copy(psi.entries().begin(), psi.entries().end(), padded.begin());
  const Vec spectrum = Dft(Vec(
      SpaceDescriptor::Sampled(s.xmin(), s.xmin() + static_cast<double>(n) * s.step(), n),
      std::move(padded)));
  const SpaceDescriptor &fs = spectrum.space();
  const std::size_t zero = n / 2;
  AdmissibilitySum sum;
  sum.dc = std::abs(spectrum[zero]);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == zero) continue;
    const double g = fs.x(k);
    const double term = std::norm(spectrum[k]) / std::abs(g) * fs.step();
    (g > 0.0 ? sum.positive : sum.negative) += term;
    if (k + 1 == zero || k == zero + 1) sum.adjacent += term;
  }
  return sum;
}

}  // namespace

double CoefficientField::Energy() const {
  double acc = 0.0;
  for (std::size_t i = 0; i < rows(); ++i) {
    double row = 0.0;
    for (std::size_t l = 0; l < cols(); ++l) row += std::norm(at(i, l));
    acc += row * weight(i);
  }
  return acc;
}

WaveletSpec MexicanHat(const SpaceDescriptor &grid) {
  return {Vec::Sample(grid, [](double t) { return Complex((1.0 - t * t) * std::exp(-0.5 * t * t)); }),
          std::nullopt};
}

WaveletSpec Morlet(const SpaceDescriptor &grid, double omega0) {
  const double norm = std::pow(std::numbers::pi, -0.25);
  return {Vec::Sample(grid,
                      [&](double t) {
                        return norm * std::exp(-0.5 * t * t) * std::polar(1.0, omega0 * t);
                      }),
          std::nullopt};
}

Admissibility ComputeAdmissibility(const Vec &psi, std::size_t padding) {
  RequireTimeSampled(psi, "wavelet");
  if (padding < 1) Fail(Errc::kInvalidArgument, "padding must be >= 1");
  if (NormSquared(psi) == 0.0) Fail(Errc::kZeroVector, "wavelet is identically zero");
  const AdmissibilitySum coarse = SumOverBins(psi, padding);
  const AdmissibilitySum fine = SumOverBins(psi, 2 * padding);
  const double c_coarse = coarse.positive + coarse.negative;
  const double c_fine = fine.positive + fine.negative;
  // A nonzero mean makes |psi^|^2 / |g| ~ 1/|g| near 0; halving dg then adds
  // about 2 ln 2 |psi^(0)|^2 to the sum instead of converging.
  if (std::abs(c_fine - c_coarse) > 1e-3 * c_fine)
    Fail(Errc::kNotAdmissible,
         "admissibility sum does not converge under refinement (|psi^(0)| = " +
             FormatReal(fine.dc) + ", C changes " + FormatReal(c_coarse) + " -> " +
             FormatReal(c_fine) + ")");
  Admissibility out;
  out.c_positive = fine.positive;
  out.c_negative = fine.negative;
  out.c_psi = c_fine;
  out.dc_magnitude = fine.dc;
  out.near_divergence = fine.adjacent > 0.1 * c_fine;
  return out;
}

WaveletSpec WithAdmissibility(WaveletSpec spec) {
  spec.c_psi = ComputeAdmissibility(spec.psi).c_psi;
  return spec;
}

Vec DilateTranslate(const Vec &psi, double a, double b) {
  RequireTimeSampled(psi, "wavelet");
  if (a == 0.0 || !std::isfinite(a)) Fail(Errc::kZeroScale, "scale a must be nonzero");
  const SpaceDescriptor &s = psi.space();
  std::vector<Complex> out(s.length());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = Dilated(psi, a, s.x(j) - b);
  return Vec(s, std::move(out));
}

ScaleShiftGrid MakeScaleShiftGrid(const SpaceDescriptor &signal, double amin, double amax,
                                  int voices, bool mirror, std::size_t stride) {
  if (!signal.is_sampled() || signal.domain() != SpaceDescriptor::Domain::kTime)
    Fail(Errc::kWrongSpaceKind, "scale-shift grids live over a time-domain sampled signal");
  if (!(amin > 0.0) || !(amax > amin) || !std::isfinite(amax))
    Fail(Errc::kInvalidArgument, "need 0 < amin < amax");
  if (voices < 1) Fail(Errc::kInvalidArgument, "voices must be >= 1");
  if (stride < 1) Fail(Errc::kInvalidArgument, "stride must be >= 1");
  const double octaves = std::log2(amax / amin);
  const auto cells = static_cast<std::size_t>(std::max(1.0, std::round(octaves * voices)));
  const double ratio = std::pow(amax / amin, 1.0 / static_cast<double>(cells));

  ScaleShiftGrid grid;
  grid.signal_space = signal;
  grid.mirrored = mirror;
  grid.shift_stride = stride;
  grid.shift_count = (signal.length() + stride - 1) / stride;
  for (int sign : {1, -1}) {
    if (sign < 0 && !mirror) break;
    for (std::size_t i = 0; i < cells; ++i) {
      const double lo = amin * std::pow(ratio, static_cast<double>(i));
      const double hi = amin * std::pow(ratio, static_cast<double>(i + 1));
      grid.scales.push_back(sign * std::sqrt(lo * hi));
      grid.scale_masses.push_back(1.0 / lo - 1.0 / hi);
    }
  }
  return grid;
}

CoefficientField Cwt(const Vec &f, const WaveletSpec &w, const ScaleShiftGrid &grid) {
  RequireTimeSampled(f, "signal");
  RequireTimeSampled(w.psi, "wavelet");
  if (f.space() != grid.signal_space)
    Fail(Errc::kGridMismatch, "signal grid differs from the grid the scale-shift grid was built on");
  const std::size_t n = f.size();
  const std::size_t m = 2 * n;
  const double dx = f.space().step();

  std::vector<Complex> f_hat(m, Complex(0.0, 0.0));
  std::copy(f.entries().begin(), f.entries().end(), f_hat.begin());
  Fft(f_hat, false);

  CoefficientField field;
  field.layout = CoefficientField::Layout::kScaleShift;
  field.signal_space = f.space();
  field.row_coords = grid.scales;
  field.row_masses = grid.scale_masses;
  field.col_mass = grid.shift_step();
  field.shift_offset = grid.shift_offset;
  field.shift_stride = grid.shift_stride;
  field.mirrored = grid.mirrored;
  for (std::size_t l = 0; l < grid.shift_count; ++l) field.col_coords.push_back(grid.shift(l));
  field.values.assign(field.rows() * field.cols(), Complex(0.0, 0.0));

  internal::ParallelFor(grid.scales.size(), [&](std::size_t i) {
    const double a = grid.scales[i];
    // W[l] = dx sum_j f_j u[l - j] with u[k] = conj(psi_a(-k dx)).
    std::vector<Complex> u(m, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) * dx;
      u[k] = std::conj(Dilated(w.psi, a, -t));
      if (k > 0) u[m - k] = std::conj(Dilated(w.psi, a, t));
    }
    Fft(u, false);
    for (std::size_t k = 0; k < m; ++k) u[k] *= f_hat[k];
    Fft(u, true);
    const double scale = dx / static_cast<double>(m);
    for (std::size_t l = 0; l < field.cols(); ++l)
      field.values[i * field.cols() + l] = u[grid.shift_offset + l * grid.shift_stride] * scale;
  });
  return field;
}

double WaveletFrameConstant(const CoefficientField &field, const WaveletSpec &w) {
  if (!w.c_psi) Fail(Errc::kMissingAdmissibility, "wavelet has no admissibility constant");
  return field.mirrored ? *w.c_psi : 0.5 * *w.c_psi;
}

Vec Icwt(const CoefficientField &field, const WaveletSpec &w) {
  const double k_norm = WaveletFrameConstant(field, w);
  if (field.layout != CoefficientField::Layout::kScaleShift)
    Fail(Errc::kGridMismatch, "Icwt needs a scale-shift field");
  RequireTimeSampled(w.psi, "wavelet");
  const std::size_t n = field.signal_space.length();
  const std::size_t m = 2 * n;
  const double dx = field.signal_space.step();

  std::vector<std::vector<Complex>> rows(field.rows());
  internal::ParallelFor(field.rows(), [&](std::size_t i) {
    const double a = field.row_coords[i];
    // contribution[j] = sum_l c_l v[j - l], v[k] = psi_a(k dx).
    std::vector<Complex> c(m, Complex(0.0, 0.0));
    for (std::size_t l = 0; l < field.cols(); ++l)
      c[field.shift_offset + l * field.shift_stride] = field.at(i, l) * field.weight(i);
    std::vector<Complex> v(m, Complex(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) * dx;
      v[k] = Dilated(w.psi, a, t);
      if (k > 0) v[m - k] = Dilated(w.psi, a, -t);
    }
    Fft(c, false);
    Fft(v, false);
    for (std::size_t k = 0; k < m; ++k) c[k] *= v[k];
    Fft(c, true);
    c.resize(n);
    for (auto &e : c) e /= static_cast<double>(m);
    rows[i] = std::move(c);
  });

  std::vector<Complex> out(n, Complex(0.0, 0.0));
  for (const auto &row : rows)
    for (std::size_t j = 0; j < n; ++j) out[j] += row[j];
  for (auto &e : out) e /= k_norm;
  return Vec(field.signal_space, std::move(out));
}

double CwtEnergyRatio(const CoefficientField &field, const WaveletSpec &w, const Vec &f) {
  const double f_sq = NormSquared(f);
  if (f_sq == 0.0) Fail(Errc::kZeroVector, "energy ratio of the zero signal");
  return field.Energy() / WaveletFrameConstant(field, w) / f_sq;
}

DiscretizedFrame WaveletFrame(const WaveletSpec &w, const ScaleShiftGrid &grid) {
  RequireTimeSampled(w.psi, "wavelet");
  const SpaceDescriptor &s = grid.signal_space;
  std::vector<IndexPoint> nodes;
  std::vector<double> weights;
  std::vector<Complex> data;
  data.reserve(grid.scales.size() * grid.shift_count * s.length());
  for (std::size_t i = 0; i < grid.scales.size(); ++i) {
    for (std::size_t l = 0; l < grid.shift_count; ++l) {
      const double b = grid.shift(l);
      nodes.push_back({grid.scales[i], b});
      weights.push_back(grid.scale_masses[i] * grid.shift_step());
      for (std::size_t j = 0; j < s.length(); ++j)
        data.push_back(Dilated(w.psi, grid.scales[i], s.x(j) - b));
    }
  }
  return DiscretizedFrame(s, std::move(nodes), std::move(weights), std::move(data));
}

}  // namespace contframe
