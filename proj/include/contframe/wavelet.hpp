// include/contframe/wavelet.hpp

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

#ifndef CONTFRAME_WAVELET_HPP_
#define CONTFRAME_WAVELET_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "contframe/field.hpp"
#include "contframe/frame.hpp"
#include "contframe/hilbert.hpp"

namespace contframe {

/// A mother wavelet sampled on its own grid. The admissibility constant is
/// left unset until ComputeAdmissibility() (or the caller) provides it.
struct WaveletSpec {
  Vec psi;
  std::optional<double> c_psi;
};

/// psi(t) = (1 - t^2) exp(-t^2 / 2); C_psi = 2 pi under the e^{-2 pi i x g}
/// Fourier convention.
WaveletSpec MexicanHat(const SpaceDescriptor &grid);
/// psi(t) = pi^{-1/4} exp(i omega0 t) exp(-t^2 / 2). Only approximately
/// admissible (psi^(0) ~ exp(-omega0^2 / 2)); the check reports how close.
WaveletSpec Morlet(const SpaceDescriptor &grid, double omega0 = 6.0);

struct Admissibility {
  double c_psi = 0.0;       // integral over all gamma != 0
  double c_positive = 0.0;  // gamma > 0 half
  double c_negative = 0.0;  // gamma < 0 half
  double dc_magnitude = 0.0;
  /// The two bins next to gamma = 0 carry more than 10% of c_psi.
  bool near_divergence = false;
};

/// C_psi = sum_{gamma != 0} |psi^(gamma)|^2 / |gamma| dgamma on the DFT grid
/// of psi zero-padded by `padding` and by 2 * `padding`. The finer value is
/// reported; if doubling the padding moves the sum by more than 0.1% the
/// integrand is treated as divergent at 0 and NotAdmissible is thrown.
Admissibility ComputeAdmissibility(const Vec &psi, std::size_t padding = 1);

/// Returns spec with c_psi filled in.
WaveletSpec WithAdmissibility(WaveletSpec spec);

/// psi^{a,b}(x) = |a|^{-1/2} psi((x - b) / a) on psi's grid, by linear
/// interpolation, zero outside the sampled support.
Vec DilateTranslate(const Vec &psi, double a, double b);

/// Log-spaced scale cells [amin r^i, amin r^{i+1}] with nodes at the
/// geometric centres, and shifts on every `stride`-th sample of the signal
/// grid. The mass of node (i, l) is (1/a_lo - 1/a_hi) * db, which is the
/// exact da db / a^2 measure of the cell.
struct ScaleShiftGrid {
  SpaceDescriptor signal_space = SpaceDescriptor::Coordinate(1);
  std::vector<double> scales;
  std::vector<double> scale_masses;
  std::size_t shift_offset = 0;
  std::size_t shift_stride = 1;
  std::size_t shift_count = 0;
  bool mirrored = false;

  double shift_step() const { return signal_space.step() * static_cast<double>(shift_stride); }
  double shift(std::size_t l) const {
    return signal_space.x(shift_offset + l * shift_stride);
  }
};

ScaleShiftGrid MakeScaleShiftGrid(const SpaceDescriptor &signal, double amin, double amax,
                                  int voices, bool mirror = false, std::size_t stride = 1);

/// W(a_i, b_l) = <f, psi^{a_i, b_l}>, one FFT correlation per scale.
CoefficientField Cwt(const Vec &f, const WaveletSpec &w, const ScaleShiftGrid &grid);

/// Constant the field energy is divided by: C_psi with the a < 0 half,
/// C_psi / 2 without it (exact for wavelets with |psi^| even).
double WaveletFrameConstant(const CoefficientField &field, const WaveletSpec &w);

/// (1 / K) sum w W psi^{a,b} with K = WaveletFrameConstant().
Vec Icwt(const CoefficientField &field, const WaveletSpec &w);

/// (1 / K) sum w |W|^2 / ||f||^2.
double CwtEnergyRatio(const CoefficientField &field, const WaveletSpec &w, const Vec &f);

/// The grid as a DiscretizedFrame with vectors psi^{a,b} on the signal grid.
DiscretizedFrame WaveletFrame(const WaveletSpec &w, const ScaleShiftGrid &grid);

}  // namespace contframe

#endif  // CONTFRAME_WAVELET_HPP_
