// include/contframe/gabor.hpp

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

#ifndef CONTFRAME_GABOR_HPP_
#define CONTFRAME_GABOR_HPP_

#include <cstddef>

#include "contframe/field.hpp"
#include "contframe/frame.hpp"
#include "contframe/hilbert.hpp"

namespace contframe {

struct WindowSpec {
  Vec g;
  double norm_sq = 0.0;
};

/// Throws ZeroWindow for g = 0.
WindowSpec MakeWindow(Vec g);
/// Unit-energy Gaussian 2^{1/4} exp(-pi t^2).
WindowSpec GaussianWindow(const SpaceDescriptor &grid);

/// Uniform shifts y_l = ymin + l dy and frequencies g_m = gmin + m dg,
/// both inclusive of their end points. Each node carries mass dy * dg.
struct TimeFreqGrid {
  double ymin = 0.0;
  double dy = 1.0;
  std::size_t ny = 0;
  double gmin = 0.0;
  double dg = 1.0;
  std::size_t ng = 0;

  double y(std::size_t l) const { return ymin + static_cast<double>(l) * dy; }
  double gamma(std::size_t m) const { return gmin + static_cast<double>(m) * dg; }
  double weight() const { return dy * dg; }
};

TimeFreqGrid MakeTimeFreqGrid(double ymin, double ymax, double dy, double gmin, double gmax,
                              double dg);

/// Psi_g f(y_l, g_m) = sum_j f(x_j) conj(g(x_j - y_l)) exp(-2 pi i x_j g_m) dx.
/// Each column is one windowed FFT whenever the frequency grid lands on the
/// bins of a (zero-padded) transform; otherwise the sums are evaluated
/// directly. Rows of the field are frequencies, columns are shifts.
CoefficientField Stft(const Vec &f, const WindowSpec &win, const TimeFreqGrid &grid);

/// (1 / ||g||^2) sum w Psi(y, g) M_g T_y g.
Vec Istft(const CoefficientField &field, const WindowSpec &win);

struct OrthogonalityCheck {
  Complex lhs;
  Complex rhs;
  double gap = 0.0;
};

/// lhs = sum w Psi_{g1} f1 conj(Psi_{g2} f2), rhs = <f1, f2> <g2, g1>,
/// gap = |lhs - rhs| / (||f1|| ||f2|| ||g1|| ||g2||).
OrthogonalityCheck OrthogonalityRelation(const Vec &f1, const Vec &f2, const WindowSpec &g1,
                                         const WindowSpec &g2, const TimeFreqGrid &grid);

/// The grid as a DiscretizedFrame with vectors M_g T_y g on the signal grid.
DiscretizedFrame GaborFrame(const WindowSpec &win, const TimeFreqGrid &grid,
                            const SpaceDescriptor &signal);

}  // namespace contframe

#endif  // CONTFRAME_GABOR_HPP_
