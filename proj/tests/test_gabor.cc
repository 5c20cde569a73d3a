// tests/test_gabor.cc

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

#include <doctest.h>

#include <cmath>
#include <vector>

#include "contframe/frame.hpp"
#include "contframe/gabor.hpp"
#include "test_util.hpp"

using namespace contframe;
using contframe::testing::Gauss;

namespace {

const SpaceDescriptor kSignal = SpaceDescriptor::Sampled(-8.0, 8.0, 512);
const SpaceDescriptor kWindow = SpaceDescriptor::Sampled(-16.0, 16.0, 1024);

Vec Gaussian(const SpaceDescriptor &s, double t0 = 0.0) {
  return Vec::Sample(s, [&](double t) { return Complex(Gauss(t - t0)); });
}

Vec Hermite1(const SpaceDescriptor &s) {
  return Vec::Sample(s, [](double t) { return Complex(t * Gauss(t)); });
}

// <f, M_g T_y g> for f = g = exp(-pi t^2).
Complex GaussStft(double y, double g) {
  return std::polar(std::sqrt(0.5) * std::exp(-0.5 * M_PI * (y * y + g * g)), -M_PI * y * g);
}

}  // namespace

TEST_CASE("Gaussian STFT matches the closed form on aligned and off-bin grids") {
  const WindowSpec win = MakeWindow(Gaussian(kWindow));
  const Vec f = Gaussian(kSignal);
  // dg = 1/16 lands on FFT bins; dg = 0.1 sqrt(2) forces direct summation.
  for (double dg : {1.0 / 16, 0.1 * std::sqrt(2.0)}) {
    const TimeFreqGrid grid = MakeTimeFreqGrid(-3.0, 3.0, 0.25, -3.0, 3.0, dg);
    const CoefficientField field = Stft(f, win, grid);
    double worst = 0.0;
    for (std::size_t m = 0; m < field.rows(); ++m)
      for (std::size_t l = 0; l < field.cols(); ++l)
        worst = std::max(worst, std::abs(field.at(m, l) - GaussStft(field.col_coords[l], field.row_coords[m])));
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("conjugate symmetry for real signal and window") {
  const WindowSpec win = MakeWindow(Gaussian(kWindow));
  const Vec f = Vec::Sample(kSignal, [](double t) { return Complex(Gauss(t - 0.5) * (1.0 + t)); });
  const TimeFreqGrid grid = MakeTimeFreqGrid(-4.0, 4.0, 0.25, -4.0, 4.0, 0.25);
  const CoefficientField field = Stft(f, win, grid);
  const std::size_t ng = field.rows();
  for (std::size_t m = 0; m < ng; ++m)
    for (std::size_t l = 0; l < field.cols(); ++l)
      CHECK(std::abs(field.at(m, l) - std::conj(field.at(ng - 1 - m, l))) < 1e-12);
}

TEST_CASE("covariance under on-lattice time shifts and matched-filter peak") {
  const WindowSpec win = MakeWindow(Gaussian(kWindow));
  const double shift = 1.5;
  const Vec f = Gaussian(kSignal);
  const Vec tf = Gaussian(kSignal, shift);
  const TimeFreqGrid grid = MakeTimeFreqGrid(-4.0, 4.0, 0.25, -2.0, 2.0, 0.25);
  const CoefficientField a = Stft(f, win, grid);
  const CoefficientField b = Stft(tf, win, grid);
  const std::size_t k = 6;  // shift / dy
  for (std::size_t m = 0; m < a.rows(); ++m)
    for (std::size_t l = 0; l + k < a.cols(); ++l) {
      // Psi(T f)(y + s, g) = exp(-2 pi i s g) Psi(f)(y, g)
      const Complex phase = std::polar(1.0, -2.0 * M_PI * shift * a.row_coords[m]);
      CHECK(std::abs(b.at(m, l + k) - phase * a.at(m, l)) < 1e-10);
    }
  std::size_t best_m = 0, best_l = 0;
  for (std::size_t m = 0; m < b.rows(); ++m)
    for (std::size_t l = 0; l < b.cols(); ++l)
      if (std::abs(b.at(m, l)) > std::abs(b.at(best_m, best_l))) best_m = m, best_l = l;
  CHECK(b.col_coords[best_l] == doctest::Approx(shift));
  CHECK(b.row_coords[best_m] == doctest::Approx(0.0));
}

TEST_CASE("energy identity and inversion") {
  const Vec f = Vec::Sample(kSignal, [](double t) { return Complex(Gauss(t - 0.3), 0.5 * t * Gauss(t)); });
  const TimeFreqGrid grid = MakeTimeFreqGrid(-6.0, 6.0, 1.0 / 16, -6.0, 6.0, 1.0 / 16);
  const WindowSpec win = GaussianWindow(kWindow);
  CHECK(win.norm_sq == doctest::Approx(1.0).epsilon(1e-12));
  const CoefficientField field = Stft(f, win, grid);
  CHECK(field.Energy() == doctest::Approx(win.norm_sq * NormSquared(f)).epsilon(1e-3));
  const Vec back = Istft(field, win);
  CHECK(Norm(back - f) <= 0.01 * Norm(f));

  // Scaling the window leaves istft(stft(f)) unchanged.
  const WindowSpec twice = MakeWindow(2.0 * win.g);
  const Vec back2 = Istft(Stft(f, twice, grid), twice);
  CHECK(Norm(back2 - back) <= 1e-12 * Norm(f));

  const CoefficientField zero = Stft(Vec(kSignal), win, grid);
  CHECK(zero.Energy() == 0.0);
  CHECK(NormSquared(Istft(zero, win)) == 0.0);
}

TEST_CASE("orthogonality relation") {
  const TimeFreqGrid grid = MakeTimeFreqGrid(-6.0, 6.0, 1.0 / 16, -6.0, 6.0, 1.0 / 16);
  const WindowSpec g = MakeWindow(Gaussian(kWindow));
  const WindowSpec h = MakeWindow(Hermite1(kWindow));
  // Even against odd: rhs = 0.
  const OrthogonalityCheck odd = OrthogonalityRelation(Gaussian(kSignal), Hermite1(kSignal), g, g, grid);
  CHECK(std::abs(odd.rhs) < 1e-14);
  CHECK(odd.gap <= 1e-4);
  // All Gaussians: rhs = (2^{-1/2})^2 = 1/2.
  const OrthogonalityCheck all = OrthogonalityRelation(Gaussian(kSignal), Gaussian(kSignal), g, g, grid);
  CHECK(std::abs(all.rhs - Complex(0.5)) < 1e-12);
  CHECK(std::abs(all.lhs - Complex(0.5)) < 1e-4);
  // Mixed windows.
  const OrthogonalityCheck mixed = OrthogonalityRelation(Hermite1(kSignal), Hermite1(kSignal), g, h, grid);
  CHECK(mixed.gap <= 1e-4);
}

TEST_CASE("Stft equals analysis by the discretized Gabor frame") {
  const SpaceDescriptor s = SpaceDescriptor::Sampled(-4.0, 4.0, 64);
  const SpaceDescriptor ws = SpaceDescriptor::Sampled(-4.0, 4.0, 64);
  const WindowSpec win = MakeWindow(Gaussian(ws));
  const TimeFreqGrid grid = MakeTimeFreqGrid(-2.0, 2.0, 0.5, -2.0, 2.0, 0.5);
  const Vec f = Vec::Sample(s, [](double t) { return Complex(Gauss(t - 0.4), 0.2 * t); });
  const CoefficientField field = Stft(f, win, grid);
  const auto c = Analysis(GaborFrame(win, grid, s), f);
  REQUIRE(c.size() == field.values.size());
  for (std::size_t j = 0; j < c.size(); ++j) CHECK(std::abs(c[j] - field.values[j]) < 1e-12);
}

TEST_CASE("gabor error paths") {
  const TimeFreqGrid grid = MakeTimeFreqGrid(-1.0, 1.0, 0.5, -1.0, 1.0, 0.5);
  CHECK_ERRC(MakeWindow(Vec(kWindow)), Errc::kZeroWindow);
  const WindowSpec coarse = MakeWindow(Gaussian(SpaceDescriptor::Sampled(-16.0, 16.0, 100)));
  CHECK_ERRC(Stft(Gaussian(kSignal), coarse, grid), Errc::kGridMismatch);
  CHECK_ERRC(MakeTimeFreqGrid(0.0, 1.0, 0.0, 0.0, 1.0, 0.1), Errc::kInvalidArgument);
  CoefficientField empty;
  CHECK_ERRC(Istft(empty, WindowSpec{Gaussian(kWindow), 0.0}), Errc::kZeroWindow);
}
