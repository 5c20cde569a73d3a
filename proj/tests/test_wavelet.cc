// tests/test_wavelet.cc

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
#include "contframe/wavelet.hpp"
#include "test_util.hpp"

using namespace contframe;

namespace {

const SpaceDescriptor kPsiGrid = SpaceDescriptor::Sampled(-16.0, 16.0, 4096);

// Analytic Fourier transform of (1 - t^2) exp(-t^2 / 2).
double MexicanHatHat(double g) {
  const double w = 2.0 * M_PI * g;
  return std::sqrt(2.0 * M_PI) * w * w * std::exp(-0.5 * w * w);
}

Vec Atom(const SpaceDescriptor &s, double t0, double freq, double width) {
  return Vec::Sample(s, [&](double x) {
    const double u = (x - t0) / width;
    return Complex(std::exp(-M_PI * u * u) * std::cos(2.0 * M_PI * freq * x));
  });
}

}  // namespace

TEST_CASE("Mexican hat admissibility constant") {
  const Admissibility a = ComputeAdmissibility(MexicanHat(kPsiGrid).psi);
  // Closed form under exp(-2 pi i x g): C = 4 pi int_0^inf w^3 exp(-w^2) dw = 2 pi.
  CHECK(a.c_psi == doctest::Approx(2.0 * M_PI).epsilon(1e-4));
  // Independent quadrature of |psi^|^2 / |g| on a 10x finer frequency grid.
  double oracle = 0.0;
  const double dg = 1e-5;
  for (double g = dg / 2; g < 4.0; g += dg) oracle += 2.0 * std::pow(MexicanHatHat(g), 2) / g * dg;
  CHECK(std::abs(a.c_psi - oracle) / oracle < 1e-3);
  CHECK(a.c_positive == doctest::Approx(a.c_negative).epsilon(1e-10));
  CHECK(!a.near_divergence);
  CHECK(a.dc_magnitude < 1e-10);
}

TEST_CASE("Gaussian and DC-heavy wavelets are rejected") {
  const Vec gauss = Vec::Sample(kPsiGrid, [](double t) { return Complex(std::exp(-M_PI * t * t)); });
  CHECK_ERRC(ComputeAdmissibility(gauss), Errc::kNotAdmissible);
  CHECK_ERRC(ComputeAdmissibility(Vec(kPsiGrid)), Errc::kZeroVector);
  const Admissibility morlet = ComputeAdmissibility(Morlet(kPsiGrid).psi);
  CHECK(!morlet.near_divergence);
  CHECK(morlet.c_positive > 1e6 * morlet.c_negative);
}

TEST_CASE("DilateTranslate preserves the norm and rejects a = 0") {
  const Vec psi = MexicanHat(kPsiGrid).psi;
  const Vec d = DilateTranslate(psi, 0.5, 1.25);
  CHECK(Norm(d) == doctest::Approx(Norm(psi)).epsilon(1e-6));
  CHECK_ERRC(DilateTranslate(psi, 0.0, 0.0), Errc::kZeroScale);
}

TEST_CASE("scale-shift grid encodes da/a^2 exactly per cell") {
  const auto s = SpaceDescriptor::Sampled(-8.0, 8.0, 256);
  const ScaleShiftGrid g = MakeScaleShiftGrid(s, 0.5, 4.0, 4);
  double mass = 0.0;
  for (double m : g.scale_masses) mass += m;
  CHECK(mass == doctest::Approx(1.0 / 0.5 - 1.0 / 4.0).epsilon(1e-12));
  CHECK(g.scales.size() == 12);
  const ScaleShiftGrid m = MakeScaleShiftGrid(s, 0.5, 4.0, 4, true);
  CHECK(m.scales.size() == 24);
  CHECK(m.scales[12] < 0.0);
  CHECK_ERRC(MakeScaleShiftGrid(s, 0.0, 4.0, 4), Errc::kInvalidArgument);
}

TEST_CASE("Cwt agrees with analysis by the discretized wavelet frame") {
  const auto s = SpaceDescriptor::Sampled(-8.0, 8.0, 128);
  WaveletSpec w = WithAdmissibility(MexicanHat(kPsiGrid));
  const ScaleShiftGrid grid = MakeScaleShiftGrid(s, 0.5, 2.0, 2, false, 4);
  const Vec f = Atom(s, 0.5, 0.3, 2.0);
  const CoefficientField field = Cwt(f, w, grid);
  const DiscretizedFrame fr = WaveletFrame(w, grid);
  const auto c = Analysis(fr, f);
  REQUIRE(c.size() == field.values.size());
  double worst = 0.0, scale = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    worst = std::max(worst, std::abs(c[j] - field.values[j]));
    scale = std::max(scale, std::abs(c[j]));
  }
  CHECK(worst <= 1e-10 * scale);
  CHECK(fr.weights()[0] == doctest::Approx(grid.scale_masses[0] * grid.shift_step()));
}

TEST_CASE("Cwt is linear and shift covariant; zero maps to zero") {
  const auto s = SpaceDescriptor::Sampled(-32.0, 32.0, 512);
  const WaveletSpec w = WithAdmissibility(MexicanHat(kPsiGrid));
  const ScaleShiftGrid grid = MakeScaleShiftGrid(s, 0.5, 4.0, 4);
  const Vec f = Atom(s, -3.0, 0.2, 4.0);
  const Vec g = Atom(s, 4.0, 0.4, 3.0);
  const Complex alpha(0.7, -0.2), beta(-1.3, 0.0);
  const CoefficientField lhs = Cwt(alpha * f + beta * g, w, grid);
  const CoefficientField cf = Cwt(f, w, grid);
  const CoefficientField cg = Cwt(g, w, grid);
  double worst = 0.0, scale = 0.0;
  for (std::size_t j = 0; j < lhs.values.size(); ++j) {
    worst = std::max(worst, std::abs(lhs.values[j] - alpha * cf.values[j] - beta * cg.values[j]));
    scale = std::max(scale, std::abs(lhs.values[j]));
  }
  CHECK(worst <= 1e-12 * scale);

  // Shift by k samples: W(T f)(a, b) = W f(a, b - k dx).
  const std::size_t k = 24;
  const Vec shifted = Vec::Sample(s, [&](double x) { return Interpolate(f, x - k * s.step()); });
  const CoefficientField cs = Cwt(shifted, w, grid);
  worst = 0.0;
  for (std::size_t i = 0; i < cf.rows(); ++i)
    for (std::size_t l = 64; l + k < cf.cols() - 64; ++l)
      worst = std::max(worst, std::abs(cs.at(i, l + k) - cf.at(i, l)));
  CHECK(worst <= 1e-12 * scale);

  const CoefficientField zero = Cwt(Vec(s), w, grid);
  for (const auto &v : zero.values) CHECK(v == Complex(0.0));
  CHECK(NormSquared(Icwt(zero, w)) == 0.0);
}

TEST_CASE("tight-frame energy and reconstruction for band-limited atoms") {
  const auto s = SpaceDescriptor::Sampled(-128.0, 128.0, 2048);
  const Vec f = Atom(s, -15.0, 0.10, 20.0) + Atom(s, 15.0, 0.14, 20.0);
  const WaveletSpec w = WithAdmissibility(MexicanHat(kPsiGrid));
  for (bool mirror : {false, true}) {
    const CoefficientField field = Cwt(f, w, MakeScaleShiftGrid(s, 0.25, 8.0, 16, mirror));
    const double ratio = CwtEnergyRatio(field, w, f);
    CHECK(ratio == doctest::Approx(1.0).epsilon(0.02));
    CHECK(Norm(Icwt(field, w) - f) <= 0.02 * Norm(f));
  }
}

TEST_CASE("shift-step refinement: error falls until the scale-truncation floor") {
  const auto s = SpaceDescriptor::Sampled(-128.0, 128.0, 2048);
  const Vec f = Atom(s, -15.0, 0.10, 20.0) + Atom(s, 15.0, 0.14, 20.0);
  const WaveletSpec w = WithAdmissibility(MexicanHat(kPsiGrid));
  std::vector<double> err;
  for (std::size_t stride : {16u, 8u, 4u, 2u, 1u}) {
    const CoefficientField field = Cwt(f, w, MakeScaleShiftGrid(s, 0.25, 8.0, 16, false, stride));
    err.push_back(Norm(Icwt(field, w) - f) / Norm(f));
  }
  const double floor = err.back();
  for (std::size_t i = 1; i < err.size(); ++i) {
    if (err[i - 1] > 3.0 * floor) CHECK(err[i - 1] / err[i] >= 1.5);
    CHECK(err[i] <= err[i - 1] * (1 + 1e-9));
  }
}

TEST_CASE("wavelet error paths") {
  const auto s = SpaceDescriptor::Sampled(-8.0, 8.0, 128);
  const WaveletSpec bare = MexicanHat(kPsiGrid);
  const ScaleShiftGrid grid = MakeScaleShiftGrid(s, 0.5, 2.0, 2);
  const CoefficientField field = Cwt(Vec::Sample(s, [](double x) { return Complex(std::exp(-x * x)); }), bare, grid);
  CHECK_ERRC(Icwt(field, bare), Errc::kMissingAdmissibility);
  CHECK_ERRC(Cwt(Vec(SpaceDescriptor::Sampled(-8.0, 8.0, 64)), bare, grid), Errc::kGridMismatch);
}
