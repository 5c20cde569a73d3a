// src/verify.cc

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

#include "contframe/verify.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "contframe/construct.hpp"
#include "contframe/error.hpp"
#include "contframe/frame.hpp"
#include "contframe/gabor.hpp"
#include "contframe/io.hpp"
#include "contframe/measure.hpp"
#include "contframe/wavelet.hpp"

namespace contframe {

using nlohmann::json;

namespace {

using Rng = std::mt19937_64;

struct Sizes {
  std::size_t parseval_max_dim;
  std::size_t parseval_partitions;
  std::size_t transfer_frames;
  std::size_t transfer_max_dim;
  int ex28_refinements;
};

Sizes SizesFor(SuiteOptions::Scale s) {
  if (s == SuiteOptions::Scale::kFull) return {64, 20, 50, 32, 4};
  return {16, 5, 10, 8, 3};
}

Vec RandomVec(Rng &rng, std::size_t dim) {
  std::normal_distribution<double> gauss;
  Vec v(SpaceDescriptor::Coordinate(dim));
  for (std::size_t i = 0; i < dim; ++i) v[i] = Complex(gauss(rng), gauss(rng));
  return v;
}

Partition RandomPartition(Rng &rng, std::size_t cells) {
  std::uniform_real_distribution<double> u(0.05, 20.0);
  std::vector<double> w(cells);
  for (auto &x : w) x = u(rng);
  return MakePartition(w);
}

DiscreteSystem RandomSystem(Rng &rng, std::size_t dim, std::size_t count) {
  DiscreteSystem sys;
  for (std::size_t k = 0; k < count; ++k) sys.vectors.push_back(RandomVec(rng, dim));
  return sys;
}

// Eigenvalues of sum_k f_k f_k^*, formed directly from the system.
Eigen::VectorXd SystemSpectrum(const DiscreteSystem &sys) {
  const std::size_t d = sys.space().length();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
  for (const auto &v : sys.vectors) {
    Eigen::VectorXcd e(d);
    for (std::size_t i = 0; i < d; ++i) e(i) = v[i];
    s += e * e.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (s + s.adjoint()),
                                                         Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Eigen::VectorXcd ToEigen(const Vec &v) {
  Eigen::VectorXcd e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e(i) = v[i];
  return e;
}

json Check(int id, const char *name, bool pass, json metrics) {
  json out = {{"id", id}, {"name", name}, {"pass", pass}};
  out["metrics"] = std::move(metrics);
  return out;
}

// Wraps a check so that a thrown error becomes a failed entry.
json Guarded(int id, const char *name, const std::function<json()> &body) {
  try {
    return body();
  } catch (const std::exception &e) {
    return Check(id, name, false, {{"error", e.what()}});
  }
}

json ParsevalConstruction(const Sizes &sz, const SuiteOptions &opts) {
  Rng rng(101);
  double worst_bound = 0.0, worst_recon = 0.0, worst_dual = 0.0;
  bool all_parseval = true;
  for (std::size_t dim = 2; dim <= sz.parseval_max_dim; ++dim) {
    for (std::size_t p = 0; p < sz.parseval_partitions; ++p) {
      const DiscretizedFrame fr = ParsevalStepFrame(RandomPartition(rng, dim));
      const FrameReport rep = FrameBounds(fr);
      worst_bound = std::max({worst_bound, std::abs(rep.lower - 1.0), std::abs(rep.upper - 1.0)});
      all_parseval = all_parseval && rep.parseval;
      const Vec f = RandomVec(rng, dim);
      const Vec back = Synthesis(fr, Analysis(fr, f));
      worst_recon = std::max(worst_recon, Norm(back - f) / Norm(f));
      worst_dual = std::max(worst_dual, DualReconstruct(fr, f, {opts.tol_recon, {}}).residual);
    }
  }
  const bool pass = all_parseval && worst_bound <= 1e-10 && worst_recon <= 1e-12 &&
                    worst_dual <= opts.tol_recon;
  return Check(1, "parseval_construction", pass,
               {{"max_bound_deviation", worst_bound},
                {"max_reconstruction_error", worst_recon},
                {"max_dual_residual", worst_dual},
                {"all_parseval", all_parseval}});
}

json BoundTransfer(const Sizes &sz, const SuiteOptions &opts) {
  Rng rng(202);
  std::uniform_int_distribution<std::size_t> pick_dim(2, sz.transfer_max_dim);
  double worst = 0.0, worst_weights = 0.0, worst_dual = 0.0;
  for (std::size_t t = 0; t < sz.transfer_frames; ++t) {
    const std::size_t dim = pick_dim(rng);
    const DiscreteSystem sys = RandomSystem(rng, dim, dim + dim / 2 + 1);
    const Eigen::VectorXd ev = SystemSpectrum(sys);
    const FrameReport a = FrameBounds(StepFrame(RandomPartition(rng, sys.vectors.size()), sys));
    const FrameReport b = FrameBounds(StepFrame(RandomPartition(rng, sys.vectors.size()), sys));
    worst = std::max({worst, std::abs(a.lower - ev(0)), std::abs(a.upper - ev(ev.size() - 1))});
    worst_weights = std::max({worst_weights, std::abs(a.lower - b.lower), std::abs(a.upper - b.upper)});
    const DiscretizedFrame fr = StepFrame(RandomPartition(rng, sys.vectors.size()), sys);
    worst_dual = std::max(worst_dual, DualReconstruct(fr, RandomVec(rng, dim), {opts.tol_recon, {}}).residual);
  }
  return Check(2, "bound_transfer", worst <= 1e-10 && worst_weights <= 1e-10 && worst_dual <= opts.tol_recon,
               {{"max_bound_error", worst},
                {"max_weight_dependence", worst_weights},
                {"max_dual_residual", worst_dual}});
}

std::vector<DiscretizedFrame> FactorizationFrames(Rng &rng) {
  std::vector<DiscretizedFrame> frames;
  for (std::size_t dim : {2, 5, 12, 32}) {
    const DiscreteSystem sys = RandomSystem(rng, dim, 2 * dim);
    frames.push_back(StepFrame(RandomPartition(rng, sys.vectors.size()), sys));
  }
  frames.push_back(ParsevalStepFrame(SigmaFiniteCover(CoverRule::Geometric(2.0), 6)));
  frames.push_back(UnboundedBessel(RandomVec(rng, 3), UnboundedBesselGrid{}.Refined(1)));
  return frames;
}

json Factorization() {
  Rng rng(303);
  double worst = 0.0;
  for (const auto &fr : FactorizationFrames(rng)) {
    const HermitianMatrix s = FrameOperator(fr);
    for (int t = 0; t < 100; ++t) {
      const Vec f = RandomVec(rng, fr.dim());
      const Eigen::VectorXcd dense = s * ToEigen(f);
      const Vec tt = Synthesis(fr, Analysis(fr, f));
      worst = std::max(worst, (dense - ToEigen(tt)).norm() / Norm(f));
    }
  }
  return Check(3, "factorization", worst <= 1e-12, {{"max_relative_gap", worst}});
}

json SigmaFinite() {
  Rng rng(404);
  std::vector<DiscretizedFrame> maps = FactorizationFrames(rng);
  maps.push_back(BesselOnlyMap(MakePartition(std::vector<double>{1.0, 2.0, 4.0}),
                               RandomSystem(rng, 6, 3)));
  bool bound_ok = true, nested = true;
  double worst_ratio = 0.0;
  for (const auto &fr : maps) {
    for (int t = 0; t < 20; ++t) {
      Vec f = RandomVec(rng, fr.dim());
      f *= 1.0 / (1.0 + t);
      const auto levels = SigmaFiniteSupport(fr, f, 10);
      for (std::size_t n = 0; n < levels.size(); ++n) {
        if (levels[n].bound > 0.0) worst_ratio = std::max(worst_ratio, levels[n].mass / levels[n].bound);
        bound_ok = bound_ok && levels[n].mass <= levels[n].bound * (1.0 + 1e-12);
        if (n > 0)
          nested = nested && std::includes(levels[n].nodes.begin(), levels[n].nodes.end(),
                                           levels[n - 1].nodes.begin(), levels[n - 1].nodes.end());
      }
    }
  }
  return Check(4, "sigma_finite_support", bound_ok && nested,
               {{"max_mass_over_bound", worst_ratio}, {"nested", nested}});
}

json BesselOnly() {
  Rng rng(505);
  const DiscreteSystem sys = RandomSystem(rng, 16, 4);
  const FrameReport rep = FrameBounds(BesselOnlyMap(RandomPartition(rng, 4), sys));
  // Nonzero spectrum of sum f_k f_k^* equals the spectrum of the Gram matrix.
  Eigen::MatrixXcd gram(4, 4);
  for (int k = 0; k < 4; ++k)
    for (int l = 0; l < 4; ++l) gram(k, l) = Inner(sys.vectors[l], sys.vectors[k]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(0.5 * (gram + gram.adjoint()),
                                                         Eigen::EigenvaluesOnly);
  const double discrete = solver.eigenvalues()(3);
  const bool pass = rep.verdict == Verdict::kBesselOnly && std::abs(rep.upper - discrete) <= 1e-10;
  return Check(5, "bessel_only", pass,
               {{"verdict", VerdictName(rep.verdict)},
                {"B", rep.upper},
                {"discrete_bessel_bound", discrete},
                {"rank", rep.rank ? *rep.rank : -1}});
}

json UnboundedBesselCheck(const Sizes &sz) {
  Vec h(SpaceDescriptor::Coordinate(2), {Complex(1.0, 0.0), Complex(0.0, 2.0)});
  const double ceiling = kUnboundedProfileMass * NormSquared(h);
  std::vector<double> bounds, norms;
  for (int level = 0; level <= sz.ex28_refinements; ++level) {
    const DiscretizedFrame fr = UnboundedBessel(h, UnboundedBesselGrid{}.Refined(level));
    bounds.push_back(FrameBounds(fr).upper);
    norms.push_back(fr.max_vector_norm());
  }
  bool monotone = true, doubling = true, below = true;
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    below = below && bounds[k] <= ceiling * (1.0 + 1e-12);
    if (k > 0) {
      monotone = monotone && bounds[k] >= bounds[k - 1];
      doubling = doubling && norms[k] >= 2.0 * norms[k - 1] * (1.0 - 1e-12);
    }
  }
  const double rel = std::abs(bounds.back() - ceiling) / ceiling;
  return Check(6, "unbounded_bessel", monotone && doubling && below && rel <= 0.01,
               {{"bounds", bounds},
                {"max_node_norms", norms},
                {"ceiling", ceiling},
                {"final_relative_gap", rel}});
}

json UnboundedFrameCheck(const SuiteOptions &opts) {
  const Construction c = ConstructFromSpec(
      {{"construct", "ex29"}, {"dim", 2}, {"bessel_bound", 0.01}, {"refine", 2}});
  const FrameReport rep = FrameBounds(c.frame);
  const double b1 = c.details["B1"].get<double>();
  const double b2 = c.details["B2"].get<double>();
  const double a2 = c.details["A2"].get<double>();
  // Reconstruction through the norm-unbounded frame.
  Rng rng(707);
  double worst_dual = 0.0;
  for (int t = 0; t < 5; ++t)
    worst_dual = std::max(worst_dual,
                          DualReconstruct(c.frame, RandomVec(rng, c.frame.dim()), {opts.tol_recon, {}}).residual);
  const bool pass = std::abs(b1 - 0.01) <= 1e-12 && std::abs(a2 - 1.0) <= 1e-10 &&
                    rep.lower >= 0.81 - 0.02 && rep.upper <= b1 + b2 + 0.02 &&
                    worst_dual <= opts.tol_recon;
  return Check(7, "unbounded_frame", pass,
               {{"A", rep.lower},
                {"B", rep.upper},
                {"B1", b1},
                {"A2", a2},
                {"B2", b2},
                {"max_node_norm", c.details["max_node_norm"]},
                {"max_dual_residual", worst_dual}});
}

Vec GaborAtom(const SpaceDescriptor &s, double t0, double freq, double width) {
  return Vec::Sample(s, [&](double x) {
    const double u = (x - t0) / width;
    return Complex(std::exp(-std::numbers::pi * u * u) * std::cos(2.0 * std::numbers::pi * freq * x));
  });
}

json CwtTightFrame() {
  const SpaceDescriptor signal = SpaceDescriptor::Sampled(-128.0, 128.0, 2048);
  const Vec f = GaborAtom(signal, -15.0, 0.10, 20.0) + GaborAtom(signal, 15.0, 0.14, 20.0);
  const WaveletSpec w = WithAdmissibility(MexicanHat(SpaceDescriptor::Sampled(-16.0, 16.0, 4096)));
  const ScaleShiftGrid grid = MakeScaleShiftGrid(signal, 0.25, 8.0, 16);
  const CoefficientField field = Cwt(f, w, grid);
  const double ratio = CwtEnergyRatio(field, w, f);
  const double err = Norm(Icwt(field, w) - f) / Norm(f);
  return Check(8, "cwt_tight_frame", ratio >= 0.98 && ratio <= 1.02 && err <= 0.02,
               {{"energy_ratio", ratio}, {"reconstruction_error", err}, {"C_psi", *w.c_psi}});
}

json AdmissibilityCheck() {
  const Admissibility base = ComputeAdmissibility(MexicanHat(SpaceDescriptor::Sampled(-16.0, 16.0, 4096)).psi);
  const Admissibility fine = ComputeAdmissibility(MexicanHat(SpaceDescriptor::Sampled(-160.0, 160.0, 40960)).psi);
  const double rel = std::abs(base.c_psi - fine.c_psi) / fine.c_psi;
  bool gaussian_rejected = false;
  try {
    ComputeAdmissibility(Vec::Sample(SpaceDescriptor::Sampled(-16.0, 16.0, 4096), [](double t) {
      return Complex(std::exp(-std::numbers::pi * t * t));
    }));
  } catch (const Error &e) {
    gaussian_rejected = e.code() == Errc::kNotAdmissible;
  }
  return Check(9, "admissibility", rel <= 1e-3 && gaussian_rejected,
               {{"C_psi", base.c_psi},
                {"C_psi_fine_grid", fine.c_psi},
                {"relative_gap", rel},
                {"gaussian_rejected", gaussian_rejected}});
}

json StftOrthogonality() {
  const SpaceDescriptor s = SpaceDescriptor::Sampled(-8.0, 8.0, 512);
  const SpaceDescriptor ws = SpaceDescriptor::Sampled(-16.0, 16.0, 1024);
  const double pi = std::numbers::pi;
  auto gauss = [&](const SpaceDescriptor &sp) {
    return Vec::Sample(sp, [&](double t) { return Complex(std::exp(-pi * t * t)); });
  };
  auto hermite1 = [&](const SpaceDescriptor &sp) {
    return Vec::Sample(sp, [&](double t) { return Complex(t * std::exp(-pi * t * t)); });
  };
  const TimeFreqGrid grid = MakeTimeFreqGrid(-6.0, 6.0, 1.0 / 16, -6.0, 6.0, 1.0 / 16);
  const WindowSpec g1 = MakeWindow(gauss(ws));
  const WindowSpec g2 = MakeWindow(hermite1(ws));
  const Vec f1 = gauss(s);
  const Vec f2 = hermite1(s);
  double worst_gap = 0.0;
  for (const Vec *a : {&f1, &f2})
    for (const Vec *b : {&f1, &f2})
      for (const WindowSpec *x : {&g1, &g2})
        for (const WindowSpec *y : {&g1, &g2})
          worst_gap = std::max(worst_gap, OrthogonalityRelation(*a, *b, *x, *y, grid).gap);
  const OrthogonalityCheck tight = OrthogonalityRelation(f1, f1, g1, g1, grid);
  const double expected = NormSquared(f1) * g1.norm_sq;
  const double tight_rel = std::abs(tight.lhs - expected) / expected;

  const CoefficientField field = Stft(f1, g1, grid);
  double worst_point = 0.0;
  for (std::size_t m = 0; m < field.rows(); ++m)
    for (std::size_t l = 0; l < field.cols(); ++l) {
      const double y = field.col_coords[l];
      const double g = field.row_coords[m];
      const Complex exact = std::polar(std::sqrt(0.5) * std::exp(-0.5 * pi * (y * y + g * g)), -pi * y * g);
      worst_point = std::max(worst_point, std::abs(field.at(m, l) - exact));
    }
  return Check(10, "stft_orthogonality", worst_gap <= 1e-3 && tight_rel <= 1e-3 && worst_point <= 1e-4,
               {{"max_gap", worst_gap},
                {"tight_relative_error", tight_rel},
                {"max_pointwise_error", worst_point}});
}

json CheckById(int id, const SuiteOptions &opts) {
  const Sizes sz = SizesFor(opts.scale);
  switch (id) {
    case 1:
      return Guarded(1, "parseval_construction", [&] { return ParsevalConstruction(sz, opts); });
    case 2:
      return Guarded(2, "bound_transfer", [&] { return BoundTransfer(sz, opts); });
    case 3:
      return Guarded(3, "factorization", [&] { return Factorization(); });
    case 4:
      return Guarded(4, "sigma_finite_support", [&] { return SigmaFinite(); });
    case 5:
      return Guarded(5, "bessel_only", [&] { return BesselOnly(); });
    case 6:
      return Guarded(6, "unbounded_bessel", [&] { return UnboundedBesselCheck(sz); });
    case 7:
      return Guarded(7, "unbounded_frame", [&] { return UnboundedFrameCheck(opts); });
    case 8:
      return Guarded(8, "cwt_tight_frame", [&] { return CwtTightFrame(); });
    case 9:
      return Guarded(9, "admissibility", [&] { return AdmissibilityCheck(); });
    case 10:
      return Guarded(10, "stft_orthogonality", [&] { return StftOrthogonality(); });
    default:
      Fail(Errc::kInvalidArgument, "check id must be in 1..10");
  }
}

json CoreChecks(const SuiteOptions &opts) {
  json checks = json::array();
  for (int id = 1; id <= 10; ++id) checks.push_back(CheckById(id, opts));
  return checks;
}

}  // namespace

json RunCheck(int id, const SuiteOptions &opts) { return CheckById(id, opts); }

json RunVerifySuite(const SuiteOptions &opts) {
  json checks = CoreChecks(opts);
  const std::string first = checks.dump();
  const std::string second = CoreChecks(opts).dump();
  checks.push_back(Check(11, "determinism", first == second,
                         {{"bytes_compared", first.size()}, {"identical", first == second}}));
  bool all = true;
  for (const auto &c : checks) all = all && c["pass"].get<bool>();
  return {{"tool", "contframe"},
          {"version", kVersion},
          {"scale", opts.scale == SuiteOptions::Scale::kFull ? "full" : "small"},
          {"tolerances",
           {{"tol_recon", opts.tol_recon},
            {"tol_frame_relative", BoundsOptions{}.tol_frame_relative},
            {"tol_parseval", BoundsOptions{}.tol_parseval}}},
          {"checks", checks},
          {"all_pass", all}};
}

}  // namespace contframe
