// src/frame.cc

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

#include "contframe/frame.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "contframe/error.hpp"
#include "parallel.hpp"

namespace contframe {

namespace {

constexpr std::size_t kBlock = 256;

void RequireSpace(const DiscretizedFrame &fr, const Vec &f) {
  if (f.space() != fr.space())
    Fail(Errc::kSpaceMismatch, "vector does not live in the frame's space");
}

Complex Dot(std::span<const Complex> u, std::span<const Complex> v) {
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

double EntryNorm(std::span<const Complex> u) { return std::sqrt(std::abs(Dot(u, u))); }

// Rayleigh-quotient power iteration for the top eigenvalue of a positive
// semidefinite map given as a callable on entry vectors.
template <typename Apply>
double PowerIteration(std::size_t dim, Apply &&apply, std::size_t max_iter) {
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  std::vector<Complex> x(dim);
  for (auto &e : x) e = Complex(gauss(rng), gauss(rng));
  double lambda = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    const double nx = EntryNorm(x);
    if (nx == 0.0) return 0.0;
    for (auto &e : x) e /= nx;
    std::vector<Complex> y = apply(x);
    const double next = Dot(x, y).real();
    x = std::move(y);
    if (it > 0 && std::abs(next - lambda) <= 1e-13 * std::abs(next)) return next;
    lambda = next;
  }
  return lambda;
}

}  // namespace

DiscretizedFrame::DiscretizedFrame(SpaceDescriptor space, std::vector<IndexPoint> nodes,
                                   std::vector<double> weights, std::vector<Complex> vectors)
    : space_(std::move(space)),
      nodes_(std::move(nodes)),
      weights_(std::move(weights)),
      vectors_(std::move(vectors)) {
  if (nodes_.empty()) nodes_.resize(weights_.size());
  if (nodes_.size() != weights_.size())
    Fail(Errc::kLengthMismatch, "node and weight lists differ in length");
  if (vectors_.size() != weights_.size() * space_.length())
    Fail(Errc::kLengthMismatch, "vector storage does not match node count x dimension");
  if (weights_.empty()) Fail(Errc::kInvalidArgument, "frame needs at least one node");
  for (std::size_t j = 0; j < weights_.size(); ++j)
    if (!std::isfinite(weights_[j]) || !(weights_[j] > 0.0))
      Fail(Errc::kNonPositiveWeight, "node " + std::to_string(j) + " has non-positive weight");
  for (const auto &v : vectors_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      Fail(Errc::kInvalidArgument, "frame vectors must be finite");
}

Vec DiscretizedFrame::vector_as_vec(std::size_t j) const {
  auto v = vector(j);
  return Vec(space_, std::vector<Complex>(v.begin(), v.end()));
}

double DiscretizedFrame::max_vector_norm() const {
  double best = 0.0;
  const double m = space_.cell_measure();
  for (std::size_t j = 0; j < node_count(); ++j) {
    double acc = 0.0;
    for (const auto &e : vector(j)) acc += std::norm(e);
    best = std::max(best, std::sqrt(acc * m));
  }
  return best;
}

const char *VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kFrame: return "Frame";
    case Verdict::kBesselOnly: return "BesselOnly";
    case Verdict::kInvalid: return "Invalid";
  }
  return "Invalid";
}

std::vector<Complex> Analysis(const DiscretizedFrame &fr, const Vec &f) {
  RequireSpace(fr, f);
  std::vector<Complex> c(fr.node_count());
  const double m = fr.space().cell_measure();
  internal::ParallelFor(
      c.size(),
      [&](std::size_t j) {
        auto v = fr.vector(j);
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < v.size(); ++i) acc += f[i] * std::conj(v[i]);
        c[j] = acc * m;
      },
      4096);
  return c;
}

Vec Synthesis(const DiscretizedFrame &fr, std::span<const Complex> coeffs) {
  if (coeffs.size() != fr.node_count())
    Fail(Errc::kLengthMismatch, "expected " + std::to_string(fr.node_count()) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
  Vec out(fr.space());
  auto w = fr.weights();
  internal::ParallelFor(
      fr.dim(),
      [&](std::size_t i) {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < fr.node_count(); ++j)
          acc += w[j] * coeffs[j] * fr.vector(j)[i];
        out[i] = acc;
      },
      16);
  return out;
}

HermitianMatrix FrameOperator(const DiscretizedFrame &fr, std::size_t limit) {
  const std::size_t d = fr.dim();
  if (d > limit)
    Fail(Errc::kDimensionTooLarge,
         "dimension " + std::to_string(d) + " exceeds the dense limit " +
             std::to_string(limit) + "; use ApplyFrameOperator instead");
  HermitianMatrix s = HermitianMatrix::Zero(d, d);
  const double m = fr.space().cell_measure();
  for (std::size_t start = 0; start < fr.node_count(); start += kBlock) {
    const std::size_t cols = std::min(kBlock, fr.node_count() - start);
    Eigen::MatrixXcd g(d, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      const double sw = std::sqrt(fr.weights()[start + c] * m);
      auto v = fr.vector(start + c);
      for (std::size_t i = 0; i < d; ++i) g(i, c) = sw * v[i];
    }
    s.noalias() += g * g.adjoint();
  }
  // Symmetrise away rounding so the eigensolver sees an exactly Hermitian matrix.
  HermitianMatrix herm = 0.5 * (s + s.adjoint());
  return herm;
}

Vec ApplyFrameOperator(const DiscretizedFrame &fr, const Vec &f) {
  return Synthesis(fr, Analysis(fr, f));
}

double Energy(const DiscretizedFrame &fr, const Vec &f) {
  const auto c = Analysis(fr, f);
  double acc = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) acc += fr.weights()[j] * std::norm(c[j]);
  return acc;
}

FrameReport FrameBounds(const DiscretizedFrame &fr, const BoundsOptions &opts) {
  FrameReport rep;
  const std::size_t d = fr.dim();
  if (d <= opts.dense_limit) {
    Eigen::SelfAdjointEigenSolver<HermitianMatrix> solver(FrameOperator(fr, opts.dense_limit),
                                                          Eigen::EigenvaluesOnly);
    const Eigen::VectorXd &ev = solver.eigenvalues();
    rep.spectrum.assign(ev.data(), ev.data() + ev.size());
    rep.dense = true;
  } else {
    auto apply = [&](const std::vector<Complex> &x) {
      Vec v(fr.space(), x);
      Vec y = ApplyFrameOperator(fr, v);
      return std::vector<Complex>(y.entries().begin(), y.entries().end());
    };
    const double top = PowerIteration(d, apply, opts.max_power_iterations);
    const double shift = top * (1.0 + 1e-12);
    auto shifted = [&](const std::vector<Complex> &x) {
      auto y = apply(x);
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = shift * x[i] - y[i];
      return y;
    };
    const double gap = PowerIteration(d, shifted, opts.max_power_iterations);
    rep.spectrum = {shift - gap, top};
    rep.dense = false;
  }
  // Tiny negative eigenvalues are rounding on a positive semidefinite matrix.
  rep.lower = std::max(0.0, rep.spectrum.front());
  rep.upper = std::max(0.0, rep.spectrum.back());
  rep.tol_frame = opts.tol_frame_relative * rep.upper;
  if (!(rep.upper > 0.0) || !std::isfinite(rep.upper)) {
    rep.verdict = Verdict::kInvalid;
  } else if (rep.lower > rep.tol_frame) {
    rep.verdict = Verdict::kFrame;
  } else {
    rep.verdict = Verdict::kBesselOnly;
  }
  if (rep.dense) {
    rep.rank = static_cast<int>(std::count_if(rep.spectrum.begin(), rep.spectrum.end(),
                                              [&](double l) { return l > rep.tol_frame; }));
    if (rep.verdict == Verdict::kInvalid) rep.rank = 0;
  }
  rep.parseval = rep.verdict == Verdict::kFrame &&
                 std::abs(rep.lower - 1.0) <= opts.tol_parseval &&
                 std::abs(rep.upper - 1.0) <= opts.tol_parseval;
  return rep;
}

Reconstruction DualReconstruct(const DiscretizedFrame &fr, const Vec &f,
                               const ReconstructOptions &opts) {
  RequireSpace(fr, f);
  const FrameReport rep = FrameBounds(fr, opts.bounds);
  if (rep.verdict != Verdict::kFrame)
    Fail(Errc::kNotAFrame, "lower frame bound " + FormatReal(rep.lower) +
                               " does not exceed tol_frame " + FormatReal(rep.tol_frame));
  const std::size_t d = fr.dim();
  const double f_norm = EntryNorm(f.entries());
  if (f_norm == 0.0) return {Vec(fr.space()), 0.0, 0};

  auto apply = [&](std::span<const Complex> x) {
    Vec y = ApplyFrameOperator(fr, Vec(fr.space(), std::vector<Complex>(x.begin(), x.end())));
    return std::vector<Complex>(y.entries().begin(), y.entries().end());
  };

  // Conjugate gradients on S x = S f; ||x - f|| <= ||r|| / A.
  const std::vector<Complex> rhs = apply(f.entries());
  const double stop = 0.1 * opts.tol_recon * rep.lower * f_norm;
  const std::size_t max_iter = 10 * d;
  std::vector<Complex> x(d, Complex(0.0, 0.0));
  std::vector<Complex> r = rhs;
  std::vector<Complex> p = r;
  double rr = Dot(r, r).real();
  std::size_t it = 0;
  bool converged = std::sqrt(rr) <= stop;
  while (!converged && it < max_iter) {
    const std::vector<Complex> sp = apply(p);
    const double psp = Dot(p, sp).real();
    if (!(psp > 0.0)) break;
    const double alpha = rr / psp;
    for (std::size_t i = 0; i < d; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * sp[i];
    }
    ++it;
    const double rr_next = Dot(r, r).real();
    if (std::sqrt(rr_next) <= stop) {
      converged = true;
      break;
    }
    const double beta = rr_next / rr;
    for (std::size_t i = 0; i < d; ++i) p[i] = r[i] + beta * p[i];
    rr = rr_next;
  }
  Vec f_hat(fr.space(), std::move(x));
  const double residual = Norm(f_hat - f) / Norm(f);
  if (!converged || residual > opts.tol_recon)
    Fail(Errc::kSolverDiverged,
         "conjugate gradients stopped after " + std::to_string(it) +
             " iterations with relative error " + FormatReal(residual) +
             " (tol_recon " + FormatReal(opts.tol_recon) + ")");
  return {std::move(f_hat), residual, it};
}

std::vector<SupportLevel> SigmaFiniteSupport(const DiscretizedFrame &fr, const Vec &f,
                                             int n_max) {
  RequireSpace(fr, f);
  if (n_max < 1) Fail(Errc::kInvalidArgument, "n_max must be >= 1");
  const auto c = Analysis(fr, f);
  const double b = FrameBounds(fr).upper;
  const double f_sq = NormSquared(f);
  std::vector<SupportLevel> levels;
  levels.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= n_max; ++n) {
    SupportLevel lvl;
    lvl.n = n;
    const double threshold = 1.0 / n;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (std::abs(c[j]) >= threshold) {
        lvl.nodes.push_back(j);
        lvl.mass += fr.weights()[j];
      }
    }
    lvl.bound = static_cast<double>(n) * n * b * f_sq;
    levels.push_back(std::move(lvl));
  }
  return levels;
}

}  // namespace contframe
