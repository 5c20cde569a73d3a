// include/contframe/frame.hpp

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

#ifndef CONTFRAME_FRAME_HPP_
#define CONTFRAME_FRAME_HPP_

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "contframe/hilbert.hpp"

namespace contframe {

/// Position of a quadrature node in the index set. One-dimensional index
/// sets use only `first`; (a, b) and (y, gamma) grids use both.
struct IndexPoint {
  double first = 0.0;
  double second = 0.0;
};

/// Quadrature representation of a map F: Omega -> H over a measure space.
/// Node j carries the measure mass w_j > 0 it represents and the vector
/// F_j = F(omega_j). Vectors are stored contiguously, node-major.
class DiscretizedFrame {
 public:
  DiscretizedFrame(SpaceDescriptor space, std::vector<IndexPoint> nodes,
                   std::vector<double> weights, std::vector<Complex> vectors);

  const SpaceDescriptor &space() const { return space_; }
  std::size_t node_count() const { return weights_.size(); }
  std::size_t dim() const { return space_.length(); }
  std::span<const IndexPoint> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  /// Entries of F_j.
  std::span<const Complex> vector(std::size_t j) const {
    return {vectors_.data() + j * dim(), dim()};
  }
  Vec vector_as_vec(std::size_t j) const;
  /// max_j ||F_j||.
  double max_vector_norm() const;

 private:
  SpaceDescriptor space_;
  std::vector<IndexPoint> nodes_;
  std::vector<double> weights_;
  std::vector<Complex> vectors_;
};

enum class Verdict { kFrame, kBesselOnly, kInvalid };
const char *VerdictName(Verdict v);

struct FrameReport {
  double lower = 0.0;  // A
  double upper = 0.0;  // B
  bool parseval = false;
  Verdict verdict = Verdict::kInvalid;
  /// Eigenvalues of S, ascending. Only the extremes when the bounds came
  /// from iteration rather than a dense decomposition.
  std::vector<double> spectrum;
  /// Number of eigenvalues above tol_frame; unset for iterative bounds.
  std::optional<int> rank;
  double tol_frame = 0.0;
  bool dense = true;
};

struct BoundsOptions {
  double tol_frame_relative = 1e-10;
  double tol_parseval = 1e-10;
  std::size_t dense_limit = 2048;
  std::size_t max_power_iterations = 5000;
};

struct ReconstructOptions {
  double tol_recon = 1e-8;
  BoundsOptions bounds;
};

struct Reconstruction {
  Vec f_hat;
  double residual = 0.0;
  std::size_t iterations = 0;
};

struct SupportLevel {
  int n = 0;
  std::vector<std::size_t> nodes;
  double mass = 0.0;
  /// n^2 B ||f||^2, the ceiling mass must respect.
  double bound = 0.0;
};

using HermitianMatrix = Eigen::MatrixXcd;

/// c_j = <f, F_j>.
std::vector<Complex> Analysis(const DiscretizedFrame &fr, const Vec &f);
/// sum_j w_j c_j F_j.
Vec Synthesis(const DiscretizedFrame &fr, std::span<const Complex> coeffs);
/// Matrix of S f = sum_j w_j <f, F_j> F_j acting on entries, (S f)_i =
/// sum_k S_ik f_k. For sampled spaces the grid measure dx is folded in, so
/// the eigenvalues are those of the operator. Throws DimensionTooLarge past
/// `limit`.
HermitianMatrix FrameOperator(const DiscretizedFrame &fr, std::size_t limit = 2048);
/// Matrix-free S f = T T^* f.
Vec ApplyFrameOperator(const DiscretizedFrame &fr, const Vec &f);
/// sum_j w_j |<f, F_j>|^2.
double Energy(const DiscretizedFrame &fr, const Vec &f);

/// Optimal bounds A = lambda_min(S), B = lambda_max(S) and the verdict.
FrameReport FrameBounds(const DiscretizedFrame &fr, const BoundsOptions &opts = {});

/// f_hat = sum_j w_j <f, F_j> S^{-1} F_j, computed as the conjugate
/// gradient solution of S x = S f.
Reconstruction DualReconstruct(const DiscretizedFrame &fr, const Vec &f,
                               const ReconstructOptions &opts = {});

/// Level sets K_n = {j : |<f, F_j>| >= 1/n} for n = 1..n_max.
std::vector<SupportLevel> SigmaFiniteSupport(const DiscretizedFrame &fr, const Vec &f,
                                             int n_max);

}  // namespace contframe

#endif  // CONTFRAME_FRAME_HPP_
