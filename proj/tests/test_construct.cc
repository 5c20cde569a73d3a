// tests/test_construct.cc

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

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>
#include <vector>

#include "contframe/construct.hpp"
#include "contframe/frame.hpp"
#include "contframe/measure.hpp"
#include "test_util.hpp"

using namespace contframe;
using contframe::testing::RandomCoordinate;

namespace {

Partition RandomPartition(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.01, 100.0);
  std::vector<double> w(n);
  for (auto &x : w) x = u(rng);
  return MakePartition(w);
}

}  // namespace

TEST_CASE("Parseval step frame over any positive-weight partition") {
  std::mt19937_64 rng(21);
  for (std::size_t dim : {1u, 2u, 7u, 20u}) {
    const DiscretizedFrame fr = ParsevalStepFrame(RandomPartition(rng, dim));
    const FrameReport r = FrameBounds(fr);
    CHECK(r.parseval);
    const Vec f = RandomCoordinate(rng, dim);
    CHECK(Norm(Synthesis(fr, Analysis(fr, f)) - f) <= 1e-12 * Norm(f));
  }
  // Truncated unit and geometric covers.
  CHECK(FrameBounds(ParsevalStepFrame(SigmaFiniteCover(CoverRule::Unit(), 5))).parseval);
  CHECK(FrameBounds(ParsevalStepFrame(SigmaFiniteCover(CoverRule::Geometric(3.0), 5))).parseval);
}

TEST_CASE("step frame bounds equal the discrete frame bounds for any weights") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 10; ++t) {
    DiscreteSystem sys;
    for (int k = 0; k < 7; ++k) sys.vectors.push_back(RandomCoordinate(rng, 4));
    // Oracle: eigenvalues of sum f_k f_k^* built from the raw vectors.
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(4, 4);
    for (const auto &v : sys.vectors) {
      Eigen::VectorXcd e(4);
      for (int i = 0; i < 4; ++i) e(i) = v[i];
      s += e * e.adjoint();
    }
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(s).eigenvalues();
    const FrameReport r = FrameBounds(StepFrame(RandomPartition(rng, 7), sys));
    CHECK(std::abs(r.lower - ev(0)) <= 1e-10);
    CHECK(std::abs(r.upper - ev(3)) <= 1e-10);
  }
  DiscreteSystem two;
  two.vectors = {Vec::Basis(2, 0), Vec::Basis(2, 1)};
  CHECK_ERRC(StepFrame(SigmaFiniteCover(CoverRule::Unit(), 3), two), Errc::kCountMismatch);
}

TEST_CASE("countable systems: infinitely many members in finite dimension") {
  const double decay = 0.5;
  const DiscreteSystem sys = InfiniteMembersFiniteDim(3, 6, decay);
  const DiscretizedFrame fr = StepFrame(SigmaFiniteCover(CoverRule::Geometric(2.0), sys.vectors.size()), sys);
  const FrameReport r = FrameBounds(fr);
  const double exact = (1.0 - std::pow(decay, 12)) / (1.0 - decay * decay);
  CHECK(r.lower == doctest::Approx(exact).epsilon(1e-12));
  CHECK(r.upper == doctest::Approx(exact).epsilon(1e-12));
  REQUIRE(sys.declared_bounds.has_value());
  CHECK(sys.declared_bounds->upper == doctest::Approx(exact));
}

TEST_CASE("Bessel-only map: N cells in a larger space") {
  DiscreteSystem sys;
  for (std::size_t k = 0; k < 4; ++k) sys.vectors.push_back(Vec::Basis(16, k));
  std::mt19937_64 rng(23);
  const FrameReport r = FrameBounds(BesselOnlyMap(RandomPartition(rng, 4), sys));
  CHECK(r.verdict == Verdict::kBesselOnly);
  CHECK(r.upper == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(*r.rank == 4);
  CHECK_ERRC(BesselOnlyMap(SigmaFiniteCover(CoverRule::Unit(), 4), sys), Errc::kInvalidArgument);
  CHECK_ERRC(BesselOnlyMap(RandomPartition(rng, 3), sys), Errc::kCountMismatch);
}

TEST_CASE("unbounded Bessel map: midpoint-sum oracle, monotone growth to 6|h|^2") {
  const Vec h(SpaceDescriptor::Coordinate(3), {Complex(1.0), Complex(0.0, -1.0), Complex(0.5)});
  double prev = 0.0, prev_norm = 0.0;
  for (int level = 0; level <= 3; ++level) {
    const UnboundedBesselGrid grid = UnboundedBesselGrid{}.Refined(level);
    const DiscretizedFrame fr = UnboundedBessel(h, grid);
    // Rank one: S = (sum_j w_j b(x_j)) h h^*, so B = sum_j w_j b(x_j) |h|^2.
    double mass = 0.0;
    for (std::size_t j = 0; j < fr.node_count(); ++j)
      mass += fr.weights()[j] * UnboundedProfile(fr.nodes()[j].first);
    const FrameReport r = FrameBounds(fr);
    CHECK(r.upper == doctest::Approx(mass * NormSquared(h)).epsilon(1e-12));
    CHECK(r.verdict == Verdict::kBesselOnly);
    CHECK(r.upper <= 6.0 * NormSquared(h));
    CHECK(r.upper >= prev);
    if (level > 0) CHECK(fr.max_vector_norm() >= 2.0 * prev_norm * (1 - 1e-12));
    prev = r.upper;
    prev_norm = fr.max_vector_norm();
  }
  // Analytic ceiling: int_{-1}^{1} |x|^{-1/2} + 2 int_1^inf x^{-2} = 4 + 2.
  CHECK(prev / NormSquared(h) == doctest::Approx(6.0).epsilon(0.01));
  CHECK(UnboundedProfile(0.0) == 0.0);
  CHECK(UnboundedProfile(0.25) == doctest::Approx(2.0));
  CHECK(UnboundedProfile(-2.0) == doctest::Approx(0.25));
  CHECK_ERRC(UnboundedBessel(Vec(SpaceDescriptor::Coordinate(2))), Errc::kZeroVector);
}

TEST_CASE("norm-unbounded frame F - G") {
  const Vec h = Vec::Basis(2, 0);
  const DiscretizedFrame unit = UnboundedBessel(h, UnboundedBesselGrid{}.Refined(1));
  const DiscretizedFrame bessel = Scaled(unit, std::sqrt(0.01 / FrameBounds(unit).upper));
  CHECK(FrameBounds(bessel).upper == doctest::Approx(0.01).epsilon(1e-12));
  const DiscretizedFrame g = StepFrameOnNodes(bessel, OrthonormalBasis(2));
  const FrameReport gr = FrameBounds(g);
  CHECK(gr.parseval);
  const FrameReport r = FrameBounds(UnboundedFrame(bessel, g));
  CHECK(r.lower >= 0.81 - 0.02);
  CHECK(r.upper <= 0.01 + 1.0 + 0.02);
  CHECK(UnboundedFrame(bessel, g).max_vector_norm() >= bessel.max_vector_norm() - g.max_vector_norm());

  // Zero Bessel map leaves the frame untouched.
  const DiscretizedFrame zero = Scaled(bessel, 0.0);
  const FrameReport zr = FrameBounds(UnboundedFrame(zero, g));
  CHECK(zr.lower == doctest::Approx(gr.lower));
  CHECK(zr.upper == doctest::Approx(gr.upper));

  CHECK_ERRC(UnboundedFrame(Scaled(unit, 1.0), g), Errc::kBoundOrderViolation);
}
