// tests/test_util.hpp

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

#ifndef CONTFRAME_TESTS_TEST_UTIL_HPP_
#define CONTFRAME_TESTS_TEST_UTIL_HPP_

#include <doctest.h>

#include <cmath>
#include <random>

#include "contframe/error.hpp"
#include "contframe/hilbert.hpp"

namespace contframe::testing {

// Runs stmt and reports the Errc it raised, or nullopt-like -1 when none.
template <typename F>
int ErrcOf(F &&stmt) {
  try {
    stmt();
  } catch (const Error &e) {
    return static_cast<int>(e.code());
  }
  return -1;
}

#define CHECK_ERRC(stmt, errc) \
  CHECK(::contframe::testing::ErrcOf([&] { (void)(stmt); }) == static_cast<int>(errc))

inline Vec RandomCoordinate(std::mt19937_64 &rng, std::size_t dim) {
  std::normal_distribution<double> g;
  Vec v(SpaceDescriptor::Coordinate(dim));
  for (std::size_t i = 0; i < dim; ++i) v[i] = Complex(g(rng), g(rng));
  return v;
}

inline double Gauss(double t) { return std::exp(-M_PI * t * t); }

}  // namespace contframe::testing

#endif  // CONTFRAME_TESTS_TEST_UTIL_HPP_
