// include/contframe/field.hpp

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

#ifndef CONTFRAME_FIELD_HPP_
#define CONTFRAME_FIELD_HPP_

#include <cstddef>
#include <vector>

#include "contframe/hilbert.hpp"

namespace contframe {

/// Transform output <f, F(omega)> on a product grid. Rows index scales (or
/// frequencies), columns index shifts (or times). Node (i, l) represents
/// measure mass row_masses[i] * col_mass.
struct CoefficientField {
  enum class Layout { kScaleShift, kTimeFrequency };

  Layout layout = Layout::kScaleShift;
  SpaceDescriptor signal_space = SpaceDescriptor::Coordinate(1);
  std::vector<double> row_coords;
  std::vector<double> row_masses;
  std::vector<double> col_coords;
  double col_mass = 0.0;
  /// Row-major, rows() x cols().
  std::vector<Complex> values;

  // Scale-shift fields only: column l sits on signal sample
  // shift_offset + l * shift_stride, and whether the a < 0 half is present.
  std::size_t shift_offset = 0;
  std::size_t shift_stride = 1;
  bool mirrored = false;

  std::size_t rows() const { return row_coords.size(); }
  std::size_t cols() const { return col_coords.size(); }
  const Complex &at(std::size_t row, std::size_t col) const { return values[row * cols() + col]; }
  double weight(std::size_t row) const { return row_masses[row] * col_mass; }

  /// sum w |value|^2, reduced in row-major order.
  double Energy() const;
};

}  // namespace contframe

#endif  // CONTFRAME_FIELD_HPP_
