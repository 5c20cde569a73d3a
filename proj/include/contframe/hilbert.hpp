// include/contframe/hilbert.hpp

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

#ifndef CONTFRAME_HILBERT_HPP_
#define CONTFRAME_HILBERT_HPP_

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace contframe {

using Complex = std::complex<double>;

/// A concrete Hilbert space: either C^dim with the Euclidean inner product,
/// or complex functions sampled on the uniform grid
///   x_j = xmin + j * dx,  j = 0 .. count-1,  dx = (xmax - xmin) / count,
/// with the left-endpoint Riemann sum as inner product.
///
/// Sampled spaces come in two flavours. Time-domain grids are what users
/// build. Frequency-domain grids are produced by Dft() and remember the
/// origin of the time grid they came from, so that Idft() can undo the
/// phase convention exactly.
class SpaceDescriptor {
 public:
  enum class Kind { kCoordinate, kSampled };
  enum class Domain { kTime, kFrequency };

  static SpaceDescriptor Coordinate(std::size_t dim);
  static SpaceDescriptor Sampled(double xmin, double xmax, std::size_t count);
  static SpaceDescriptor Frequency(double gmin, double gmax, std::size_t count,
                                   double time_origin);

  Kind kind() const { return kind_; }
  Domain domain() const { return domain_; }
  bool is_coordinate() const { return kind_ == Kind::kCoordinate; }
  bool is_sampled() const { return kind_ == Kind::kSampled; }

  std::size_t length() const { return count_; }
  double xmin() const { return xmin_; }
  double xmax() const { return xmax_; }
  double step() const { return step_; }
  double time_origin() const { return time_origin_; }

  /// Grid coordinate of sample j (sampled spaces only).
  double x(std::size_t j) const { return xmin_ + static_cast<double>(j) * step_; }

  /// Measure attached to one entry: 1 for coordinates, dx for samples.
  double cell_measure() const { return is_sampled() ? step_ : 1.0; }

  /// Tolerant equality: grids match when their endpoints agree to 1e-9 dx.
  bool operator==(const SpaceDescriptor &other) const;
  bool operator!=(const SpaceDescriptor &other) const { return !(*this == other); }

 private:
  SpaceDescriptor() = default;

  Kind kind_ = Kind::kCoordinate;
  Domain domain_ = Domain::kTime;
  std::size_t count_ = 0;
  double xmin_ = 0.0;
  double xmax_ = 0.0;
  double step_ = 1.0;
  double time_origin_ = 0.0;
};

/// An element of a SpaceDescriptor. Entries are always finite.
class Vec {
 public:
  explicit Vec(SpaceDescriptor space);
  Vec(SpaceDescriptor space, std::vector<Complex> entries);

  /// Samples fn on the grid of a sampled space.
  static Vec Sample(const SpaceDescriptor &space,
                    const std::function<Complex(double)> &fn);
  /// Canonical basis vector e_{index} (zero based) of a coordinate space.
  static Vec Basis(std::size_t dim, std::size_t index);

  const SpaceDescriptor &space() const { return space_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const Complex> entries() const { return entries_; }
  std::span<Complex> mutable_entries() { return entries_; }
  const Complex &operator[](std::size_t i) const { return entries_[i]; }
  Complex &operator[](std::size_t i) { return entries_[i]; }

  Vec &operator+=(const Vec &other);
  Vec &operator-=(const Vec &other);
  Vec &operator*=(Complex scale);

 private:
  SpaceDescriptor space_;
  std::vector<Complex> entries_;
};

Vec operator+(Vec lhs, const Vec &rhs);
Vec operator-(Vec lhs, const Vec &rhs);
Vec operator*(Complex scale, Vec v);

/// <u, v>, linear in u and conjugate-linear in v.
Complex Inner(const Vec &u, const Vec &v);
double NormSquared(const Vec &v);
double Norm(const Vec &v);

/// Continuous Fourier transform on the grid, convention
///   f^(g) = integral f(x) exp(-2 pi i x g) dx.
/// The output lives on the centred frequency grid g_k = (k - count/2) dg
/// with dg = 1 / (count dx); with that grid measure the map is unitary.
Vec Dft(const Vec &f);
/// Inverse of Dft(); requires a frequency-domain vector.
Vec Idft(const Vec &spectrum);

/// Linear interpolation of a sampled vector at an arbitrary abscissa, zero
/// outside [x_0, x_{count-1}]. Exact at grid points.
Complex Interpolate(const Vec &v, double t);

/// Discrete Fourier transform of a raw buffer (unnormalised, exp(-2 pi i jk/n)
/// for forward, exp(+...) for inverse). Thread-safe.
void Fft(std::span<Complex> data, bool inverse);

}  // namespace contframe

#endif  // CONTFRAME_HILBERT_HPP_
