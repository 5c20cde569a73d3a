// src/hilbert.cc

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

#include "contframe/hilbert.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

#include "contframe/error.hpp"

namespace contframe {

namespace {

bool Close(double a, double b, double scale) {
  return std::abs(a - b) <= 1e-9 * scale;
}

// FFTW planning is not thread-safe, execution is. Plans are created once per
// (size, direction) under a lock and kept for the life of the process. All
// executions go through fftw_malloc'd buffers so the alignment, and with it
// the codelet selection, never varies between calls.
class PlanCache {
 public:
  static PlanCache &Instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan Get(std::size_t n, bool inverse) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, inverse);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    auto *buf = static_cast<fftw_complex *>(fftw_malloc(sizeof(fftw_complex) * n));
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf,
                                      inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                                      FFTW_ESTIMATE);
    fftw_free(buf);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, bool>, fftw_plan> plans_;
};

}  // namespace

SpaceDescriptor SpaceDescriptor::Coordinate(std::size_t dim) {
  if (dim < 1) Fail(Errc::kInvalidArgument, "coordinate dimension must be >= 1");
  SpaceDescriptor s;
  s.kind_ = Kind::kCoordinate;
  s.count_ = dim;
  return s;
}

SpaceDescriptor SpaceDescriptor::Sampled(double xmin, double xmax, std::size_t count) {
  if (count < 2) Fail(Errc::kInvalidArgument, "sampled grid needs count >= 2");
  if (!std::isfinite(xmin) || !std::isfinite(xmax) || !(xmax > xmin))
    Fail(Errc::kInvalidArgument, "sampled grid needs finite xmax > xmin");
  SpaceDescriptor s;
  s.kind_ = Kind::kSampled;
  s.count_ = count;
  s.xmin_ = xmin;
  s.xmax_ = xmax;
  s.step_ = (xmax - xmin) / static_cast<double>(count);
  return s;
}

SpaceDescriptor SpaceDescriptor::Frequency(double gmin, double gmax, std::size_t count,
                                           double time_origin) {
  SpaceDescriptor s = Sampled(gmin, gmax, count);
  s.domain_ = Domain::kFrequency;
  s.time_origin_ = time_origin;
  return s;
}

bool SpaceDescriptor::operator==(const SpaceDescriptor &other) const {
  if (kind_ != other.kind_ || count_ != other.count_) return false;
  if (kind_ == Kind::kCoordinate) return true;
  if (domain_ != other.domain_) return false;
  const double scale = std::max(step_, other.step_);
  return Close(xmin_, other.xmin_, scale) && Close(xmax_, other.xmax_, scale) &&
         Close(time_origin_, other.time_origin_, scale);
}

Vec::Vec(SpaceDescriptor space)
    : space_(std::move(space)), entries_(space_.length(), Complex(0.0, 0.0)) {}

Vec::Vec(SpaceDescriptor space, std::vector<Complex> entries)
    : space_(std::move(space)), entries_(std::move(entries)) {
  if (entries_.size() != space_.length())
    Fail(Errc::kLengthMismatch, "vector has " + std::to_string(entries_.size()) +
                                    " entries, space expects " +
                                    std::to_string(space_.length()));
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!std::isfinite(entries_[i].real()) || !std::isfinite(entries_[i].imag()))
      Fail(Errc::kInvalidArgument, "non-finite entry at index " + std::to_string(i));
}

Vec Vec::Sample(const SpaceDescriptor &space, const std::function<Complex(double)> &fn) {
  if (!space.is_sampled()) Fail(Errc::kWrongSpaceKind, "Sample needs a sampled space");
  std::vector<Complex> values(space.length());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = fn(space.x(j));
  return Vec(space, std::move(values));
}

Vec Vec::Basis(std::size_t dim, std::size_t index) {
  if (index >= dim) Fail(Errc::kInvalidArgument, "basis index out of range");
  Vec e(SpaceDescriptor::Coordinate(dim));
  e[index] = 1.0;
  return e;
}

Vec &Vec::operator+=(const Vec &other) {
  if (space_ != other.space_) Fail(Errc::kSpaceMismatch, "operands live in different spaces");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Vec &Vec::operator-=(const Vec &other) {
  if (space_ != other.space_) Fail(Errc::kSpaceMismatch, "operands live in different spaces");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Vec &Vec::operator*=(Complex scale) {
  for (auto &e : entries_) e *= scale;
  return *this;
}

Vec operator+(Vec lhs, const Vec &rhs) { return lhs += rhs; }
Vec operator-(Vec lhs, const Vec &rhs) { return lhs -= rhs; }
Vec operator*(Complex scale, Vec v) { return v *= scale; }

Complex Inner(const Vec &u, const Vec &v) {
  if (u.space() != v.space()) Fail(Errc::kSpaceMismatch, "inner product across spaces");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * std::conj(v[i]);
  return acc * u.space().cell_measure();
}

double NormSquared(const Vec &v) {
  double acc = 0.0;
  for (const auto &e : v.entries()) acc += std::norm(e);
  return acc * v.space().cell_measure();
}

double Norm(const Vec &v) { return std::sqrt(NormSquared(v)); }

void Fft(std::span<Complex> data, bool inverse) {
  const std::size_t n = data.size();
  if (n == 0) return;
  fftw_plan plan = PlanCache::Instance().Get(n, inverse);
  auto *buf = static_cast<fftw_complex *>(fftw_malloc(sizeof(fftw_complex) * n));
  for (std::size_t i = 0; i < n; ++i) {
    buf[i][0] = data[i].real();
    buf[i][1] = data[i].imag();
  }
  fftw_execute_dft(plan, buf, buf);
  for (std::size_t i = 0; i < n; ++i) data[i] = Complex(buf[i][0], buf[i][1]);
  fftw_free(buf);
}

Vec Dft(const Vec &f) {
  const SpaceDescriptor &space = f.space();
  if (!space.is_sampled() || space.domain() != SpaceDescriptor::Domain::kTime)
    Fail(Errc::kWrongSpaceKind, "Dft needs a time-domain sampled vector");
  const std::size_t n = space.length();
  const double dx = space.step();
  const double dg = 1.0 / (static_cast<double>(n) * dx);
  const std::size_t half = n / 2;
  std::vector<Complex> work(f.entries().begin(), f.entries().end());
  Fft(work, false);
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Output index k holds frequency (k - half) dg, FFT bin (k - half) mod n.
    const std::size_t bin = (k + n - half) % n;
    const double g = (static_cast<double>(k) - static_cast<double>(half)) * dg;
    out[k] = work[bin] * dx * std::polar(1.0, -2.0 * std::numbers::pi * space.xmin() * g);
  }
  const double gmin = -static_cast<double>(half) * dg;
  return Vec(SpaceDescriptor::Frequency(gmin, gmin + static_cast<double>(n) * dg, n,
                                        space.xmin()),
             std::move(out));
}

Vec Idft(const Vec &spectrum) {
  const SpaceDescriptor &space = spectrum.space();
  if (!space.is_sampled() || space.domain() != SpaceDescriptor::Domain::kFrequency)
    Fail(Errc::kWrongSpaceKind, "Idft needs a frequency-domain vector");
  const std::size_t n = space.length();
  const std::size_t half = n / 2;
  const double dg = space.step();
  const double dx = 1.0 / (static_cast<double>(n) * dg);
  const double x0 = space.time_origin();
  std::vector<Complex> work(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t bin = (k + n - half) % n;
    const double g = space.x(k);
    work[bin] = spectrum[k] * std::polar(1.0, 2.0 * std::numbers::pi * x0 * g);
  }
  Fft(work, true);
  for (auto &w : work) w *= dg;
  return Vec(SpaceDescriptor::Sampled(x0, x0 + static_cast<double>(n) * dx, n),
             std::move(work));
}

Complex Interpolate(const Vec &v, double t) {
  const SpaceDescriptor &space = v.space();
  if (!space.is_sampled()) Fail(Errc::kWrongSpaceKind, "interpolation needs a sampled vector");
  double pos = (t - space.xmin()) / space.step();
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) < 1e-9) pos = nearest;
  const double last = static_cast<double>(space.length() - 1);
  if (pos < 0.0 || pos > last) return {0.0, 0.0};
  const auto i = static_cast<std::size_t>(std::floor(pos));
  const double frac = pos - static_cast<double>(i);
  if (frac == 0.0 || i + 1 >= space.length()) return v[i];
  return v[i] * (1.0 - frac) + v[i + 1] * frac;
}

}  // namespace contframe
