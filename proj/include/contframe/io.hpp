// include/contframe/io.hpp

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

#ifndef CONTFRAME_IO_HPP_
#define CONTFRAME_IO_HPP_

#include <json.hpp>

#include <optional>
#include <string>

#include "contframe/field.hpp"
#include "contframe/frame.hpp"
#include "contframe/hilbert.hpp"
#include "contframe/measure.hpp"

namespace contframe {

inline constexpr const char *kVersion = "1.0.0";

// Signal CSV: header "x,re,im", one row per sample, strictly increasing
// uniform x.
Vec ReadSignalCsv(const std::string &path);
Vec ParseSignalCsv(const std::string &text);
void WriteSignalCsv(const Vec &v, const std::string &path);
std::string FormatSignalCsv(const Vec &v);

// Field CSV: "a,b,re,im" for scale-shift fields, "y,gamma,re,im" for
// time-frequency fields; one row per node, shift-major for STFT fields.
std::string FormatFieldCsv(const CoefficientField &field);
void WriteFieldCsv(const CoefficientField &field, const std::string &path);

// {"partition": {"weights": [...], "truncated": bool}}
Partition PartitionFromJson(const nlohmann::json &j);
nlohmann::json PartitionToJson(const Partition &p);

// {"frame": {"space": {...}, "weights": [...], "nodes": [[u, v], ...],
//            "vectors": [[e, ...], ...]}}
// where every entry e is a number or an [re, im] pair, and the space is
// {"kind": "coordinate", "dim": n} or
// {"kind": "sampled", "xmin": a, "xmax": b, "count": n}.
DiscretizedFrame FrameFromJson(const nlohmann::json &j);
nlohmann::json FrameToJson(const DiscretizedFrame &fr);

nlohmann::json SpaceToJson(const SpaceDescriptor &s);
SpaceDescriptor SpaceFromJson(const nlohmann::json &j);
Vec VecFromJson(const nlohmann::json &entries, const SpaceDescriptor &space);
nlohmann::json VecToJson(const Vec &v);

// {A, B, parseval, verdict, rank, spectrum: [...]}, plus tol_frame.
nlohmann::json ReportToJson(const FrameReport &r);

nlohmann::json ReadJsonFile(const std::string &path);
void WriteTextFile(const std::string &path, const std::string &text);

/// A frame built from a construction spec
///   {"construct": "parseval|step|bessel_only|ex28|ex29", ...}
/// together with the verdict the construction promises.
struct Construction {
  std::string kind;
  DiscretizedFrame frame;
  Verdict expected_verdict = Verdict::kFrame;
  bool expect_parseval = false;
  /// Construction-specific certified numbers (e.g. the Bessel mass).
  nlohmann::json details;
};

Construction ConstructFromSpec(const nlohmann::json &spec);

}  // namespace contframe

#endif  // CONTFRAME_IO_HPP_
