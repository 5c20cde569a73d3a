// src/io.cc

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

#include "contframe/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "contframe/construct.hpp"
#include "contframe/error.hpp"

namespace contframe {

using nlohmann::json;

namespace {

// Shortest round-trip representation, so files reproduce doubles exactly.
std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string ReadTextFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(Errc::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Complex EntryFromJson(const json &e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  Fail(Errc::kParse, "vector entry must be a number or an [re, im] pair");
}

json EntryToJson(Complex c) {
  if (c.imag() == 0.0) return c.real();
  return json::array({c.real(), c.imag()});
}

template <typename T>
T Get(const json &j, const char *key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &e) {
    Fail(Errc::kParse, std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
T Require(const json &j, const char *key) {
  if (!j.contains(key)) Fail(Errc::kParse, std::string("missing field '") + key + "'");
  return Get<T>(j, key, T{});
}

Partition PartitionForCells(const json &spec, std::size_t cells, bool finite = false) {
  if (spec.contains("weights")) {
    const auto w = Require<std::vector<double>>(spec, "weights");
    if (w.size() != cells)
      Fail(Errc::kCountMismatch, "weights list has " + std::to_string(w.size()) +
                                     " entries for " + std::to_string(cells) + " cells");
    return MakePartition(w, Get<bool>(spec, "truncated", false));
  }
  if (spec.contains("partition")) {
    Partition p = PartitionFromJson(spec);
    if (p.size() != cells)
      Fail(Errc::kCountMismatch, "partition has " + std::to_string(p.size()) + " cells for " +
                                     std::to_string(cells) + " vectors");
    return p;
  }
  const std::string cover = Get<std::string>(spec, "cover", "unit");
  if (finite && !spec.contains("cover")) return MakePartition(std::vector<double>(cells, 1.0));
  if (cover == "unit") return SigmaFiniteCover(CoverRule::Unit(), cells);
  if (cover == "geometric")
    return SigmaFiniteCover(CoverRule::Geometric(Get<double>(spec, "ratio", 2.0)), cells);
  Fail(Errc::kParse, "unknown cover '" + cover + "'");
}

DiscreteSystem SystemFromJson(const json &vectors, std::size_t dim_hint) {
  if (!vectors.is_array() || vectors.empty())
    Fail(Errc::kParse, "'vectors' must be a non-empty array");
  const std::size_t dim = vectors.front().size();
  if (dim_hint != 0 && dim != dim_hint)
    Fail(Errc::kLengthMismatch, "vector length differs from 'dim'");
  DiscreteSystem sys;
  for (const auto &v : vectors) sys.vectors.push_back(VecFromJson(v, SpaceDescriptor::Coordinate(dim)));
  return sys;
}

UnboundedBesselGrid GridFromSpec(const json &spec) {
  UnboundedBesselGrid g;
  g.half_width = Get<double>(spec, "half_width", g.half_width);
  g.core_cells = Get<std::size_t>(spec, "core_cells", g.core_cells);
  g.tail_octaves = Get<std::size_t>(spec, "tail_octaves", g.tail_octaves);
  g.tail_voices = Get<std::size_t>(spec, "tail_voices", g.tail_voices);
  return g.Refined(Get<int>(spec, "refine", 0));
}

Vec DirectionFromSpec(const json &spec, std::size_t dim) {
  if (spec.contains("h")) return VecFromJson(spec.at("h"), SpaceDescriptor::Coordinate(dim));
  return Vec::Basis(dim, 0);
}

}  // namespace

Vec ParseSignalCsv(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) Fail(Errc::kParse, "signal CSV is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,re,im") Fail(Errc::kParse, "signal CSV header must be 'x,re,im'");
  std::vector<double> xs;
  std::vector<Complex> values;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double x = 0, re = 0, im = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ls(line);
    if (!(ls >> x >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
      Fail(Errc::kParse, "malformed signal CSV row " + std::to_string(row));
    xs.push_back(x);
    values.emplace_back(re, im);
  }
  if (xs.size() < 2) Fail(Errc::kParse, "signal CSV needs at least two rows");
  const double dx = xs[1] - xs[0];
  if (!(dx > 0.0)) Fail(Errc::kParse, "signal CSV x must be strictly increasing");
  for (std::size_t j = 1; j < xs.size(); ++j) {
    const double expect = xs[0] + static_cast<double>(j) * dx;
    if (std::abs(xs[j] - expect) > 1e-6 * dx)
      Fail(Errc::kParse, "signal CSV x is not uniform at row " + std::to_string(j + 2));
  }
  const double xmin = xs[0];
  return Vec(SpaceDescriptor::Sampled(xmin, xmin + static_cast<double>(xs.size()) * dx, xs.size()),
             std::move(values));
}

Vec ReadSignalCsv(const std::string &path) { return ParseSignalCsv(ReadTextFile(path)); }

std::string FormatSignalCsv(const Vec &v) {
  if (!v.space().is_sampled()) Fail(Errc::kWrongSpaceKind, "only sampled vectors have a CSV form");
  std::string out = "x,re,im\n";
  for (std::size_t j = 0; j < v.size(); ++j)
    out += Num(v.space().x(j)) + "," + Num(v[j].real()) + "," + Num(v[j].imag()) + "\n";
  return out;
}

void WriteSignalCsv(const Vec &v, const std::string &path) { WriteTextFile(path, FormatSignalCsv(v)); }

std::string FormatFieldCsv(const CoefficientField &field) {
  std::string out;
  if (field.layout == CoefficientField::Layout::kScaleShift) {
    out = "a,b,re,im\n";
    for (std::size_t i = 0; i < field.rows(); ++i)
      for (std::size_t l = 0; l < field.cols(); ++l) {
        const Complex v = field.at(i, l);
        out += Num(field.row_coords[i]) + "," + Num(field.col_coords[l]) + "," + Num(v.real()) +
               "," + Num(v.imag()) + "\n";
      }
  } else {
    out = "y,gamma,re,im\n";
    for (std::size_t l = 0; l < field.cols(); ++l)
      for (std::size_t m = 0; m < field.rows(); ++m) {
        const Complex v = field.at(m, l);
        out += Num(field.col_coords[l]) + "," + Num(field.row_coords[m]) + "," + Num(v.real()) +
               "," + Num(v.imag()) + "\n";
      }
  }
  return out;
}

void WriteFieldCsv(const CoefficientField &field, const std::string &path) {
  WriteTextFile(path, FormatFieldCsv(field));
}

Partition PartitionFromJson(const json &j) {
  if (!j.contains("partition")) Fail(Errc::kParse, "missing 'partition' object");
  const json &p = j.at("partition");
  const auto w = Require<std::vector<double>>(p, "weights");
  return MakePartition(w, Get<bool>(p, "truncated", false));
}

json PartitionToJson(const Partition &p) {
  return {{"partition", {{"weights", p.weights()}, {"truncated", p.truncated}}}};
}

json SpaceToJson(const SpaceDescriptor &s) {
  if (s.is_coordinate()) return {{"kind", "coordinate"}, {"dim", s.length()}};
  return {{"kind", "sampled"}, {"xmin", s.xmin()}, {"xmax", s.xmax()}, {"count", s.length()}};
}

SpaceDescriptor SpaceFromJson(const json &j) {
  const std::string kind = Require<std::string>(j, "kind");
  if (kind == "coordinate") return SpaceDescriptor::Coordinate(Require<std::size_t>(j, "dim"));
  if (kind == "sampled")
    return SpaceDescriptor::Sampled(Require<double>(j, "xmin"), Require<double>(j, "xmax"),
                                    Require<std::size_t>(j, "count"));
  Fail(Errc::kParse, "unknown space kind '" + kind + "'");
}

Vec VecFromJson(const json &entries, const SpaceDescriptor &space) {
  if (!entries.is_array()) Fail(Errc::kParse, "vector must be a JSON array");
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const auto &e : entries) values.push_back(EntryFromJson(e));
  return Vec(space, std::move(values));
}

json VecToJson(const Vec &v) {
  json out = json::array();
  for (const auto &e : v.entries()) out.push_back(EntryToJson(e));
  return out;
}

DiscretizedFrame FrameFromJson(const json &j) {
  if (!j.contains("frame")) Fail(Errc::kParse, "missing 'frame' object");
  const json &f = j.at("frame");
  const json &vectors = f.contains("vectors") ? f.at("vectors") : json();
  if (!vectors.is_array() || vectors.empty()) Fail(Errc::kParse, "'vectors' must be a non-empty array");
  const SpaceDescriptor space =
      f.contains("space") ? SpaceFromJson(f.at("space"))
                          : SpaceDescriptor::Coordinate(vectors.front().size());
  std::vector<double> weights = f.contains("weights")
                                    ? Require<std::vector<double>>(f, "weights")
                                    : std::vector<double>(vectors.size(), 1.0);
  if (weights.size() != vectors.size())
    Fail(Errc::kLengthMismatch, "'weights' and 'vectors' differ in length");
  std::vector<IndexPoint> nodes;
  if (f.contains("nodes")) {
    for (const auto &n : f.at("nodes")) {
      if (n.is_number()) {
        nodes.push_back({n.get<double>(), 0.0});
      } else if (n.is_array() && n.size() == 2) {
        nodes.push_back({n[0].get<double>(), n[1].get<double>()});
      } else {
        Fail(Errc::kParse, "node must be a number or a [u, v] pair");
      }
    }
  } else {
    for (std::size_t k = 0; k < vectors.size(); ++k) nodes.push_back({static_cast<double>(k), 0.0});
  }
  std::vector<Complex> data;
  data.reserve(vectors.size() * space.length());
  for (const auto &v : vectors) {
    const Vec vec = VecFromJson(v, space);
    data.insert(data.end(), vec.entries().begin(), vec.entries().end());
  }
  return DiscretizedFrame(space, std::move(nodes), std::move(weights), std::move(data));
}

json FrameToJson(const DiscretizedFrame &fr) {
  json nodes = json::array();
  for (const auto &n : fr.nodes()) nodes.push_back(json::array({n.first, n.second}));
  json vectors = json::array();
  for (std::size_t j = 0; j < fr.node_count(); ++j) vectors.push_back(VecToJson(fr.vector_as_vec(j)));
  return {{"frame",
           {{"space", SpaceToJson(fr.space())},
            {"weights", std::vector<double>(fr.weights().begin(), fr.weights().end())},
            {"nodes", nodes},
            {"vectors", vectors}}}};
}

json ReportToJson(const FrameReport &r) {
  json out = {{"A", r.lower},
              {"B", r.upper},
              {"parseval", r.parseval},
              {"verdict", VerdictName(r.verdict)},
              {"spectrum", r.spectrum},
              {"tol_frame", r.tol_frame},
              {"method", r.dense ? "dense" : "power_iteration"}};
  out["rank"] = r.rank ? json(*r.rank) : json(nullptr);
  return out;
}

json ReadJsonFile(const std::string &path) {
  try {
    return json::parse(ReadTextFile(path));
  } catch (const json::exception &e) {
    Fail(Errc::kParse, path + ": " + e.what());
  }
}

void WriteTextFile(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(Errc::kIo, "cannot write " + path);
  out << text;
  if (!out) Fail(Errc::kIo, "write to " + path + " failed");
}

Construction ConstructFromSpec(const json &spec) {
  const std::string kind = Require<std::string>(spec, "construct");
  if (kind == "parseval") {
    const auto dim = Require<std::size_t>(spec, "dim");
    const auto cells = Get<std::size_t>(spec, "cells", dim);
    if (cells != dim)
      Fail(Errc::kCountMismatch, "an orthonormal basis of dimension " + std::to_string(dim) +
                                     " needs exactly " + std::to_string(dim) + " cells");
    return {kind, ParsevalStepFrame(PartitionForCells(spec, cells)), Verdict::kFrame, true, json::object()};
  }
  if (kind == "step") {
    DiscreteSystem sys = SystemFromJson(spec.value("vectors", json()), Get<std::size_t>(spec, "dim", 0));
    return {kind, StepFrame(PartitionForCells(spec, sys.vectors.size()), sys), Verdict::kFrame, false,
            json::object()};
  }
  if (kind == "bessel_only") {
    const auto dim = Require<std::size_t>(spec, "dim");
    DiscreteSystem sys;
    if (spec.contains("vectors")) {
      sys = SystemFromJson(spec.at("vectors"), dim);
    } else {
      const auto cells = Require<std::size_t>(spec, "cells");
      for (std::size_t k = 0; k < cells && k < dim; ++k) sys.vectors.push_back(Vec::Basis(dim, k));
      if (cells > dim) Fail(Errc::kInvalidArgument, "more cells than basis vectors");
    }
    return {kind, BesselOnlyMap(PartitionForCells(spec, sys.vectors.size(), true), sys),
            Verdict::kBesselOnly, false, json::object()};
  }
  if (kind == "ex28") {
    const auto dim = Get<std::size_t>(spec, "dim", 2);
    const Vec h = DirectionFromSpec(spec, dim);
    DiscretizedFrame fr = UnboundedBessel(h, GridFromSpec(spec));
    json details = {{"bessel_ceiling", NormSquared(h) * kUnboundedProfileMass},
                    {"max_node_norm", fr.max_vector_norm()},
                    {"nodes", fr.node_count()}};
    return {kind, std::move(fr), dim >= 2 ? Verdict::kBesselOnly : Verdict::kFrame, false, details};
  }
  if (kind == "ex29") {
    const auto dim = Get<std::size_t>(spec, "dim", 2);
    const double target = Get<double>(spec, "bessel_bound", 0.01);
    if (!(target >= 0.0)) Fail(Errc::kInvalidArgument, "bessel_bound must be >= 0");
    const DiscretizedFrame unit = UnboundedBessel(DirectionFromSpec(spec, dim), GridFromSpec(spec));
    const double unit_b = FrameBounds(unit).upper;
    const DiscretizedFrame bessel = Scaled(unit, std::sqrt(target / unit_b));
    const DiscretizedFrame parseval = StepFrameOnNodes(bessel, OrthonormalBasis(dim));
    const FrameReport b_rep = FrameBounds(bessel);
    const FrameReport g_rep = FrameBounds(parseval);
    DiscretizedFrame diff = UnboundedFrame(bessel, parseval);
    const double gap = std::sqrt(g_rep.lower) - std::sqrt(b_rep.upper);
    json details = {{"B1", b_rep.upper},
                    {"A2", g_rep.lower},
                    {"B2", g_rep.upper},
                    {"predicted_lower", gap * gap},
                    {"predicted_upper", b_rep.upper + g_rep.upper},
                    {"max_node_norm", diff.max_vector_norm()},
                    {"nodes", diff.node_count()}};
    return {kind, std::move(diff), Verdict::kFrame, false, details};
  }
  Fail(Errc::kParse, "unknown construction '" + kind + "'");
}

}  // namespace contframe
