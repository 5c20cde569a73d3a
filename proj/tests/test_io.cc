// tests/test_io.cc

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

#include <cmath>
#include <cstdio>
#include <string>

#include "contframe/construct.hpp"
#include "contframe/io.hpp"
#include "test_util.hpp"

using namespace contframe;
using nlohmann::json;

TEST_CASE("signal CSV round trip is exact") {
  const auto s = SpaceDescriptor::Sampled(-1.0, 2.0, 30);
  const Vec v = Vec::Sample(s, [](double x) { return Complex(std::sin(3 * x), std::exp(x) / 7.0); });
  const Vec back = ParseSignalCsv(FormatSignalCsv(v));
  CHECK(back.space() == s);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(back[i] == v[i]);
}

TEST_CASE("malformed signal CSV") {
  CHECK_ERRC(ParseSignalCsv("t,re,im\n0,1,0\n1,1,0\n"), Errc::kParse);
  CHECK_ERRC(ParseSignalCsv("x,re,im\n0,1,0\n1,1,0\n3,1,0\n"), Errc::kParse);
  CHECK_ERRC(ParseSignalCsv("x,re,im\n0,1\n1,1,0\n"), Errc::kParse);
  CHECK_ERRC(ReadSignalCsv("/nonexistent/signal.csv"), Errc::kIo);
}

TEST_CASE("partition and frame JSON") {
  const Partition p = PartitionFromJson(json::parse(R"({"partition":{"weights":[1,2.5],"truncated":true}})"));
  CHECK(p.size() == 2);
  CHECK(p.truncated);
  CHECK(PartitionToJson(p)["partition"]["weights"][1] == 2.5);
  CHECK_ERRC(PartitionFromJson(json::parse(R"({"partition":{"weights":[1,0]}})")), Errc::kNonPositiveWeight);

  const DiscretizedFrame fr = FrameFromJson(json::parse(R"({"frame":{"vectors":[[1,0],[0,[0,1]],[1,1]]}})"));
  CHECK(fr.node_count() == 3);
  CHECK(fr.vector(1)[1] == Complex(0.0, 1.0));
  const DiscretizedFrame again = FrameFromJson(FrameToJson(fr));
  CHECK(again.node_count() == 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 2; ++i) CHECK(again.vector(j)[i] == fr.vector(j)[i]);
  CHECK_ERRC(FrameFromJson(json::parse(R"({"frame":{"vectors":[[1,0],[1]]}})")), Errc::kLengthMismatch);
}

TEST_CASE("report JSON carries the certified numbers") {
  const DiscretizedFrame fr = FrameFromJson(json::parse(R"({"frame":{"vectors":[[1,0],[0,1],[1,1]]}})"));
  const json r = ReportToJson(FrameBounds(fr));
  CHECK(r["A"].get<double>() == doctest::Approx(1.0));
  CHECK(r["B"].get<double>() == doctest::Approx(3.0));
  CHECK(r["verdict"] == "Frame");
  CHECK(r["rank"] == 2);
  CHECK(r["spectrum"].size() == 2);
  CHECK(r.contains("parseval"));
}

TEST_CASE("construction specs") {
  const Construction p = ConstructFromSpec(json::parse(R"({"construct":"parseval","dim":8,"cells":8})"));
  CHECK(p.expect_parseval);
  CHECK(FrameBounds(p.frame).parseval);
  CHECK_ERRC(ConstructFromSpec(json::parse(R"({"construct":"parseval","dim":8,"cells":5})")), Errc::kCountMismatch);
  const Construction b = ConstructFromSpec(json::parse(R"({"construct":"bessel_only","dim":16,"cells":4})"));
  CHECK(FrameBounds(b.frame).verdict == Verdict::kBesselOnly);
  const Construction e = ConstructFromSpec(json::parse(R"({"construct":"ex28","h":[1,[0,1]]})"));
  CHECK(e.details["bessel_ceiling"].get<double>() == doctest::Approx(12.0));
  const Construction s = ConstructFromSpec(
      json::parse(R"({"construct":"step","vectors":[[1,0],[0,1],[1,1]],"weights":[0.5,2,3]})"));
  CHECK(FrameBounds(s.frame).upper == doctest::Approx(3.0));
  CHECK_ERRC(ConstructFromSpec(json::parse(R"({"construct":"nope"})")), Errc::kParse);
  CHECK_ERRC(ConstructFromSpec(json::parse(R"({"dim":3})")), Errc::kParse);
}
