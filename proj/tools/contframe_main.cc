// tools/contframe_main.cc

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

// Command line front end. Every command prints a JSON report (tool version,
// effective tolerances, certified numbers) and exits with
//   0 on success, 1 on input errors, 2 when a verification fails.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "contframe/contframe.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerification = 2;

struct StatusError : std::runtime_error {
  StatusError(cf_status s, const std::string &msg) : std::runtime_error(msg), status(s) {}
  cf_status status;
};

void Check(cf_status s) {
  if (s != CF_OK) throw StatusError(s, cf_last_error_message());
}

struct VecDel { void operator()(cf_vec *p) const { cf_vec_destroy(p); } };
struct FrameDel { void operator()(cf_frame *p) const { cf_frame_destroy(p); } };
struct ReportDel { void operator()(cf_report *p) const { cf_report_destroy(p); } };
struct FieldDel { void operator()(cf_field *p) const { cf_field_destroy(p); } };
struct WaveletDel { void operator()(cf_wavelet *p) const { cf_wavelet_destroy(p); } };
struct WindowDel { void operator()(cf_window *p) const { cf_window_destroy(p); } };
struct StrDel { void operator()(char *p) const { cf_string_free(p); } };

using VecPtr = std::unique_ptr<cf_vec, VecDel>;
using FramePtr = std::unique_ptr<cf_frame, FrameDel>;
using ReportPtr = std::unique_ptr<cf_report, ReportDel>;
using FieldPtr = std::unique_ptr<cf_field, FieldDel>;
using WaveletPtr = std::unique_ptr<cf_wavelet, WaveletDel>;
using WindowPtr = std::unique_ptr<cf_window, WindowDel>;
using StrPtr = std::unique_ptr<char, StrDel>;

json TakeJson(char *raw) {
  StrPtr owned(raw);
  return json::parse(owned.get());
}

std::string ReadText(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StatusError(CF_ERR_IO, "Io: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw StatusError(CF_ERR_IO, "Io: cannot write " + path);
}

bool EndsWith(const std::string &s, const std::string &suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// Signals come as "x,re,im" CSV, or as a JSON array of entries for
// coordinate spaces.
VecPtr LoadSignal(const std::string &path) {
  cf_vec *v = nullptr;
  if (EndsWith(path, ".json")) {
    Check(cf_vec_from_json(ReadText(path).c_str(), &v));
  } else {
    Check(cf_vec_read_csv(path.c_str(), &v));
  }
  return VecPtr(v);
}

// Sampled vectors go to "x,re,im" CSV; coordinate vectors to a JSON array
// of [re, im] pairs.
void SaveVector(const cf_vec *v, const std::string &path) {
  int sampled = 0;
  Check(cf_vec_grid(v, &sampled, nullptr, nullptr, nullptr));
  if (sampled != 0) {
    Check(cf_vec_write_csv(v, path.c_str()));
    return;
  }
  const std::size_t n = cf_vec_length(v);
  std::vector<double> re(n), im(n);
  Check(cf_vec_get(v, re.data(), im.data()));
  json entries = json::array();
  for (std::size_t i = 0; i < n; ++i) entries.push_back({re[i], im[i]});
  WriteText(path, entries.dump() + "\n");
}

json ReportJson(const cf_report *r) {
  char *raw = nullptr;
  Check(cf_report_to_json(r, &raw));
  return TakeJson(raw);
}

const char *VerdictText(cf_verdict v) {
  switch (v) {
    case CF_VERDICT_FRAME:
      return "Frame";
    case CF_VERDICT_BESSEL_ONLY:
      return "BesselOnly";
    default:
      return "Invalid";
  }
}

// Shared state for one invocation.
struct Run {
  std::string command;
  std::string report_path;
  json tolerances = json::object();
  json result = json::object();
  std::vector<std::string> failures;

  int Finish() const {
    json out = {{"tool", "contframe"},
                {"version", cf_version()},
                {"command", command},
                {"tolerances", tolerances},
                {"result", result},
                {"status", failures.empty() ? "ok" : "verification_failed"},
                {"failures", failures}};
    Emit(out);
    return failures.empty() ? kExitOk : kExitVerification;
  }

  int Error(cf_status s, const std::string &msg) const {
    json out = {{"tool", "contframe"},
                {"version", cf_version()},
                {"command", command},
                {"tolerances", tolerances},
                {"status", "error"},
                {"error", {{"code", cf_status_string(s)}, {"message", msg}}}};
    std::cerr << "contframe " << command << ": " << msg << "\n";
    Emit(out);
    return s == CF_ERR_SOLVER_DIVERGED || s == CF_ERR_NOT_A_FRAME ? kExitVerification : kExitInput;
  }

  void Emit(const json &out) const {
    const std::string text = out.dump(2) + "\n";
    std::cout << text;
    if (!report_path.empty()) WriteText(report_path, text);
  }
};

// ---- construction flags shared by `construct` and `verify` ----

struct ConstructFlags {
  std::string spec_path;
  std::string kind;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> cells;
  std::vector<double> weights;
  std::string cover;
  std::optional<double> ratio;
  std::optional<int> refine;
  std::optional<double> bessel_bound;
  std::string out_path;
};

void AddConstructFlags(CLI::App *cmd, ConstructFlags &f) {
  cmd->add_option("--spec", f.spec_path, "Construction spec JSON file");
  cmd->add_option("--construct", f.kind, "parseval|step|bessel_only|ex28|ex29");
  cmd->add_option("--dim", f.dim, "Ambient dimension");
  cmd->add_option("--cells", f.cells, "Number of partition cells");
  cmd->add_option("--weights", f.weights, "Cell measures");
  cmd->add_option("--cover", f.cover, "unit|geometric");
  cmd->add_option("--ratio", f.ratio, "Geometric cover ratio");
  cmd->add_option("--refine", f.refine, "Grid refinement level (ex28, ex29)");
  cmd->add_option("--bessel-bound", f.bessel_bound, "Target Bessel bound B1 (ex29)");
  cmd->add_option("--out", f.out_path, "Write the constructed frame as JSON");
}

json SpecFromFlags(const ConstructFlags &f) {
  json spec = f.spec_path.empty() ? json::object() : json::parse(ReadText(f.spec_path));
  if (!f.kind.empty()) spec["construct"] = f.kind;
  if (f.dim) spec["dim"] = *f.dim;
  if (f.cells) spec["cells"] = *f.cells;
  if (!f.weights.empty()) spec["weights"] = f.weights;
  if (!f.cover.empty()) spec["cover"] = f.cover;
  if (f.ratio) spec["ratio"] = *f.ratio;
  if (f.refine) spec["refine"] = *f.refine;
  if (f.bessel_bound) spec["bessel_bound"] = *f.bessel_bound;
  if (!spec.contains("construct"))
    throw StatusError(CF_ERR_INVALID_ARGUMENT, "InvalidArgument: give --construct or --spec");
  return spec;
}

void RunConstruct(Run &run, const ConstructFlags &f, double tol_frame, double tol_parseval) {
  const json spec = SpecFromFlags(f);
  cf_frame *raw = nullptr;
  char *details_raw = nullptr;
  Check(cf_frame_construct(spec.dump().c_str(), &raw, &details_raw));
  FramePtr fr(raw);
  const json details = TakeJson(details_raw);
  if (!f.out_path.empty()) {
    char *text = nullptr;
    Check(cf_frame_to_json(fr.get(), &text));
    StrPtr owned(text);
    WriteText(f.out_path, std::string(owned.get()) + "\n");
  }
  cf_report *rep_raw = nullptr;
  Check(cf_frame_bounds(fr.get(), tol_frame, tol_parseval, &rep_raw));
  ReportPtr rep(rep_raw);

  run.result = {{"spec", spec},
                {"construction", details},
                {"dim", cf_frame_dim(fr.get())},
                {"nodes", cf_frame_node_count(fr.get())},
                {"report", ReportJson(rep.get())}};
  const std::string expected = details["expected_verdict"].get<std::string>();
  const std::string got = VerdictText(cf_report_verdict(rep.get()));
  if (got != expected) run.failures.push_back("verdict " + got + " but the construction promises " + expected);
  if (details["expect_parseval"].get<bool>() && cf_report_parseval(rep.get()) == 0)
    run.failures.push_back("construction promises a Parseval frame but A, B differ from 1");
  const json &extra = details["details"];
  if (extra.contains("bessel_ceiling") &&
      cf_report_upper(rep.get()) > extra["bessel_ceiling"].get<double>() * (1.0 + 1e-12))
    run.failures.push_back("certified B exceeds the Bessel ceiling");
  if (extra.contains("predicted_lower") &&
      cf_report_lower(rep.get()) < extra["predicted_lower"].get<double>() - 0.02)
    run.failures.push_back("certified A below (sqrt(A2) - sqrt(B1))^2");
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"contframe: continuous frames, wavelet and Gabor transforms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cf_version()));

  Run run;
  double tol_frame = 1e-10;
  double tol_parseval = 1e-10;
  double tol_recon = 1e-8;

  auto add_report = [&](CLI::App *cmd) {
    cmd->add_option("--report", run.report_path, "Also write the JSON report to this file");
  };
  auto add_bound_tols = [&](CLI::App *cmd) {
    cmd->add_option("--tol-frame", tol_frame, "Relative tolerance for the lower bound")->capture_default_str();
    cmd->add_option("--tol-parseval", tol_parseval, "Tolerance for |A-1|, |B-1|")->capture_default_str();
  };

  // construct
  ConstructFlags construct_flags;
  CLI::App *construct = app.add_subcommand("construct", "Build a frame from a construction spec");
  AddConstructFlags(construct, construct_flags);
  add_bound_tols(construct);
  add_report(construct);

  // bounds
  std::string frame_path, expect;
  CLI::App *bounds = app.add_subcommand("bounds", "Certify frame bounds of a frame file");
  bounds->add_option("--frame", frame_path, "Frame JSON file")->required();
  bounds->add_option("--expect", expect, "frame|bessel_only|parseval|invalid")
      ->check(CLI::IsMember({"frame", "bessel_only", "parseval", "invalid"}));
  add_bound_tols(bounds);
  add_report(bounds);

  // reconstruct
  std::string signal_path, out_path;
  CLI::App *reconstruct = app.add_subcommand("reconstruct", "Dual-frame reconstruction of a signal");
  reconstruct->add_option("--frame", frame_path, "Frame JSON file")->required();
  reconstruct->add_option("--signal", signal_path, "Signal CSV (or JSON entry array)")->required();
  reconstruct->add_option("--tol-recon", tol_recon, "Reconstruction tolerance")->capture_default_str();
  reconstruct->add_option("--out", out_path, "Write the reconstruction (CSV, or JSON for coordinate spaces)");
  add_report(reconstruct);

  // cwt
  std::string wavelet = "mexican_hat";
  double amin = 0.25, amax = 8.0;
  int voices = 16;
  bool mirror = false;
  std::size_t stride = 1;
  double psi_xmin = -16.0, psi_xmax = 16.0;
  std::size_t psi_count = 4096;
  double tol_energy_cwt = 0.02;
  CLI::App *cwt = app.add_subcommand("cwt", "Continuous wavelet transform");
  cwt->add_option("--wavelet", wavelet, "mexican_hat|morlet|file.csv")->capture_default_str();
  cwt->add_option("--amin", amin, "Smallest scale")->capture_default_str();
  cwt->add_option("--amax", amax, "Largest scale")->capture_default_str();
  cwt->add_option("--voices", voices, "Scales per octave")->capture_default_str();
  cwt->add_flag("--mirror", mirror, "Include the negative-scale branch");
  cwt->add_option("--stride", stride, "Shift stride in signal samples")->capture_default_str();
  cwt->add_option("--psi-xmin", psi_xmin, "Wavelet sampling grid start")->capture_default_str();
  cwt->add_option("--psi-xmax", psi_xmax, "Wavelet sampling grid end")->capture_default_str();
  cwt->add_option("--psi-count", psi_count, "Wavelet sampling grid size")->capture_default_str();
  cwt->add_option("--tol-energy", tol_energy_cwt, "Allowed |energy ratio - 1|")->capture_default_str();
  cwt->add_option("--signal", signal_path, "Signal CSV")->required();
  cwt->add_option("--out", out_path, "Field CSV (a,b,re,im)");
  add_report(cwt);

  // stft
  std::string window = "gauss";
  double ymin = -6.0, ymax = 6.0, dy = 1.0 / 16, gmin = -6.0, gmax = 6.0, dg = 1.0 / 16;
  double window_half_width = 16.0;
  double tol_energy_stft = 1e-3;
  CLI::App *stft = app.add_subcommand("stft", "Short-time Fourier transform");
  stft->add_option("--window", window, "gauss|file.csv")->capture_default_str();
  stft->add_option("--ymin", ymin)->capture_default_str();
  stft->add_option("--ymax", ymax)->capture_default_str();
  stft->add_option("--dy", dy)->capture_default_str();
  stft->add_option("--gmin", gmin)->capture_default_str();
  stft->add_option("--gmax", gmax)->capture_default_str();
  stft->add_option("--dg", dg)->capture_default_str();
  stft->add_option("--window-half-width", window_half_width, "Support of the Gaussian window grid")
      ->capture_default_str();
  stft->add_option("--tol-energy", tol_energy_stft, "Allowed relative energy-identity gap")
      ->capture_default_str();
  stft->add_option("--signal", signal_path, "Signal CSV")->required();
  stft->add_option("--out", out_path, "Field CSV (y,gamma,re,im)");
  add_report(stft);

  // verify
  ConstructFlags verify_flags;
  std::string suite;
  CLI::App *verify = app.add_subcommand("verify", "Verify a construction or run the check suite");
  verify->add_option("--suite", suite, "small|full")->check(CLI::IsMember({"small", "full"}));
  verify->add_option("--tol-recon", tol_recon, "Reconstruction tolerance")->capture_default_str();
  AddConstructFlags(verify, verify_flags);
  add_bound_tols(verify);
  add_report(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App *cmd = app.get_subcommands().front();
  run.command = cmd->get_name();
  try {
    if (cmd == construct || (cmd == verify && suite.empty())) {
      run.tolerances = {{"tol_frame_relative", tol_frame}, {"tol_parseval", tol_parseval}};
      RunConstruct(run, cmd == construct ? construct_flags : verify_flags, tol_frame, tol_parseval);
    } else if (cmd == verify) {
      run.tolerances = {{"tol_recon", tol_recon}};
      char *raw = nullptr;
      int all_pass = 0;
      Check(cf_verify_suite(suite == "full", tol_recon, &raw, &all_pass));
      run.result = TakeJson(raw);
      run.tolerances = run.result["tolerances"];
      if (all_pass == 0)
        for (const auto &c : run.result["checks"])
          if (!c["pass"].get<bool>()) run.failures.push_back("check failed: " + c["name"].get<std::string>());
    } else if (cmd == bounds) {
      run.tolerances = {{"tol_frame_relative", tol_frame}, {"tol_parseval", tol_parseval}};
      cf_frame *fr_raw = nullptr;
      Check(cf_frame_read_json(frame_path.c_str(), &fr_raw));
      FramePtr fr(fr_raw);
      cf_report *rep_raw = nullptr;
      Check(cf_frame_bounds(fr.get(), tol_frame, tol_parseval, &rep_raw));
      ReportPtr rep(rep_raw);
      run.result = {{"dim", cf_frame_dim(fr.get())},
                    {"nodes", cf_frame_node_count(fr.get())},
                    {"report", ReportJson(rep.get())}};
      const cf_verdict v = cf_report_verdict(rep.get());
      if (expect == "frame" && v != CF_VERDICT_FRAME) run.failures.push_back("expected a frame, got " + std::string(VerdictText(v)));
      if (expect == "bessel_only" && v != CF_VERDICT_BESSEL_ONLY)
        run.failures.push_back("expected BesselOnly, got " + std::string(VerdictText(v)));
      if (expect == "invalid" && v != CF_VERDICT_INVALID)
        run.failures.push_back("expected Invalid, got " + std::string(VerdictText(v)));
      if (expect == "parseval" && cf_report_parseval(rep.get()) == 0)
        run.failures.push_back("expected a Parseval frame");
    } else if (cmd == reconstruct) {
      run.tolerances = {{"tol_recon", tol_recon}};
      cf_frame *fr_raw = nullptr;
      Check(cf_frame_read_json(frame_path.c_str(), &fr_raw));
      FramePtr fr(fr_raw);
      VecPtr f = LoadSignal(signal_path);
      cf_vec *rec_raw = nullptr;
      double residual = 0.0;
      std::size_t iterations = 0;
      Check(cf_frame_reconstruct(fr.get(), f.get(), tol_recon, &rec_raw, &residual, &iterations));
      VecPtr rec(rec_raw);
      if (!out_path.empty()) SaveVector(rec.get(), out_path);
      run.result = {{"residual", residual}, {"iterations", iterations}, {"length", cf_vec_length(rec.get())}};
    } else if (cmd == cwt) {
      run.tolerances = {{"tol_energy", tol_energy_cwt}};
      VecPtr f = LoadSignal(signal_path);
      cf_wavelet *w_raw = nullptr;
      if (wavelet == "mexican_hat" || wavelet == "morlet") {
        Check(cf_wavelet_create(wavelet.c_str(), psi_xmin, psi_xmax, psi_count, &w_raw));
      } else {
        VecPtr psi = LoadSignal(wavelet);
        Check(cf_wavelet_from_vec(psi.get(), &w_raw));
      }
      WaveletPtr w(w_raw);
      cf_admissibility adm{};
      Check(cf_wavelet_admissibility(w.get(), &adm));
      cf_field *field_raw = nullptr;
      Check(cf_cwt(f.get(), w.get(), amin, amax, voices, mirror ? 1 : 0, stride, &field_raw));
      FieldPtr field(field_raw);
      double ratio = 0.0, err = 0.0;
      Check(cf_cwt_energy_ratio(field.get(), w.get(), f.get(), &ratio));
      cf_vec *back_raw = nullptr;
      Check(cf_icwt(field.get(), w.get(), &back_raw));
      VecPtr back(back_raw);
      Check(cf_vec_relative_error(back.get(), f.get(), &err));
      if (!out_path.empty()) Check(cf_field_write_csv(field.get(), out_path.c_str()));
      run.result = {{"wavelet", wavelet},
                    {"admissibility",
                     {{"C_psi", adm.c_psi},
                      {"C_positive", adm.c_positive},
                      {"C_negative", adm.c_negative},
                      {"dc_magnitude", adm.dc_magnitude},
                      {"near_divergence", adm.near_divergence != 0}}},
                    {"grid", {{"amin", amin}, {"amax", amax}, {"voices", voices}, {"mirror", mirror}, {"stride", stride}}},
                    {"scales", cf_field_rows(field.get())},
                    {"shifts", cf_field_cols(field.get())},
                    {"energy_ratio", ratio},
                    {"icwt_relative_error", err}};
      if (std::abs(ratio - 1.0) > tol_energy_cwt) run.failures.push_back("energy ratio outside 1 +- tol_energy");
    } else if (cmd == stft) {
      run.tolerances = {{"tol_energy", tol_energy_stft}};
      VecPtr f = LoadSignal(signal_path);
      cf_window *w_raw = nullptr;
      if (window == "gauss") {
        int sampled = 0;
        double step = 0.0;
        Check(cf_vec_grid(f.get(), &sampled, nullptr, nullptr, &step));
        if (sampled == 0) throw StatusError(CF_ERR_WRONG_SPACE_KIND, "WrongSpaceKind: stft needs a sampled signal");
        const auto half = static_cast<std::size_t>(std::ceil(window_half_width / step));
        const double edge = static_cast<double>(half) * step;
        Check(cf_window_gauss(-edge, edge, 2 * half, &w_raw));
      } else {
        VecPtr g = LoadSignal(window);
        Check(cf_window_from_vec(g.get(), &w_raw));
      }
      WindowPtr w(w_raw);
      cf_field *field_raw = nullptr;
      Check(cf_stft(f.get(), w.get(), ymin, ymax, dy, gmin, gmax, dg, &field_raw));
      FieldPtr field(field_raw);
      double energy = 0.0, fnorm = 0.0, err = 0.0;
      Check(cf_field_energy(field.get(), &energy));
      Check(cf_vec_norm(f.get(), &fnorm));
      cf_vec *back_raw = nullptr;
      Check(cf_istft(field.get(), w.get(), &back_raw));
      VecPtr back(back_raw);
      Check(cf_vec_relative_error(back.get(), f.get(), &err));
      if (!out_path.empty()) Check(cf_field_write_csv(field.get(), out_path.c_str()));
      const double expected = cf_window_norm_sq(w.get()) * fnorm * fnorm;
      const double gap = std::abs(energy - expected) / expected;
      run.result = {{"window", window},
                    {"window_norm_sq", cf_window_norm_sq(w.get())},
                    {"grid", {{"ymin", ymin}, {"ymax", ymax}, {"dy", dy}, {"gmin", gmin}, {"gmax", gmax}, {"dg", dg}}},
                    {"frequencies", cf_field_rows(field.get())},
                    {"shifts", cf_field_cols(field.get())},
                    {"energy", energy},
                    {"energy_identity_gap", gap},
                    {"istft_relative_error", err}};
      if (gap > tol_energy_stft) run.failures.push_back("energy identity gap exceeds tol_energy");
    }
    return run.Finish();
  } catch (const StatusError &e) {
    return run.Error(e.status, e.what());
  } catch (const json::exception &e) {
    return run.Error(CF_ERR_PARSE, std::string("Parse: ") + e.what());
  } catch (const std::exception &e) {
    return run.Error(CF_ERR_INTERNAL, e.what());
  }
}
