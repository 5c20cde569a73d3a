// src/capi.cc

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

#include "contframe/contframe.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contframe/error.hpp"
#include "contframe/frame.hpp"
#include "contframe/gabor.hpp"
#include "contframe/io.hpp"
#include "contframe/verify.hpp"
#include "contframe/wavelet.hpp"

using contframe::Complex;

struct cf_vec {
  contframe::Vec v;
};
struct cf_frame {
  contframe::DiscretizedFrame fr;
};
struct cf_report {
  contframe::FrameReport r;
};
struct cf_field {
  contframe::CoefficientField f;
};
struct cf_wavelet {
  contframe::WaveletSpec w;
};
struct cf_window {
  contframe::WindowSpec w;
};

namespace {

thread_local std::string g_last_error;

cf_status Record(cf_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
cf_status Guard(Body &&body) {
  try {
    g_last_error.clear();
    body();
    return CF_OK;
  } catch (const contframe::Error &e) {
    return Record(static_cast<cf_status>(e.code()), e.what());
  } catch (const nlohmann::json::parse_error &e) {
    return Record(CF_ERR_PARSE, std::string("Parse: ") + e.what());
  } catch (const nlohmann::json::exception &e) {
    return Record(CF_ERR_PARSE, std::string("Parse: ") + e.what());
  } catch (const std::bad_alloc &) {
    return Record(CF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return Record(CF_ERR_INTERNAL, e.what());
  } catch (...) {
    return Record(CF_ERR_INTERNAL, "unknown error");
  }
}

#define CF_REQUIRE(ptr)                                                  \
  do {                                                                   \
    if ((ptr) == nullptr) return Record(CF_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

char *CopyString(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<Complex> Entries(size_t n, const double *re, const double *im) {
  std::vector<Complex> e(n);
  for (size_t i = 0; i < n; ++i) e[i] = Complex(re[i], im != nullptr ? im[i] : 0.0);
  return e;
}

cf_verdict ToC(contframe::Verdict v) {
  switch (v) {
    case contframe::Verdict::kFrame:
      return CF_VERDICT_FRAME;
    case contframe::Verdict::kBesselOnly:
      return CF_VERDICT_BESSEL_ONLY;
    default:
      return CF_VERDICT_INVALID;
  }
}

}  // namespace

extern "C" {

const char *cf_version(void) { return contframe::kVersion; }

const char *cf_status_string(cf_status status) {
  switch (status) {
    case CF_OK:
      return "Ok";
    case CF_ERR_NULL_ARGUMENT:
      return "NullArgument";
    case CF_ERR_INTERNAL:
      return "Internal";
    default:
      if (status >= 1 && status <= 18)
        return contframe::ErrcName(static_cast<contframe::Errc>(status));
      return "Unknown";
  }
}

const char *cf_last_error_message(void) { return g_last_error.c_str(); }

void cf_string_free(char *s) { std::free(s); }

// ---- Vectors ----

cf_status cf_vec_create_coordinate(size_t dim, const double *re, const double *im, cf_vec **out) {
  CF_REQUIRE(re);
  CF_REQUIRE(out);
  return Guard([&] {
    *out = new cf_vec{contframe::Vec(contframe::SpaceDescriptor::Coordinate(dim), Entries(dim, re, im))};
  });
}

cf_status cf_vec_create_sampled(double xmin, double xmax, size_t count, const double *re,
                                const double *im, cf_vec **out) {
  CF_REQUIRE(re);
  CF_REQUIRE(out);
  return Guard([&] {
    *out = new cf_vec{contframe::Vec(contframe::SpaceDescriptor::Sampled(xmin, xmax, count),
                                     Entries(count, re, im))};
  });
}

cf_status cf_vec_from_json(const char *entries_json, cf_vec **out) {
  CF_REQUIRE(entries_json);
  CF_REQUIRE(out);
  return Guard([&] {
    const auto j = nlohmann::json::parse(entries_json);
    if (!j.is_array()) contframe::Fail(contframe::Errc::kParse, "vector JSON must be an array");
    *out = new cf_vec{contframe::VecFromJson(j, contframe::SpaceDescriptor::Coordinate(j.size()))};
  });
}

cf_status cf_vec_read_csv(const char *path, cf_vec **out) {
  CF_REQUIRE(path);
  CF_REQUIRE(out);
  return Guard([&] { *out = new cf_vec{contframe::ReadSignalCsv(path)}; });
}

cf_status cf_vec_write_csv(const cf_vec *v, const char *path) {
  CF_REQUIRE(v);
  CF_REQUIRE(path);
  return Guard([&] { contframe::WriteSignalCsv(v->v, path); });
}

size_t cf_vec_length(const cf_vec *v) { return v != nullptr ? v->v.size() : 0; }

cf_status cf_vec_grid(const cf_vec *v, int *sampled, double *xmin, double *xmax, double *step) {
  CF_REQUIRE(v);
  const contframe::SpaceDescriptor &s = v->v.space();
  if (sampled != nullptr) *sampled = s.is_sampled() ? 1 : 0;
  if (!s.is_sampled()) return CF_OK;
  if (xmin != nullptr) *xmin = s.xmin();
  if (xmax != nullptr) *xmax = s.xmax();
  if (step != nullptr) *step = s.step();
  return CF_OK;
}

cf_status cf_vec_get(const cf_vec *v, double *re, double *im) {
  CF_REQUIRE(v);
  for (size_t i = 0; i < v->v.size(); ++i) {
    if (re != nullptr) re[i] = v->v[i].real();
    if (im != nullptr) im[i] = v->v[i].imag();
  }
  return CF_OK;
}

cf_status cf_vec_norm(const cf_vec *v, double *out) {
  CF_REQUIRE(v);
  CF_REQUIRE(out);
  return Guard([&] { *out = contframe::Norm(v->v); });
}

cf_status cf_vec_relative_error(const cf_vec *approx, const cf_vec *ref, double *out) {
  CF_REQUIRE(approx);
  CF_REQUIRE(ref);
  CF_REQUIRE(out);
  return Guard([&] {
    const double n = contframe::Norm(ref->v);
    if (n == 0.0) contframe::Fail(contframe::Errc::kZeroVector, "reference vector is zero");
    *out = contframe::Norm(approx->v - ref->v) / n;
  });
}

void cf_vec_destroy(cf_vec *v) { delete v; }

// ---- Frames ----

cf_status cf_frame_from_json(const char *json_text, cf_frame **out) {
  CF_REQUIRE(json_text);
  CF_REQUIRE(out);
  return Guard([&] { *out = new cf_frame{contframe::FrameFromJson(nlohmann::json::parse(json_text))}; });
}

cf_status cf_frame_read_json(const char *path, cf_frame **out) {
  CF_REQUIRE(path);
  CF_REQUIRE(out);
  return Guard([&] { *out = new cf_frame{contframe::FrameFromJson(contframe::ReadJsonFile(path))}; });
}

cf_status cf_frame_to_json(const cf_frame *fr, char **out_json) {
  CF_REQUIRE(fr);
  CF_REQUIRE(out_json);
  return Guard([&] { *out_json = CopyString(contframe::FrameToJson(fr->fr).dump()); });
}

cf_status cf_frame_construct(const char *spec_json, cf_frame **out, char **details_json) {
  CF_REQUIRE(spec_json);
  CF_REQUIRE(out);
  return Guard([&] {
    contframe::Construction c = contframe::ConstructFromSpec(nlohmann::json::parse(spec_json));
    std::string details;
    if (details_json != nullptr) {
      details = nlohmann::json{{"kind", c.kind},
                               {"expected_verdict", contframe::VerdictName(c.expected_verdict)},
                               {"expect_parseval", c.expect_parseval},
                               {"details", c.details}}
                    .dump();
    }
    auto *handle = new cf_frame{std::move(c.frame)};
    if (details_json != nullptr) {
      try {
        *details_json = CopyString(details);
      } catch (...) {
        delete handle;
        throw;
      }
    }
    *out = handle;
  });
}

size_t cf_frame_node_count(const cf_frame *fr) { return fr != nullptr ? fr->fr.node_count() : 0; }

size_t cf_frame_dim(const cf_frame *fr) { return fr != nullptr ? fr->fr.dim() : 0; }

void cf_frame_destroy(cf_frame *fr) { delete fr; }

cf_status cf_frame_bounds(const cf_frame *fr, double tol_frame_relative, double tol_parseval,
                          cf_report **out) {
  CF_REQUIRE(fr);
  CF_REQUIRE(out);
  return Guard([&] {
    contframe::BoundsOptions opts;
    if (tol_frame_relative > 0.0) opts.tol_frame_relative = tol_frame_relative;
    if (tol_parseval > 0.0) opts.tol_parseval = tol_parseval;
    *out = new cf_report{contframe::FrameBounds(fr->fr, opts)};
  });
}

double cf_report_lower(const cf_report *r) { return r != nullptr ? r->r.lower : 0.0; }
double cf_report_upper(const cf_report *r) { return r != nullptr ? r->r.upper : 0.0; }
int cf_report_parseval(const cf_report *r) { return r != nullptr && r->r.parseval ? 1 : 0; }
cf_verdict cf_report_verdict(const cf_report *r) {
  return r != nullptr ? ToC(r->r.verdict) : CF_VERDICT_INVALID;
}
int cf_report_rank(const cf_report *r) { return r != nullptr && r->r.rank ? *r->r.rank : -1; }

cf_status cf_report_to_json(const cf_report *r, char **out_json) {
  CF_REQUIRE(r);
  CF_REQUIRE(out_json);
  return Guard([&] { *out_json = CopyString(contframe::ReportToJson(r->r).dump()); });
}

void cf_report_destroy(cf_report *r) { delete r; }

cf_status cf_frame_reconstruct(const cf_frame *fr, const cf_vec *f, double tol_recon,
                               cf_vec **f_hat, double *residual, size_t *iterations) {
  CF_REQUIRE(fr);
  CF_REQUIRE(f);
  CF_REQUIRE(f_hat);
  return Guard([&] {
    contframe::ReconstructOptions opts;
    if (tol_recon > 0.0) opts.tol_recon = tol_recon;
    contframe::Reconstruction rec = contframe::DualReconstruct(fr->fr, f->v, opts);
    if (residual != nullptr) *residual = rec.residual;
    if (iterations != nullptr) *iterations = rec.iterations;
    *f_hat = new cf_vec{std::move(rec.f_hat)};
  });
}

// ---- Wavelets ----

cf_status cf_wavelet_create(const char *name, double xmin, double xmax, size_t count,
                            cf_wavelet **out) {
  CF_REQUIRE(name);
  CF_REQUIRE(out);
  return Guard([&] {
    const auto grid = contframe::SpaceDescriptor::Sampled(xmin, xmax, count);
    const std::string n(name);
    if (n == "mexican_hat") {
      *out = new cf_wavelet{contframe::MexicanHat(grid)};
    } else if (n == "morlet") {
      *out = new cf_wavelet{contframe::Morlet(grid)};
    } else {
      contframe::Fail(contframe::Errc::kInvalidArgument, "unknown wavelet '" + n + "'");
    }
  });
}

cf_status cf_wavelet_from_vec(const cf_vec *psi, cf_wavelet **out) {
  CF_REQUIRE(psi);
  CF_REQUIRE(out);
  return Guard([&] {
    if (contframe::NormSquared(psi->v) == 0.0)
      contframe::Fail(contframe::Errc::kZeroVector, "wavelet must be nonzero");
    *out = new cf_wavelet{contframe::WaveletSpec{psi->v, std::nullopt}};
  });
}

cf_status cf_wavelet_admissibility(cf_wavelet *w, cf_admissibility *out) {
  CF_REQUIRE(w);
  return Guard([&] {
    const contframe::Admissibility a = contframe::ComputeAdmissibility(w->w.psi);
    w->w.c_psi = a.c_psi;
    if (out != nullptr)
      *out = {a.c_psi, a.c_positive, a.c_negative, a.dc_magnitude, a.near_divergence ? 1 : 0};
  });
}

void cf_wavelet_destroy(cf_wavelet *w) { delete w; }

cf_status cf_cwt(const cf_vec *f, const cf_wavelet *w, double amin, double amax, int voices,
                 int mirror, size_t stride, cf_field **out) {
  CF_REQUIRE(f);
  CF_REQUIRE(w);
  CF_REQUIRE(out);
  return Guard([&] {
    const auto grid = contframe::MakeScaleShiftGrid(f->v.space(), amin, amax, voices, mirror != 0,
                                                    stride == 0 ? 1 : stride);
    *out = new cf_field{contframe::Cwt(f->v, w->w, grid)};
  });
}

cf_status cf_icwt(const cf_field *field, const cf_wavelet *w, cf_vec **out) {
  CF_REQUIRE(field);
  CF_REQUIRE(w);
  CF_REQUIRE(out);
  return Guard([&] { *out = new cf_vec{contframe::Icwt(field->f, w->w)}; });
}

cf_status cf_cwt_energy_ratio(const cf_field *field, const cf_wavelet *w, const cf_vec *f,
                              double *out) {
  CF_REQUIRE(field);
  CF_REQUIRE(w);
  CF_REQUIRE(f);
  CF_REQUIRE(out);
  return Guard([&] { *out = contframe::CwtEnergyRatio(field->f, w->w, f->v); });
}

// ---- Gabor ----

cf_status cf_window_gauss(double xmin, double xmax, size_t count, cf_window **out) {
  CF_REQUIRE(out);
  return Guard([&] {
    *out = new cf_window{contframe::GaussianWindow(contframe::SpaceDescriptor::Sampled(xmin, xmax, count))};
  });
}

cf_status cf_window_from_vec(const cf_vec *g, cf_window **out) {
  CF_REQUIRE(g);
  CF_REQUIRE(out);
  return Guard([&] { *out = new cf_window{contframe::MakeWindow(g->v)}; });
}

double cf_window_norm_sq(const cf_window *w) { return w != nullptr ? w->w.norm_sq : 0.0; }

void cf_window_destroy(cf_window *w) { delete w; }

cf_status cf_stft(const cf_vec *f, const cf_window *w, double ymin, double ymax, double dy,
                  double gmin, double gmax, double dg, cf_field **out) {
  CF_REQUIRE(f);
  CF_REQUIRE(w);
  CF_REQUIRE(out);
  return Guard([&] {
    const auto grid = contframe::MakeTimeFreqGrid(ymin, ymax, dy, gmin, gmax, dg);
    *out = new cf_field{contframe::Stft(f->v, w->w, grid)};
  });
}

cf_status cf_istft(const cf_field *field, const cf_window *w, cf_vec **out) {
  CF_REQUIRE(field);
  CF_REQUIRE(w);
  CF_REQUIRE(out);
  return Guard([&] { *out = new cf_vec{contframe::Istft(field->f, w->w)}; });
}

// ---- Fields ----

size_t cf_field_rows(const cf_field *field) { return field != nullptr ? field->f.rows() : 0; }

size_t cf_field_cols(const cf_field *field) { return field != nullptr ? field->f.cols() : 0; }

cf_status cf_field_energy(const cf_field *field, double *out) {
  CF_REQUIRE(field);
  CF_REQUIRE(out);
  return Guard([&] { *out = field->f.Energy(); });
}

cf_status cf_field_write_csv(const cf_field *field, const char *path) {
  CF_REQUIRE(field);
  CF_REQUIRE(path);
  return Guard([&] { contframe::WriteFieldCsv(field->f, path); });
}

void cf_field_destroy(cf_field *field) { delete field; }

// ---- Verification suite ----

cf_status cf_verify_suite(int full, double tol_recon, char **out_json, int *all_pass) {
  CF_REQUIRE(out_json);
  return Guard([&] {
    contframe::SuiteOptions opts;
    opts.scale = full != 0 ? contframe::SuiteOptions::Scale::kFull : contframe::SuiteOptions::Scale::kSmall;
    if (tol_recon > 0.0) opts.tol_recon = tol_recon;
    const nlohmann::json report = contframe::RunVerifySuite(opts);
    *out_json = CopyString(report.dump(2));
    if (all_pass != nullptr) *all_pass = report["all_pass"].get<bool>() ? 1 : 0;
  });
}

}  // extern "C"
