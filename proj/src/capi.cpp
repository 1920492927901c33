// Copyright 2026 The gbslxe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbslxe/gbslxe.h"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <string>

#include "gbslxe/distributions.hpp"
#include "gbslxe/idealscore.hpp"
#include "gbslxe/io.hpp"
#include "gbslxe/lxe.hpp"
#include "gbslxe/models.hpp"
#include "gbslxe/verify.hpp"

struct gbslxe_unitary {
    gbslxe::UnitaryMatrix value;
};
struct gbslxe_model {
    gbslxe::GbsModel value;
};
struct gbslxe_samples {
    gbslxe::SampleSet value;
};
struct gbslxe_reports {
    std::vector<gbslxe::ScoreReport> value;
};
struct gbslxe_coefficients {
    gbslxe::CoefficientTable value;
};

namespace {

thread_local std::string last_error;

gbslxe_status to_status(gbslxe::ErrorCode code) {
    switch (code) {
        case gbslxe::ErrorCode::InvalidArgument:
            return GBSLXE_ERR_INVALID_ARGUMENT;
        case gbslxe::ErrorCode::Parse:
            return GBSLXE_ERR_PARSE;
        case gbslxe::ErrorCode::Io:
            return GBSLXE_ERR_IO;
        case gbslxe::ErrorCode::ResourceGuard:
            return GBSLXE_ERR_RESOURCE_GUARD;
        case gbslxe::ErrorCode::Numeric:
            return GBSLXE_ERR_NUMERIC;
    }
    return GBSLXE_ERR_INTERNAL;
}

// Every entry point funnels through here so no exception crosses the C boundary.
template <typename Fn>
gbslxe_status guard(Fn &&fn) {
    try {
        last_error.clear();
        fn();
        return GBSLXE_OK;
    } catch (const gbslxe::Error &e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return GBSLXE_ERR_RESOURCE_GUARD;
    } catch (const std::exception &e) {
        last_error = e.what();
        return GBSLXE_ERR_INTERNAL;
    }
}

template <typename T>
void require(const T *p, const char *what) {
    if (p == nullptr) {
        gbslxe::fail(std::string(what) + " must not be NULL");
    }
}

void copy_out(const std::string &s, char *buf, std::size_t len) {
    if (buf == nullptr) {
        return;
    }
    if (s.size() + 1 > len) {
        gbslxe::fail("output buffer too small (need " + std::to_string(s.size() + 1) + " bytes)");
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
}

gbslxe_score to_c(const gbslxe::ScoreReport &r) {
    gbslxe_score s{};
    s.sector = r.sector;
    s.value = r.value;
    s.std_error = r.std_error;
    s.method = static_cast<gbslxe_method>(static_cast<int>(r.method));
    std::snprintf(s.digest, sizeof s.digest, "%s", r.digest.c_str());
    return s;
}

std::string composition_text(const gbslxe::ConstrainedComposition &k) {
    std::string s = "(";
    for (std::size_t i = 0; i < k.parts().size(); ++i) {
        s += (i ? "," : "") + std::to_string(k.parts()[i]);
    }
    return s + ")";
}

}  // namespace

extern "C" {

const char *gbslxe_version(void) { return gbslxe::kVersion; }

const char *gbslxe_last_error(void) { return last_error.c_str(); }

uint64_t gbslxe_default_guard(void) { return gbslxe::kDefaultPatternGuard; }

gbslxe_status gbslxe_unitary_haar(int m, uint64_t seed, gbslxe_unitary **out) {
    return guard([&] {
        require(out, "out");
        *out = new gbslxe_unitary{gbslxe::haar_unitary(m, seed)};
    });
}

gbslxe_status gbslxe_unitary_identity(int m, gbslxe_unitary **out) {
    return guard([&] {
        require(out, "out");
        *out = new gbslxe_unitary{gbslxe::UnitaryMatrix::identity(m)};
    });
}

gbslxe_status gbslxe_unitary_read(const char *path, int project_nearest, gbslxe_unitary **out) {
    return guard([&] {
        require(path, "path");
        require(out, "out");
        std::string text = gbslxe::read_text_file(path);
        if (project_nearest) {
            *out = new gbslxe_unitary{gbslxe::nearest_unitary(gbslxe::matrix_from_json(text))};
        } else {
            *out = new gbslxe_unitary{gbslxe::unitary_from_json(text)};
        }
    });
}

gbslxe_status gbslxe_unitary_write(const gbslxe_unitary *u, const char *path) {
    return guard([&] {
        require(u, "unitary");
        require(path, "path");
        gbslxe::write_text_file_atomic(path, gbslxe::unitary_to_json(u->value));
    });
}

int gbslxe_unitary_modes(const gbslxe_unitary *u) { return u ? u->value.modes() : 0; }

gbslxe_status gbslxe_unitary_entry(const gbslxe_unitary *u, int row, int col, double *re, double *im) {
    return guard([&] {
        require(u, "unitary");
        if (row < 0 || col < 0 || row >= u->value.modes() || col >= u->value.modes()) {
            gbslxe::fail("entry index out of range");
        }
        auto z = u->value.entries()(row, col);
        if (re) *re = z.real();
        if (im) *im = z.imag();
    });
}

void gbslxe_unitary_free(gbslxe_unitary *u) { delete u; }

gbslxe_status gbslxe_model_squeezed(double r, int squeezed_modes, const gbslxe_unitary *u, gbslxe_model **out) {
    return guard([&] {
        require(u, "unitary");
        require(out, "out");
        *out = new gbslxe_model{gbslxe::build_squeezed_model(r, squeezed_modes, u->value)};
    });
}

gbslxe_status gbslxe_model_thermal(double nbar, int m, gbslxe_model **out) {
    return guard([&] {
        require(out, "out");
        *out = new gbslxe_model{gbslxe::build_thermal_model(nbar, m)};
    });
}

gbslxe_status gbslxe_model_general(const double *sigma_x, const double *sigma_p, const gbslxe_unitary *u,
                                   gbslxe_model **out) {
    return guard([&] {
        require(sigma_x, "sigma_x");
        require(sigma_p, "sigma_p");
        require(u, "unitary");
        require(out, "out");
        const auto m = static_cast<std::size_t>(u->value.modes());
        std::vector<double> sx(sigma_x, sigma_x + m);
        std::vector<double> sp(sigma_p, sigma_p + m);
        *out = new gbslxe_model{gbslxe::build_general_model(sx, sp, u->value)};
    });
}

int gbslxe_model_modes(const gbslxe_model *model) { return model ? model->value.modes : 0; }

gbslxe_status gbslxe_model_validity(const gbslxe_model *model, double *g_norm, int *valid) {
    return guard([&] {
        require(model, "model");
        auto rep = gbslxe::validity_check(model->value);
        if (g_norm) *g_norm = rep.g_norm;
        if (valid) *valid = rep.valid ? 1 : 0;
    });
}

gbslxe_status gbslxe_model_probability(const gbslxe_model *model, const int *pattern, int length, double *out) {
    return guard([&] {
        require(model, "model");
        require(pattern, "pattern");
        require(out, "out");
        if (length < 0) {
            gbslxe::fail("negative pattern length");
        }
        *out = gbslxe::probability(model->value, gbslxe::DetectionPattern(pattern, pattern + length));
    });
}

gbslxe_status gbslxe_model_sector_probability(const gbslxe_model *model, int photons, double *out) {
    return guard([&] {
        require(model, "model");
        require(out, "out");
        *out = gbslxe::total_photon_probability(model->value, photons);
    });
}

void gbslxe_model_free(gbslxe_model *model) { delete model; }

gbslxe_status gbslxe_samples_bruteforce(const gbslxe_model *model, int photons, size_t count, uint64_t seed,
                                        uint64_t guard_limit, gbslxe_samples **out) {
    return guard([&] {
        require(model, "model");
        require(out, "out");
        *out = new gbslxe_samples{gbslxe::sample_bruteforce(model->value, photons, count, seed, guard_limit)};
    });
}

gbslxe_status gbslxe_samples_append(gbslxe_samples *dst, const gbslxe_samples *src) {
    return guard([&] {
        require(dst, "dst");
        require(src, "src");
        if (dst->value.modes != src->value.modes) {
            gbslxe::fail("sample sets have different mode counts");
        }
        dst->value.samples.insert(dst->value.samples.end(), src->value.samples.begin(), src->value.samples.end());
    });
}

gbslxe_status gbslxe_samples_set_meta(gbslxe_samples *s, const char *key, const char *value) {
    return guard([&] {
        require(s, "samples");
        require(key, "key");
        require(value, "value");
        s->value.meta[key] = value;
    });
}

gbslxe_status gbslxe_samples_set_unitary_ref(gbslxe_samples *s, const char *ref) {
    return guard([&] {
        require(s, "samples");
        if (ref) {
            s->value.unitary_ref = std::string(ref);
        } else {
            s->value.unitary_ref.reset();
        }
    });
}

gbslxe_status gbslxe_samples_read(const char *path, gbslxe_samples **out) {
    return guard([&] {
        require(path, "path");
        require(out, "out");
        auto set = gbslxe::samples_from_json(gbslxe::read_text_file(path));
        *out = new gbslxe_samples{std::move(set)};
    });
}

gbslxe_status gbslxe_samples_write(const gbslxe_samples *s, const char *path) {
    return guard([&] {
        require(s, "samples");
        require(path, "path");
        gbslxe::write_text_file_atomic(path, gbslxe::samples_to_json(s->value));
    });
}

size_t gbslxe_samples_count(const gbslxe_samples *s) { return s ? s->value.samples.size() : 0; }

int gbslxe_samples_modes(const gbslxe_samples *s) { return s ? s->value.modes : 0; }

size_t gbslxe_samples_sector_count(const gbslxe_samples *s, int photons) {
    if (!s) {
        return 0;
    }
    std::size_t count = 0;
    for (const auto &p : s->value.samples) {
        int total = 0;
        for (int c : p) total += c;
        count += total == photons ? 1 : 0;
    }
    return count;
}

void gbslxe_samples_free(gbslxe_samples *s) { delete s; }

gbslxe_status gbslxe_lxe_bruteforce(const gbslxe_model *a, const gbslxe_model *b, int photons, uint64_t guard_limit,
                                    unsigned threads, double *out) {
    return guard([&] {
        require(a, "model A");
        require(b, "model B");
        require(out, "out");
        *out = gbslxe::lxe_bruteforce(a->value, b->value, photons, guard_limit, threads);
    });
}

gbslxe_status gbslxe_reports_create(gbslxe_reports **out) {
    return guard([&] {
        require(out, "out");
        *out = new gbslxe_reports{};
    });
}

size_t gbslxe_reports_count(const gbslxe_reports *r) { return r ? r->value.size() : 0; }

gbslxe_status gbslxe_reports_get(const gbslxe_reports *r, size_t index, gbslxe_score *out) {
    return guard([&] {
        require(r, "reports");
        require(out, "out");
        if (index >= r->value.size()) {
            gbslxe::fail("report index out of range");
        }
        *out = to_c(r->value[index]);
    });
}

gbslxe_status gbslxe_reports_set_meta(gbslxe_reports *r, size_t index, const char *key, const char *value) {
    return guard([&] {
        require(r, "reports");
        require(key, "key");
        require(value, "value");
        if (index >= r->value.size()) {
            gbslxe::fail("report index out of range");
        }
        r->value[index].meta[key] = value;
    });
}

gbslxe_status gbslxe_reports_add_closed_form(gbslxe_reports *r, int sector, double value, const char *label) {
    return guard([&] {
        require(r, "reports");
        gbslxe::ScoreReport rep;
        rep.sector = sector;
        rep.value = value;
        rep.method = gbslxe::ScoreMethod::ClosedForm;
        std::string l = label ? label : "";
        rep.meta["label"] = l;
        rep.digest = gbslxe::fnv1a_hex("closed_form;" + l + ";sector=" + std::to_string(sector));
        r->value.push_back(std::move(rep));
    });
}

gbslxe_status gbslxe_reports_write(const gbslxe_reports *r, const char *path) {
    return guard([&] {
        require(r, "reports");
        require(path, "path");
        gbslxe::write_text_file_atomic(path, gbslxe::reports_to_json(r->value));
    });
}

void gbslxe_reports_free(gbslxe_reports *r) { delete r; }

gbslxe_status gbslxe_score_from_samples(const gbslxe_samples *samples, const gbslxe_unitary *u, double r,
                                        int squeezed_modes, int photons, unsigned threads, gbslxe_reports *into) {
    return guard([&] {
        require(samples, "samples");
        require(u, "unitary");
        require(into, "reports");
        into->value.push_back(
            gbslxe::score_from_samples(samples->value, u->value, r, squeezed_modes, photons, threads));
    });
}

gbslxe_status gbslxe_mc_haar_score(double r, int squeezed_modes, int m, int photons, size_t trials, uint64_t seed,
                                   uint64_t guard_limit, unsigned threads, gbslxe_reports *into) {
    return guard([&] {
        require(into, "reports");
        into->value.push_back(
            gbslxe::mc_haar_score(r, squeezed_modes, m, photons, trials, seed, guard_limit, threads));
    });
}

gbslxe_status gbslxe_coefficients_get(int half_size, const char *cache_path, unsigned threads, int max_half_size,
                                      gbslxe_progress_fn progress, void *user_data, gbslxe_coefficients **out) {
    return guard([&] {
        require(out, "out");
        std::vector<gbslxe::CoefficientTable> cached;
        if (cache_path != nullptr && std::filesystem::exists(cache_path)) {
            cached = gbslxe::coefficients_from_json(gbslxe::read_text_file(cache_path));
            for (const auto &t : cached) {
                if (t.half_size == half_size) {
                    *out = new gbslxe_coefficients{t};
                    return;
                }
            }
        }
        gbslxe::ProgressFn fn;
        if (progress != nullptr) {
            fn = [progress, user_data](std::uint64_t done, std::uint64_t total) { progress(user_data, done, total); };
        }
        auto table = gbslxe::c_coefficients(half_size, threads, fn, max_half_size);
        if (cache_path != nullptr) {
            cached.push_back(table);
            gbslxe::write_text_file_atomic(cache_path, gbslxe::coefficients_to_json(cached));
        }
        *out = new gbslxe_coefficients{std::move(table)};
    });
}

int gbslxe_coefficients_half_size(const gbslxe_coefficients *c) { return c ? c->value.half_size : 0; }

gbslxe_status gbslxe_coefficients_c(const gbslxe_coefficients *c, int ell, char *buf, size_t len) {
    return guard([&] {
        require(c, "coefficients");
        if (ell < 1 || ell >= static_cast<int>(c->value.c.size())) {
            gbslxe::fail("ell must lie in 1..2N");
        }
        copy_out(gbslxe::to_string(c->value.c[static_cast<std::size_t>(ell)]), buf, len);
    });
}

size_t gbslxe_coefficients_row_count(const gbslxe_coefficients *c) { return c ? c->value.rows.size() : 0; }

gbslxe_status gbslxe_coefficients_row(const gbslxe_coefficients *c, size_t index, char *buf, size_t len) {
    return guard([&] {
        require(c, "coefficients");
        if (index >= c->value.rows.size()) {
            gbslxe::fail("row index out of range");
        }
        const auto &row = c->value.rows[index];
        copy_out(composition_text(row.k) + " " + composition_text(row.l) + " " + gbslxe::to_string(row.v) + " " +
                     row.hash_b.str() + " " + gbslxe::to_string(row.product),
                 buf, len);
    });
}

gbslxe_status gbslxe_ideal_score(const gbslxe_coefficients *c, int squeezed_modes, double *value, char *exact,
                                 size_t exact_len) {
    return guard([&] {
        require(c, "coefficients");
        auto q = gbslxe::ideal_score_exact(c->value, squeezed_modes);
        if (value) *value = gbslxe::to_double(q);
        copy_out(gbslxe::to_string(q), exact, exact_len);
    });
}

gbslxe_status gbslxe_ideal_score_novacuum(const gbslxe_coefficients *c, double *value, char *exact,
                                          size_t exact_len, int *matches_closed_form) {
    return guard([&] {
        require(c, "coefficients");
        auto nv = gbslxe::ideal_score_novacuum(c->value);
        if (value) *value = gbslxe::to_double(nv.value);
        if (matches_closed_form) *matches_closed_form = nv.equal ? 1 : 0;
        copy_out(gbslxe::to_string(nv.value), exact, exact_len);
    });
}

void gbslxe_coefficients_free(gbslxe_coefficients *c) { delete c; }

gbslxe_status gbslxe_verify(int deep, unsigned threads, uint64_t seed, gbslxe_line_fn on_line, void *user_data,
                            int *passed, int *failed) {
    return guard([&] {
        gbslxe::VerifyOptions options;
        options.deep = deep != 0;
        options.threads = threads;
        options.seed = seed;
        if (on_line != nullptr) {
            options.on_line = [on_line, user_data](const std::string &line) { on_line(user_data, line.c_str()); };
        }
        auto result = gbslxe::run_verify(options);
        if (passed) *passed = result.passed;
        if (failed) *failed = result.failed;
    });
}

}  // extern "C"
