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

// gbslxe: command-line front end over the C API in libgbslxe.
//
// Exit codes: 0 success, 1 verification or numeric failure, 2 usage, parse or
// I/O error, 3 resource-guard refusal.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gbslxe/gbslxe.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

// Carries a status out of the command bodies to main.
struct StatusError {
    gbslxe_status status;
    std::string context;
};

void check(gbslxe_status status, const std::string &context) {
    if (status != GBSLXE_OK) {
        throw StatusError{status, context + ": " + gbslxe_last_error()};
    }
}

[[noreturn]] void usage_error(const std::string &message) { throw StatusError{GBSLXE_ERR_INVALID_ARGUMENT, message}; }

int exit_code_for(gbslxe_status status) {
    switch (status) {
        case GBSLXE_OK:
            return kExitOk;
        case GBSLXE_ERR_INVALID_ARGUMENT:
        case GBSLXE_ERR_PARSE:
        case GBSLXE_ERR_IO:
            return kExitUsage;
        case GBSLXE_ERR_RESOURCE_GUARD:
            return kExitGuard;
        default:
            return kExitFailure;
    }
}

template <typename T, void (*Free)(T *)>
struct Deleter {
    void operator()(T *p) const { Free(p); }
};
using Unitary = std::unique_ptr<gbslxe_unitary, Deleter<gbslxe_unitary, gbslxe_unitary_free>>;
using Model = std::unique_ptr<gbslxe_model, Deleter<gbslxe_model, gbslxe_model_free>>;
using Samples = std::unique_ptr<gbslxe_samples, Deleter<gbslxe_samples, gbslxe_samples_free>>;
using Reports = std::unique_ptr<gbslxe_reports, Deleter<gbslxe_reports, gbslxe_reports_free>>;
using Coefficients = std::unique_ptr<gbslxe_coefficients, Deleter<gbslxe_coefficients, gbslxe_coefficients_free>>;

struct RunConfig {
    std::vector<int> modes;
    std::string squeezed_modes;  // integer or "M"
    double squeezing = 0.5;
    double nbar = 1.0;
    std::vector<int> sectors;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::uint64_t guard = gbslxe_default_guard();
    bool deep = false;
    unsigned threads = 0;
    std::string in;
    std::string unitary;
    std::string out;
    std::string cache;
    std::string model = "squeezed";
    std::size_t count = 1000;
    bool nearest = false;
};

int single_m(const RunConfig &cfg, bool required) {
    if (cfg.modes.empty()) {
        if (required) {
            usage_error("--m is required");
        }
        return 0;
    }
    if (cfg.modes.size() != 1) {
        usage_error("--m takes a single value for this command");
    }
    if (cfg.modes[0] < 1) {
        usage_error("--m must be positive");
    }
    return cfg.modes[0];
}

// R is an integer or the literal "M" meaning R = M.
int resolve_r(const RunConfig &cfg, int m) {
    if (cfg.squeezed_modes.empty()) {
        usage_error("--r is required");
    }
    if (cfg.squeezed_modes == "M" || cfg.squeezed_modes == "m") {
        if (m < 1) {
            usage_error("--r M needs --m");
        }
        return m;
    }
    try {
        std::size_t pos = 0;
        int r = std::stoi(cfg.squeezed_modes, &pos);
        if (pos != cfg.squeezed_modes.size() || r < 1) {
            throw std::invalid_argument("bad");
        }
        return r;
    } catch (const std::exception &) {
        usage_error("--r must be a positive integer or M");
    }
}

void require_sectors(const RunConfig &cfg) {
    if (cfg.sectors.empty()) {
        usage_error("--sectors is required");
    }
    for (int n : cfg.sectors) {
        if (n < 0) {
            usage_error("--sectors must be non-negative photon numbers");
        }
    }
}

void print_progress(void *, std::uint64_t done, std::uint64_t total) {
    std::fprintf(stderr, "\r  enumerating sigma: %llu / %llu", static_cast<unsigned long long>(done),
                 static_cast<unsigned long long>(total));
    if (done == total) {
        std::fputc('\n', stderr);
    }
}

Coefficients coefficients_for(const RunConfig &cfg, int half) {
    gbslxe_coefficients *raw = nullptr;
    int max_half = cfg.deep ? 4 : 3;
    const char *cache = cfg.cache.empty() ? nullptr : cfg.cache.c_str();
    check(gbslxe_coefficients_get(half, cache, cfg.threads, max_half, cfg.deep ? print_progress : nullptr, nullptr,
                                  &raw),
          "coefficients for " + std::to_string(2 * half) + " photons");
    return Coefficients(raw);
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

int cmd_reference_curve(const RunConfig &cfg) {
    require_sectors(cfg);
    int m = single_m(cfg, false);
    bool have_r = !cfg.squeezed_modes.empty();
    int r = have_r ? resolve_r(cfg, m) : 0;
    Reports reports;
    {
        gbslxe_reports *raw = nullptr;
        check(gbslxe_reports_create(&raw), "reports");
        reports.reset(raw);
    }
    std::printf("%-8s %-22s %-22s %-8s\n", "sector", have_r ? ("ideal(R=" + std::to_string(r) + ")").c_str() : "ideal",
                "no-vacuum", "uniform");
    for (int n : cfg.sectors) {
        if (n % 2 != 0 || n == 0) {
            std::printf("%-8d %-22s %-22s %-8s\n", n, "-", "-", "1");
            std::printf("         note: sector %d has zero probability under the squeezed model\n", n);
            check(gbslxe_reports_add_closed_form(reports.get(), n, 1.0, "uniform"), "report");
            continue;
        }
        Coefficients c = coefficients_for(cfg, n / 2);
        char exact[256];
        char nv_exact[256];
        double nv = 0;
        int match = 0;
        check(gbslxe_ideal_score_novacuum(c.get(), &nv, nv_exact, sizeof nv_exact, &match), "no-vacuum score");
        std::string ideal_text = "-";
        if (have_r) {
            double v = 0;
            check(gbslxe_ideal_score(c.get(), r, &v, exact, sizeof exact), "ideal score");
            ideal_text = fmt(v) + " (" + exact + ")";
            check(gbslxe_reports_add_closed_form(reports.get(), n, v, "ideal"), "report");
            check(gbslxe_reports_set_meta(reports.get(), gbslxe_reports_count(reports.get()) - 1, "exact", exact),
                  "report");
            check(gbslxe_reports_set_meta(reports.get(), gbslxe_reports_count(reports.get()) - 1, "squeezed_modes",
                                          std::to_string(r).c_str()),
                  "report");
        }
        check(gbslxe_reports_add_closed_form(reports.get(), n, nv, "no_vacuum"), "report");
        check(gbslxe_reports_set_meta(reports.get(), gbslxe_reports_count(reports.get()) - 1, "exact", nv_exact),
              "report");
        check(gbslxe_reports_add_closed_form(reports.get(), n, 1.0, "uniform"), "report");
        std::string nv_text = fmt(nv) + " (" + nv_exact + ")";
        std::printf("%-8d %-22s %-22s %-8s\n", n, ideal_text.c_str(), nv_text.c_str(), "1");
    }
    if (!cfg.out.empty()) {
        check(gbslxe_reports_write(reports.get(), cfg.out.c_str()), "writing " + cfg.out);
    }
    return kExitOk;
}

int cmd_score_samples(const RunConfig &cfg) {
    require_sectors(cfg);
    if (cfg.in.empty() || cfg.unitary.empty()) {
        usage_error("score-samples needs --in and --unitary");
    }
    if (!(cfg.squeezing > 0)) {
        usage_error("--squeezing must be positive");
    }
    gbslxe_samples *raw_samples = nullptr;
    check(gbslxe_samples_read(cfg.in.c_str(), &raw_samples), "reading " + cfg.in);
    Samples samples(raw_samples);
    gbslxe_unitary *raw_u = nullptr;
    check(gbslxe_unitary_read(cfg.unitary.c_str(), cfg.nearest ? 1 : 0, &raw_u), "reading " + cfg.unitary);
    Unitary u(raw_u);
    const int m = gbslxe_unitary_modes(u.get());
    if (gbslxe_samples_modes(samples.get()) != m) {
        usage_error("sample file has M = " + std::to_string(gbslxe_samples_modes(samples.get())) +
                    " but the unitary is " + std::to_string(m) + " x " + std::to_string(m));
    }
    const int r = resolve_r(cfg, m);
    if (r > m) {
        usage_error("--r exceeds M");
    }
    for (int n : cfg.sectors) {
        if (n % 2 != 0) {
            usage_error("sector " + std::to_string(n) + " is odd; the squeezed reference has no probability there");
        }
        if (gbslxe_samples_sector_count(samples.get(), n) == 0) {
            usage_error("no samples in sector " + std::to_string(n));
        }
    }
    Reports reports;
    {
        gbslxe_reports *raw = nullptr;
        check(gbslxe_reports_create(&raw), "reports");
        reports.reset(raw);
    }
    std::printf("%-8s %-18s %-18s %-10s\n", "sector", "score", "std_error", "samples");
    for (int n : cfg.sectors) {
        check(gbslxe_score_from_samples(samples.get(), u.get(), cfg.squeezing, r, n, cfg.threads, reports.get()),
              "scoring sector " + std::to_string(n));
        std::size_t idx = gbslxe_reports_count(reports.get()) - 1;
        check(gbslxe_reports_set_meta(reports.get(), idx, "unitary_source",
                                      cfg.nearest ? "nearest_unitary" : "as_given"),
              "report");
        check(gbslxe_reports_set_meta(reports.get(), idx, "unitary_file", cfg.unitary.c_str()), "report");
        gbslxe_score s{};
        check(gbslxe_reports_get(reports.get(), idx, &s), "report");
        std::printf("%-8d %-18s %-18s %-10zu\n", n, fmt(s.value).c_str(), fmt(s.std_error).c_str(),
                    gbslxe_samples_sector_count(samples.get(), n));
    }
    if (!cfg.out.empty()) {
        check(gbslxe_reports_write(reports.get(), cfg.out.c_str()), "writing " + cfg.out);
    }
    return kExitOk;
}

void print_line(void *, const char *line) {
    std::printf("%s\n", line);
    std::fflush(stdout);
}

int cmd_verify(const RunConfig &cfg) {
    int passed = 0;
    int failed = 0;
    check(gbslxe_verify(cfg.deep ? 1 : 0, cfg.threads, cfg.seed, print_line, nullptr, &passed, &failed), "verify");
    std::printf("%d passed, %d failed\n", passed, failed);
    return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_mc_validate(const RunConfig &cfg) {
    require_sectors(cfg);
    if (cfg.modes.empty()) {
        usage_error("--m is required (one or more mode counts)");
    }
    if (cfg.trials < 2) {
        usage_error("--trials must be at least 2");
    }
    if (!(cfg.squeezing > 0)) {
        usage_error("--squeezing must be positive");
    }
    const bool r_is_m = cfg.squeezed_modes == "M" || cfg.squeezed_modes == "m";
    for (int m : cfg.modes) {
        if (m < 1) {
            usage_error("--m values must be positive");
        }
        if (!r_is_m && resolve_r(cfg, m) > m) {
            usage_error("--r exceeds M = " + std::to_string(m));
        }
    }
    for (int n : cfg.sectors) {
        if (n % 2 != 0 || n == 0) {
            usage_error("mc-validate needs even positive sectors");
        }
    }
    Reports reports;
    {
        gbslxe_reports *raw = nullptr;
        check(gbslxe_reports_create(&raw), "reports");
        reports.reset(raw);
    }
    std::printf("%-6s %-6s %-8s %-8s %-14s %-14s %-14s %-8s\n", "sector", "M", "R", "trials", "estimate",
                "std_error", "target", "z");
    for (int n : cfg.sectors) {
        Coefficients c = coefficients_for(cfg, n / 2);
        for (int m : cfg.modes) {
            int r = resolve_r(cfg, m);
            double target = 0;
            if (r_is_m) {
                // R = M grows with M, so the large-M target is the no-vacuum limit.
                check(gbslxe_ideal_score_novacuum(c.get(), &target, nullptr, 0, nullptr), "target");
            } else {
                check(gbslxe_ideal_score(c.get(), r, &target, nullptr, 0), "target");
            }
            check(gbslxe_mc_haar_score(cfg.squeezing, r, m, n, cfg.trials, cfg.seed, cfg.guard, cfg.threads,
                                       reports.get()),
                  "Monte Carlo at M = " + std::to_string(m));
            std::size_t idx = gbslxe_reports_count(reports.get()) - 1;
            gbslxe_score s{};
            check(gbslxe_reports_get(reports.get(), idx, &s), "report");
            double z = (s.value - target) / s.std_error;
            check(gbslxe_reports_set_meta(reports.get(), idx, "target", fmt(target).c_str()), "report");
            check(gbslxe_reports_set_meta(reports.get(), idx, "z", fmt(z).c_str()), "report");
            std::printf("%-6d %-6d %-8d %-8zu %-14s %-14s %-14s %-8s\n", n, m, r, cfg.trials, fmt(s.value).c_str(),
                        fmt(s.std_error).c_str(), fmt(target).c_str(), fmt(z).c_str());
        }
    }
    if (!cfg.out.empty()) {
        check(gbslxe_reports_write(reports.get(), cfg.out.c_str()), "writing " + cfg.out);
    }
    return kExitOk;
}

int cmd_gen_unitary(const RunConfig &cfg) {
    int m = single_m(cfg, true);
    if (cfg.out.empty()) {
        usage_error("gen unitary needs --out");
    }
    gbslxe_unitary *raw = nullptr;
    check(gbslxe_unitary_haar(m, cfg.seed, &raw), "Haar unitary");
    Unitary u(raw);
    check(gbslxe_unitary_write(u.get(), cfg.out.c_str()), "writing " + cfg.out);
    return kExitOk;
}

int cmd_gen_samples(const RunConfig &cfg) {
    require_sectors(cfg);
    if (cfg.out.empty()) {
        usage_error("gen samples needs --out");
    }
    Model model;
    std::string unitary_ref;
    if (cfg.model == "thermal") {
        int m = single_m(cfg, true);
        if (!(cfg.nbar >= 0)) {
            usage_error("--nbar must be non-negative");
        }
        gbslxe_model *raw = nullptr;
        check(gbslxe_model_thermal(cfg.nbar, m, &raw), "thermal model");
        model.reset(raw);
    } else if (cfg.model == "squeezed") {
        if (cfg.unitary.empty()) {
            usage_error("gen samples --model squeezed needs --unitary");
        }
        if (!(cfg.squeezing > 0)) {
            usage_error("--squeezing must be positive");
        }
        gbslxe_unitary *raw_u = nullptr;
        check(gbslxe_unitary_read(cfg.unitary.c_str(), cfg.nearest ? 1 : 0, &raw_u), "reading " + cfg.unitary);
        Unitary u(raw_u);
        int m = gbslxe_unitary_modes(u.get());
        if (!cfg.modes.empty() && single_m(cfg, false) != m) {
            usage_error("--m does not match the unitary file");
        }
        int r = resolve_r(cfg, m);
        for (int n : cfg.sectors) {
            if (n % 2 != 0) {
                usage_error("sector " + std::to_string(n) + " has zero probability under the squeezed model");
            }
        }
        gbslxe_model *raw = nullptr;
        check(gbslxe_model_squeezed(cfg.squeezing, r, u.get(), &raw), "squeezed model");
        model.reset(raw);
        unitary_ref = cfg.unitary;
    } else {
        usage_error("--model must be squeezed or thermal");
    }
    Samples all;
    for (std::size_t i = 0; i < cfg.sectors.size(); ++i) {
        gbslxe_samples *raw = nullptr;
        // Independent stream per sector derived from the master seed.
        std::uint64_t seed = cfg.seed * 0x9E3779B97F4A7C15ULL + i;
        check(gbslxe_samples_bruteforce(model.get(), cfg.sectors[i], cfg.count, seed, cfg.guard, &raw),
              "sampling sector " + std::to_string(cfg.sectors[i]));
        if (!all) {
            all.reset(raw);
        } else {
            Samples part(raw);
            check(gbslxe_samples_append(all.get(), part.get()), "merging samples");
        }
    }
    std::string sectors;
    for (std::size_t i = 0; i < cfg.sectors.size(); ++i) {
        sectors += (i ? "," : "") + std::to_string(cfg.sectors[i]);
    }
    check(gbslxe_samples_set_meta(all.get(), "sector", sectors.c_str()), "meta");
    check(gbslxe_samples_set_meta(all.get(), "seed", std::to_string(cfg.seed).c_str()), "meta");
    check(gbslxe_samples_set_meta(all.get(), "count_per_sector", std::to_string(cfg.count).c_str()), "meta");
    check(gbslxe_samples_set_meta(all.get(), "model", cfg.model.c_str()), "meta");
    if (!unitary_ref.empty()) {
        check(gbslxe_samples_set_unitary_ref(all.get(), unitary_ref.c_str()), "meta");
    }
    check(gbslxe_samples_write(all.get(), cfg.out.c_str()), "writing " + cfg.out);
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"gbslxe: linear cross-entropy scores for Gaussian boson sampling"};
    app.set_version_flag("--version", gbslxe_version());
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
        sub->add_option("--seed", cfg.seed, "master seed");
    };
    auto add_model = [&](CLI::App *sub) {
        sub->add_option("--m", cfg.modes, "number of modes M")->delimiter(',');
        sub->add_option("--r", cfg.squeezed_modes, "number of squeezed modes R (integer or M)");
        sub->add_option("--squeezing", cfg.squeezing, "squeezing parameter r");
        sub->add_option("--sectors", cfg.sectors, "total photon numbers, comma separated")->delimiter(',');
        sub->add_option("--guard", cfg.guard, "largest |K(N)| enumerated by brute force");
    };

    auto *ref = app.add_subcommand("reference-curve", "ideal, no-vacuum and uniform scores per sector");
    add_common(ref);
    add_model(ref);
    ref->add_flag("--deep", cfg.deep, "allow 2N = 8 (about a minute per core)");
    ref->add_option("--cache", cfg.cache, "coefficient cache file");
    ref->add_option("--out", cfg.out, "report file");

    auto *score = app.add_subcommand("score-samples", "estimate the score from a sample file");
    add_common(score);
    add_model(score);
    score->add_option("--in", cfg.in, "sample file")->required();
    score->add_option("--unitary", cfg.unitary, "unitary file")->required();
    score->add_flag("--nearest-unitary", cfg.nearest, "replace the matrix by its closest unitary");
    score->add_option("--out", cfg.out, "report file");

    auto *verify = app.add_subcommand("verify", "run the self-check suite");
    add_common(verify);
    verify->add_flag("--deep", cfg.deep, "also enumerate 2N = 8 (reported, not asserted)");

    auto *mc = app.add_subcommand("mc-validate", "finite-M Haar Monte Carlo against the ideal score");
    add_common(mc);
    add_model(mc);
    mc->add_option("--trials", cfg.trials, "Haar draws per row");
    mc->add_flag("--deep", cfg.deep, "allow 2N = 8 targets");
    mc->add_option("--cache", cfg.cache, "coefficient cache file");
    mc->add_option("--out", cfg.out, "report file");

    auto *gen = app.add_subcommand("gen", "generate unitary or sample files");
    gen->require_subcommand(1);
    auto *gen_u = gen->add_subcommand("unitary", "Haar-random unitary");
    add_common(gen_u);
    gen_u->add_option("--m", cfg.modes, "number of modes M")->required();
    gen_u->add_option("--out", cfg.out, "output file")->required();
    auto *gen_s = gen->add_subcommand("samples", "exact samples by brute-force tabulation");
    add_common(gen_s);
    add_model(gen_s);
    gen_s->add_option("--model", cfg.model, "squeezed or thermal");
    gen_s->add_option("--nbar", cfg.nbar, "mean thermal photon number");
    gen_s->add_option("--unitary", cfg.unitary, "unitary file (squeezed model)");
    gen_s->add_flag("--nearest-unitary", cfg.nearest, "replace the matrix by its closest unitary");
    gen_s->add_option("--count", cfg.count, "samples per sector");
    gen_s->add_option("--out", cfg.out, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*ref) return cmd_reference_curve(cfg);
        if (*score) return cmd_score_samples(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*mc) return cmd_mc_validate(cfg);
        if (*gen_u) return cmd_gen_unitary(cfg);
        if (*gen_s) return cmd_gen_samples(cfg);
    } catch (const StatusError &e) {
        std::fprintf(stderr, "gbslxe: %s\n", e.context.c_str());
        return exit_code_for(e.status);
    }
    return kExitUsage;
}
