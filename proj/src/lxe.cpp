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

#include "gbslxe/lxe.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "gbslxe/parallel.hpp"
#include "gbslxe/rng.hpp"

namespace gbslxe {

const char *to_string(ScoreMethod method) {
    switch (method) {
        case ScoreMethod::BruteForce:
            return "bruteforce";
        case ScoreMethod::Samples:
            return "samples";
        case ScoreMethod::MonteCarlo:
            return "montecarlo";
        case ScoreMethod::ClosedForm:
            return "closed_form";
    }
    return "unknown";
}

std::string fnv1a_hex(const std::string &data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

double nonzero_sector(const GbsModel &model, int n, const char *name) {
    double p = total_photon_probability(model, n);
    if (!(std::abs(p) > 1e-300)) {
        fail(std::string("model ") + name + " has zero probability in sector " + std::to_string(n));
    }
    return p;
}

std::string hex_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%a", x);
    return buf;
}

}  // namespace

double lxe_bruteforce(const GbsModel &a, const GbsModel &b, int n, std::uint64_t guard, unsigned threads) {
    if (a.modes != b.modes) {
        fail("models have different mode counts");
    }
    check_pattern_guard(a.modes, n, guard);
    double pa = nonzero_sector(a, n, "A");
    double pb = nonzero_sector(b, n, "B");
    auto patterns = enumerate_patterns(a.modes, n);
    const double a0 = vacuum_probability(a);
    const double b0 = vacuum_probability(b);
    std::vector<double> products(patterns.size());
    parallel_for(patterns.size(), threads, [&](std::size_t i) {
        products[i] = probability_given_vacuum(a, a0, patterns[i]) * probability_given_vacuum(b, b0, patterns[i]);
    });
    double total = 0;
    for (double p : products) {
        total += p;
    }
    return total / (pa * pb);
}

DCoefficient d_coefficient(const GbsModel &a, const GbsModel &b, int n, std::uint64_t guard, unsigned threads) {
    if (a.modes != b.modes) {
        fail("models have different mode counts");
    }
    double qa = q_series(a, n)[static_cast<std::size_t>(n)];
    double qb = q_series(b, n)[static_cast<std::size_t>(n)];
    if (!(std::abs(qa) > 1e-300) || !(std::abs(qb) > 1e-300)) {
        fail("q_N vanishes for one of the models; D is undefined in sector " + std::to_string(n));
    }
    DCoefficient d;
    d.series = 1.0 / (qa * qb);
    double na = total_photon_probability_bruteforce(a, n, guard, threads);
    double nb = total_photon_probability_bruteforce(b, n, guard, threads);
    d.ratio = vacuum_probability(a) * vacuum_probability(b) / (na * nb);
    return d;
}

ScoreReport score_from_samples(const SampleSet &samples, const UnitaryMatrix &u, double r, int squeezed_modes, int n,
                               unsigned threads) {
    samples.validate();
    if (samples.modes != u.modes()) {
        fail("sample set has M = " + std::to_string(samples.modes) + " but the unitary is " +
             std::to_string(u.modes()) + " x " + std::to_string(u.modes()));
    }
    if (n % 2 != 0) {
        fail("odd sector " + std::to_string(n) + " has zero probability under the squeezed reference model");
    }
    auto index = samples.sector_index();
    auto it = index.find(n);
    if (it == index.end() || it->second.empty()) {
        fail("no samples in sector " + std::to_string(n));
    }
    const auto &members = it->second;
    GbsModel model = build_squeezed_model(r, squeezed_modes, u);
    double sector_prob = nonzero_sector(model, n, "A_sqz");
    const double l_n = static_cast<double>(members.size());
    const double l_total = static_cast<double>(samples.samples.size());
    const double pr_hat = l_n / l_total;

    std::vector<double> values(members.size());
    ClipCounter clips;
    std::vector<ClipCounter> local(members.size());
    const double pr0 = vacuum_probability(model);
    parallel_for(members.size(), threads, [&](std::size_t i) {
        values[i] = probability_given_vacuum(model, pr0, samples.samples[members[i]], &local[i]);
    });
    double sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        sum += values[i];
        clips.clipped += local[i].clipped;
    }
    // (1/L) sum over sector-N samples divided by P^r(N) is the sector mean.
    double mean = sum / l_n;
    double factor = to_double(Rational(count_patterns(samples.modes, n))) / sector_prob;

    ScoreReport report;
    report.sector = n;
    report.method = ScoreMethod::Samples;
    report.value = factor * mean;
    if (members.size() < 2) {
        report.std_error = std::numeric_limits<double>::infinity();
    } else {
        double ss = 0;
        for (double v : values) {
            ss += (v - mean) * (v - mean);
        }
        double var = ss / (l_n - 1);
        report.std_error = factor * std::sqrt(var / l_n);
    }
    report.meta["pr_hat_estimator"] = "sector_frequency";
    report.meta["pr_hat"] = std::to_string(pr_hat);
    report.meta["sector_samples"] = std::to_string(members.size());
    report.meta["total_samples"] = std::to_string(samples.samples.size());
    report.meta["clipped_probabilities"] = std::to_string(clips.clipped);
    report.meta["squeezing"] = hex_double(r);
    report.meta["squeezed_modes"] = std::to_string(squeezed_modes);
    if (samples.unitary_ref) {
        report.meta["unitary_ref"] = *samples.unitary_ref;
    }

    std::ostringstream canon;
    canon << "score_from_samples;m=" << samples.modes << ";n=" << n << ";r=" << hex_double(r)
          << ";R=" << squeezed_modes << ";u=";
    for (Eigen::Index i = 0; i < u.entries().size(); ++i) {
        canon << hex_double(u.entries()(i).real()) << ',' << hex_double(u.entries()(i).imag()) << ';';
    }
    canon << "samples=";
    for (const auto &s : samples.samples) {
        for (int c : s) {
            canon << c << ',';
        }
        canon << ';';
    }
    report.digest = fnv1a_hex(canon.str());
    return report;
}

ScoreReport mc_haar_score(double r, int squeezed_modes, int m, int n, std::size_t trials, std::uint64_t seed,
                          std::uint64_t guard, unsigned threads) {
    if (trials < 2) {
        fail("mc_haar_score needs at least 2 trials");
    }
    if (squeezed_modes < 1 || squeezed_modes > m) {
        fail("squeezed mode count R must satisfy 1 <= R <= M");
    }
    check_pattern_guard(m, n, guard);
    const double k_size = to_double(Rational(count_patterns(m, n)));
    std::vector<double> values(trials);
    parallel_for(trials, threads, [&](std::size_t t) {
        UnitaryMatrix u = haar_unitary(m, mix_seed(seed, t));
        GbsModel model = build_squeezed_model(r, squeezed_modes, u);
        values[t] = k_size * lxe_bruteforce(model, model, n, guard, 1);
    });
    double sum = 0;
    for (double v : values) {
        sum += v;
    }
    double mean = sum / static_cast<double>(trials);
    double ss = 0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    ScoreReport report;
    report.sector = n;
    report.method = ScoreMethod::MonteCarlo;
    report.value = mean;
    report.std_error = std::sqrt(ss / static_cast<double>(trials - 1) / static_cast<double>(trials));
    report.seeds = {seed};
    report.meta["modes"] = std::to_string(m);
    report.meta["squeezed_modes"] = std::to_string(squeezed_modes);
    report.meta["squeezing"] = hex_double(r);
    report.meta["trials"] = std::to_string(trials);
    report.meta["seed_derivation"] = "splitmix64(seed, trial)";
    std::ostringstream canon;
    canon << "mc_haar_score;r=" << hex_double(r) << ";R=" << squeezed_modes << ";m=" << m << ";n=" << n
          << ";trials=" << trials << ";seed=" << seed;
    report.digest = fnv1a_hex(canon.str());
    return report;
}

std::vector<Complex> u_traces(const UnitaryMatrix &u, int squeezed_modes, const std::vector<double> &phi, int n) {
    const int m = u.modes();
    if (squeezed_modes < 0 || squeezed_modes > m) {
        fail("squeezed mode count R must satisfy 0 <= R <= M");
    }
    if (static_cast<int>(phi.size()) != m) {
        fail("phase vector length must equal M");
    }
    for (double p : phi) {
        if (!(p >= 0 && p <= 2 * std::numbers::pi)) {
            fail("phases must lie in [0, 2 pi]");
        }
    }
    CVector d2(m);
    for (int k = 0; k < m; ++k) {
        d2(k) = std::polar(1.0, 2 * phi[static_cast<std::size_t>(k)]);
    }
    const CMatrix &uu = u.entries();
    CMatrix v = uu.leftCols(squeezed_modes) * uu.leftCols(squeezed_modes).transpose();
    CMatrix base = d2.asDiagonal() * v * d2.asDiagonal() * v.conjugate();
    std::vector<Complex> out;
    CMatrix power = base;
    for (int k = 1; k <= n; ++k) {
        out.push_back(0.5 * power.trace());
        if (k < n) {
            power = (power * base).eval();
        }
    }
    return out;
}

}  // namespace gbslxe
