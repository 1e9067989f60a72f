#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "sympencil/canonical.hpp"
#include "sympencil/experiments.hpp"
#include "sympencil/geometry.hpp"
#include "sympencil/order.hpp"

namespace sp = sympencil;

namespace {

constexpr double kIdentityRel = 1e-12;
constexpr double kIdentitySeconds = 1.0;
constexpr double kCodimConditionCap = 50.0;
constexpr int kCodimSamples = 50;
constexpr double kCodimSeconds = 120.0;
constexpr int kGenericityTrials = 100;
constexpr double kGenericityRate = 0.99;
constexpr int kOracleTrials = 200;
constexpr int kOracleMaxN = 8;
constexpr double kOracleRate = 0.99;
constexpr int kPartitionTriples = 10000;
constexpr int kPartitionMaxTotal = 20;
constexpr double kPartitionSeconds = 10.0;
constexpr std::uint64_t kSeed = 20240917;

int failed = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++failed;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

void example_identity() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(kSeed);
    std::uniform_real_distribution<double> log_mag(-3.0, 0.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    auto small = [&] { return std::polar(std::pow(10.0, log_mag(rng)), angle(rng)); };

    struct Draw {
        sp::Complex l1, l2, e1, e2;
    };
    std::vector<Draw> draws{{1.0, 2.0, 1e-3, 1e-3}};
    while (draws.size() < 21) {
        const auto pts = sp::sample_distinct_points(2, 1e-3, rng);
        draws.push_back({2.0 * pts[0], 2.0 * pts[1], small(), small()});
    }
    double worst = 0.0;
    bool all = true;
    for (const auto& d : draws) {
        const auto ex = sp::example_1_1(d.l1, d.l2, d.e1, d.e2);
        worst = std::max(worst, (ex.product - ex.q).norm() / ex.q.norm());
        all = all && sp::verify_example_1_1(d.l1, d.l2, d.e1, d.e2).all_passed();
    }
    const double elapsed = seconds_since(start);
    report(1, "explicit 3x3 strict equivalence", all && worst <= kIdentityRel && elapsed < kIdentitySeconds,
           fmt("21 draws, worst relative residual %.3e <= %.0e, structures ok=%d, %.3f s < %.0f s", worst,
               kIdentityRel, int(all), elapsed, kIdentitySeconds));
}

void generic_listing() {
    bool ok = true;
    int checked = 0;
    for (int n = 2; n <= 10; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            const auto comps = sp::generic_components(n, r);
            ok = ok && static_cast<int>(comps.size()) == r / 2 + 1;
            for (std::size_t i = 0; i < comps.size(); ++i) {
                for (std::size_t j = 0; j < i; ++j) {
                    ok = ok && !sp::same_bundle(sp::generic_bundle(comps[i]), sp::generic_bundle(comps[j]));
                }
            }
            ++checked;
        }
    }
    report(2, "generic lists floor(r/2)+1 distinct bundles", ok, fmt("%d (n, r) pairs, 2 <= n <= 10", checked));
}

void codimension_match() {
    const auto start = std::chrono::steady_clock::now();
    const sp::SeededSampler sampler(kSeed, kCodimConditionCap);
    int samples = 0;
    int failures = 0;
    std::string first;
    for (int n = 2; n <= 6; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            for (const auto& c : sp::generic_components(n, r)) {
                const auto rep = sp::codimension_trial(c, kCodimSamples, sampler);
                samples += rep.trials;
                failures += static_cast<int>(rep.failures.size());
                if (first.empty() && !rep.failures.empty()) {
                    first = rep.name + ": " + rep.failures.front().diagnosis;
                }
            }
        }
    }
    const double elapsed = seconds_since(start);
    report(3, "numeric orbit codimension equals (n-a)(n-r+1)", failures == 0 && elapsed < kCodimSeconds,
           fmt("%d samples, %d failures, cap %.0f, %.2f s < %.0f s%s%s", samples, failures, kCodimConditionCap,
               elapsed, kCodimSeconds, first.empty() ? "" : "; first: ", first.c_str()));
}

void bundle_codimension_monotone() {
    bool ok = true;
    for (int n = 2; n <= 10; ++n) {
        for (int r = 1; r < n - 1; ++r) {
            const auto comps = sp::generic_components(n, r);
            for (std::size_t i = 1; i < comps.size(); ++i) {
                ok = ok && sp::codim_bundle_generic(comps[i]) < sp::codim_bundle_generic(comps[i - 1]);
            }
        }
    }
    report(4, "bundle codimension strictly decreases in a for r < n-1", ok, "n <= 10");
}

void genericity() {
    const sp::SeededSampler sampler(kSeed);
    bool ok = true;
    double worst = 1.0;
    int silent = 0;
    int components = 0;
    for (int n = 2; n <= 5; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            for (const auto& c : sp::generic_components(n, r)) {
                const auto rep = sp::genericity_trial(c, kGenericityTrials, sampler);
                worst = std::min(worst, rep.success_rate());
                silent += rep.count(sp::FailureKind::Mismatch) + rep.count(sp::FailureKind::Error);
                ok = ok && rep.success_rate() >= kGenericityRate;
                ++components;
            }
        }
    }
    report(5, "random members of bun(K_a) extract as K_a's bundle", ok && silent == 0,
           fmt("%d components x %d trials, worst rate %.3f >= %.2f, non-indeterminate failures %d", components,
               kGenericityTrials, worst, kGenericityRate, silent));
}

void oracle_equivalence() {
    const sp::SeededSampler sampler(kSeed);
    const auto rep = sp::oracle_agreement_trial(kOracleTrials, kOracleMaxN, sampler);
    std::string first = rep.failures.empty() ? "" : "; first: " + rep.failures.front().diagnosis;
    report(6, "staircase and block-Toeplitz Weyr counts agree", rep.success_rate() >= kOracleRate,
           fmt("%d/%d agree (%.3f >= %.2f), n <= %d, indeterminate %d, mismatch %d%s", rep.successes, rep.trials,
               rep.success_rate(), kOracleRate, kOracleMaxN, rep.count(sp::FailureKind::Indeterminate),
               rep.count(sp::FailureKind::Mismatch), first.c_str()));
}

void closure_obstructions() {
    bool ok = true;
    int pairs = 0;
    for (int n = 2; n <= 8; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            const auto table = sp::obstruction_table(n, r);
            for (std::size_t a = 0; a < table.size(); ++a) {
                for (std::size_t b = 0; b < table.size(); ++b) {
                    if (a != b) {
                        ok = ok && table[a][b].kind != sp::ObstructionKind::None;
                        ++pairs;
                    }
                }
            }
        }
    }
    const auto t = sp::obstruction_table(3, 2);
    const bool example = t[0][1].kind == sp::ObstructionKind::MinimalIndexMajorization &&
                         t[1][0].kind == sp::ObstructionKind::SimpleEigenvalueMultiplicity &&
                         t[1][0].demanded_simple == 2 && t[1][0].available_simple == 0;
    report(7, "every ordered pair of distinct components is obstructed", ok && example,
           fmt("%d ordered pairs, n <= 8; (3,2) asymmetry reproduced=%d", pairs, int(example)));
}

void degeneration_limits() {
    const std::vector<double> ts{1e-1, 1e-2, 1e-4};
    const std::vector<sp::Complex> mus{{0.0, 0.0}, {0.5, 1.0}, {-3.0, 0.25}};
    int checks = 0;
    int failures = 0;
    std::string first;
    for (int size = 1; size <= 4; ++size) {
        for (double t : ts) {
            std::vector<sp::ExperimentReport> reps;
            for (const auto mu : mus) {
                reps.push_back(sp::degeneration_check(false, size, mu, t));
            }
            reps.push_back(sp::degeneration_check(true, size, 0.0, t));
            for (const auto& rep : reps) {
                ++checks;
                if (!rep.all_passed()) {
                    ++failures;
                    if (first.empty()) {
                        first = rep.name + ": " + rep.failures.front().diagnosis;
                    }
                }
            }
        }
    }
    report(8, "perturbed Jordan blocks split into simple eigenvalues at distance t", failures == 0,
           fmt("%d blocks, %d failures%s%s", checks, failures, first.empty() ? "" : "; first: ", first.c_str()));
}

sp::IntegerPartition random_partition(int total, std::mt19937_64& rng) {
    std::vector<int> parts;
    while (total > 0) {
        const int part = std::uniform_int_distribution<int>(1, total)(rng);
        parts.push_back(part);
        total -= part;
    }
    std::sort(parts.rbegin(), parts.rend());
    return sp::IntegerPartition(parts);
}

void partition_order() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> total(0, kPartitionMaxTotal);
    int violations = 0;
    int comparable = 0;
    for (int i = 0; i < kPartitionTriples; ++i) {
        // Half of the triples share a total so that chains actually occur.
        const bool same = i % 2 == 0;
        const int t0 = total(rng);
        const auto x = random_partition(t0, rng);
        const auto y = random_partition(same ? t0 : total(rng), rng);
        const auto z = random_partition(same ? t0 : total(rng), rng);
        const bool xy = sp::dominated_by(x, y);
        const bool yx = sp::dominated_by(y, x);
        const bool yz = sp::dominated_by(y, z);
        if (!sp::dominated_by(x, x) || (xy && yx && !(x == y)) || (xy && yz && !sp::dominated_by(x, z))) {
            ++violations;
        }
        comparable += xy && yz;
    }
    const double elapsed = seconds_since(start);
    report(9, "majorization is a partial order", violations == 0 && elapsed < kPartitionSeconds,
           fmt("%d triples, total <= %d, %d chains, %d violations, %.3f s < %.0f s", kPartitionTriples,
               kPartitionMaxTotal, comparable, violations, elapsed, kPartitionSeconds));
}

}  // namespace

int main() {
    example_identity();
    generic_listing();
    codimension_match();
    bundle_codimension_monotone();
    genericity();
    oracle_equivalence();
    closure_obstructions();
    degeneration_limits();
    partition_order();
    std::printf("%d of 9 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
