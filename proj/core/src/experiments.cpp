#include "sympencil/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "sympencil/errors.hpp"
#include "sympencil/geometry.hpp"

namespace sympencil {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs one trial body and files its exception, if any, under the right kind.
template <class Body>
void run_trial(ExperimentReport& report, std::uint64_t seed, Body&& body) {
    try {
        std::string diagnosis;
        if (body(diagnosis)) {
            report.record_success();
        } else {
            report.record_failure(seed, FailureKind::Mismatch, std::move(diagnosis));
        }
    } catch (const IndeterminateStructure& e) {
        report.record_failure(seed, FailureKind::Indeterminate, e.what());
    } catch (const PencilError& e) {
        report.record_failure(seed, FailureKind::Error, e.what());
    }
}

const EigenvalueCluster* nearest_cluster(const Eigenstructure& es, Complex mu, double tol) {
    const EigenvalueCluster* best = nullptr;
    for (const auto& c : es.finite) {
        if (std::abs(c.value - mu) <= tol * std::max(1.0, std::abs(mu)) &&
            (best == nullptr || std::abs(c.value - mu) < std::abs(best->value - mu))) {
            best = &c;
        }
    }
    return best;
}

}  // namespace

std::string to_string(FailureKind kind) {
    switch (kind) {
        case FailureKind::Indeterminate:
            return "indeterminate";
        case FailureKind::Mismatch:
            return "mismatch";
        case FailureKind::Error:
            break;
    }
    return "error";
}

int ExperimentReport::count(FailureKind kind) const {
    return static_cast<int>(
        std::count_if(failures.begin(), failures.end(), [kind](const TrialFailure& f) { return f.kind == kind; }));
}

bool same_outcome(const ExperimentReport& x, const ExperimentReport& y) {
    return x.name == y.name && x.trials == y.trials && x.successes == y.successes && x.failures == y.failures &&
           x.tolerances == y.tolerances && x.notes == y.notes;
}

SeededSampler::SeededSampler(std::uint64_t seed, double condition_cap) : seed_(seed), cap_(condition_cap) {
    if (!(condition_cap >= 1.0)) {
        throw PreconditionError("condition cap must be ≥ 1");
    }
}

std::uint64_t SeededSampler::sub_seed(std::uint64_t trial) const {
    return splitmix64(seed_ ^ splitmix64(trial));
}

std::mt19937_64 SeededSampler::stream(std::uint64_t trial) const {
    return std::mt19937_64(sub_seed(trial));
}

ComplexMatrix SeededSampler::random_invertible(int n, std::mt19937_64& rng) const {
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    for (;;) {
        ComplexMatrix w(n, n);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                const double re = gauss(rng);
                const double im = gauss(rng);
                w(i, j) = Complex(re, im);
            }
        }
        if (condition_number(w) <= cap_) {
            return w;
        }
    }
}

Example11 example_1_1(Complex l1, Complex l2, Complex e1, Complex e2) {
    if (l1 == l2) {
        throw PreconditionError("Example 1.1 requires λ1 ≠ λ2");
    }
    if (e1 == Complex{} || e2 == Complex{}) {
        throw PreconditionError("Example 1.1 requires nonzero ε1, ε2");
    }
    Example11 ex;
    ComplexMatrix a = ComplexMatrix::Zero(3, 3);
    a(0, 0) = 1.0;
    a(1, 1) = 1.0;
    ComplexMatrix b = ComplexMatrix::Zero(3, 3);
    b(0, 0) = -l1;
    b(1, 1) = -l2;
    ex.p = Pencil(a, b);
    b(0, 2) = e1;
    b(2, 1) = e2;
    ex.perturbed = Pencil(a, b);
    ex.q = build_block(MinimalPair{1}).pencil();

    ex.left = ComplexMatrix::Zero(3, 3);
    ex.left(0, 1) = 1.0;
    ex.left(0, 2) = l2 / e2;
    ex.left(1, 2) = 1.0 / e2;
    ex.left(2, 0) = 1.0;
    ex.right = ComplexMatrix::Zero(3, 3);
    ex.right(0, 0) = 1.0;
    ex.right(1, 2) = 1.0;
    ex.right(2, 0) = l1 / e1;
    ex.right(2, 1) = 1.0 / e1;
    ex.product = multiply(ex.left, ex.perturbed, ex.right);
    return ex;
}

ExperimentReport verify_example_1_1(Complex l1, Complex l2, Complex e1, Complex e2, const ExtractOptions& opts) {
    const Stopwatch clock;
    ExperimentReport report;
    report.name = "example-1.1";
    report.tolerances["identity_rel"] = 1e-12;
    report.tolerances["rank_tol"] = opts.rank.tol;
    const Example11 ex = example_1_1(l1, l2, e1, e2);

    run_trial(report, 0, [&](std::string& why) {
        const double rel = (ex.product - ex.q).norm() / ex.q.norm();
        std::ostringstream msg;
        msg << "relative residual " << rel;
        why = msg.str();
        return rel <= 1e-12;
    });
    run_trial(report, 1, [&](std::string& why) {
        const auto got = extract_structure(ex.perturbed, opts);
        why = "perturbed P extracted as " + got.to_string();
        return got == StructureDescriptor({MinimalPair{1}});
    });
    run_trial(report, 2, [&](std::string& why) {
        const auto got = extract_structure(ex.p, opts);
        why = "P extracted as " + got.to_string();
        const StructureDescriptor want({MinimalPair{0}, JordanFinite{1, l1}, JordanFinite{1, l2}});
        return same_orbit(got, want, opts.cluster_tol);
    });
    report.wall_time_s = clock.seconds();
    return report;
}

SymmetricPencil degenerate_jordan_finite(int size, Complex mu, double t) {
    if (size < 1 || !(t >= 0.0)) {
        throw PreconditionError("degenerate_jordan_finite requires size ≥ 1 and t ≥ 0");
    }
    const SymmetricPencil block = build_block(JordanFinite{size, mu});
    ComplexMatrix b = block.b();
    b(size - 1, size - 1) += t;
    return SymmetricPencil(Pencil(block.a(), std::move(b)));
}

SymmetricPencil degenerate_jordan_infinite(int size, double t) {
    if (size < 1 || !(t >= 0.0)) {
        throw PreconditionError("degenerate_jordan_infinite requires size ≥ 1 and t ≥ 0");
    }
    const SymmetricPencil block = build_block(JordanInfinite{size});
    ComplexMatrix a = block.a();
    a(size - 1, size - 1) += t;
    return SymmetricPencil(Pencil(std::move(a), block.b()));
}

ExperimentReport degeneration_check(bool infinite, int size, Complex mu, double t, const ExtractOptions& opts) {
    const Stopwatch clock;
    ExperimentReport report;
    report.name = infinite ? "degenerate-jordan-inf" : "degenerate-jordan";
    report.tolerances["t"] = t;
    report.tolerances["min_eigenvalue_gap"] = 1e-10;
    report.notes.emplace_back("t is an engineering choice for the perturbation size");
    if (!infinite && size == 1) {
        report.tolerances["distance_abs"] = 4.0 * std::numeric_limits<double>::epsilon() * (std::abs(mu) + t);
        report.notes.emplace_back("size 1: the corner entry coincides with −μ, distance is exact up to rounding");
    }

    const SymmetricPencil limit =
        infinite ? build_block(JordanInfinite{size}) : build_block(JordanFinite{size, mu});
    const SymmetricPencil perturbed =
        infinite ? degenerate_jordan_infinite(size, t) : degenerate_jordan_finite(size, mu, t);

    run_trial(report, 0, [&](std::string& why) {
        const double dist = (perturbed.pencil() - limit.pencil()).norm();
        std::ostringstream msg;
        msg.precision(17);
        msg << "distance to the unperturbed block " << dist << " (want " << t << ")";
        why = msg.str();
        if (!infinite && size == 1) {
            // The corner is also the −μ entry, so t is added to it in floating point.
            return std::abs(dist - t) <= 4.0 * std::numeric_limits<double>::epsilon() * (std::abs(mu) + t);
        }
        return dist == t;
    });
    run_trial(report, 1, [&](std::string& why) {
        const auto got = extract_structure(perturbed, opts);
        why = "extracted " + got.to_string();
        if (t == 0.0) {
            return same_orbit(got, infinite ? StructureDescriptor({JordanInfinite{size}})
                                            : StructureDescriptor({JordanFinite{size, mu}}),
                              opts.cluster_tol);
        }
        const auto groups = got.eigen_groups();
        if (static_cast<int>(groups.size()) != size || !got.minimal_indices().empty()) {
            return false;
        }
        for (std::size_t i = 0; i < groups.size(); ++i) {
            if (groups[i].sizes != std::vector<int>{1}) {
                return false;
            }
            for (std::size_t j = i + 1; j < groups.size(); ++j) {
                if (!groups[i].point.is_infinite() && !groups[j].point.is_infinite() &&
                    std::abs(groups[i].point.value() - groups[j].point.value()) <= 1e-10) {
                    return false;
                }
            }
        }
        return true;
    });
    report.wall_time_s = clock.seconds();
    return report;
}

SymmetricPencil rank_augment_sequence(const StructureDescriptor& d, int m) {
    if (m < 1) {
        throw PreconditionError("rank_augment_sequence: m must be ≥ 1");
    }
    if (d.minimal_indices().empty()) {
        throw PreconditionError("rank_augment_sequence: descriptor has no MinimalPair block");
    }
    const SymmetricPencil base = descriptor_to_pencil(d);
    ComplexMatrix b = base.b();
    b(0, 0) += 1.0 / static_cast<double>(m);
    return SymmetricPencil(Pencil(base.a(), std::move(b)));
}

ExperimentReport genericity_trial(const GenericComponent& c, int trials, const SeededSampler& sampler,
                                  const ExtractOptions& opts) {
    const Stopwatch clock;
    ExperimentReport report;
    report.name = "genericity n=" + std::to_string(c.n()) + " r=" + std::to_string(c.r()) +
                  " a=" + std::to_string(c.a());
    report.tolerances["condition_cap"] = sampler.condition_cap();
    report.tolerances["rank_tol"] = opts.rank.tol;
    report.tolerances["rank_gap"] = opts.rank.gap;
    report.tolerances["cluster_tol"] = opts.cluster_tol;
    report.tolerances["eigenvalue_min_gap"] = 1e-3;
    const StructureDescriptor target = generic_bundle(c);

    for (int i = 0; i < trials; ++i) {
        const auto trial = static_cast<std::uint64_t>(i);
        run_trial(report, sampler.sub_seed(trial), [&](std::string& why) {
            auto rng = sampler.stream(trial);
            const auto mus = sample_distinct_points(c.eigenvalue_count(), 1e-3, rng);
            const ComplexMatrix p = sampler.random_invertible(c.n(), rng);
            const SymmetricPencil s = congruence(descriptor_to_pencil(generic_kcf(c, mus)), p.transpose());
            const auto got = extract_structure(s, opts);
            why = "extracted " + got.to_string() + ", expected bundle of " + target.to_string();
            return same_bundle(got, target);
        });
    }
    report.wall_time_s = clock.seconds();
    return report;
}

ExperimentReport codimension_trial(const GenericComponent& c, int trials, const SeededSampler& sampler,
                                   const RankOptions& opts) {
    const Stopwatch clock;
    ExperimentReport report;
    report.name = "codimension n=" + std::to_string(c.n()) + " r=" + std::to_string(c.r()) +
                  " a=" + std::to_string(c.a());
    report.tolerances["condition_cap"] = sampler.condition_cap();
    report.tolerances["rank_tol"] = opts.tol;
    const int expected = codim_orbit_generic(c);
    for (int i = 0; i < trials; ++i) {
        const auto trial = static_cast<std::uint64_t>(i);
        run_trial(report, sampler.sub_seed(trial), [&](std::string& why) {
            auto rng = sampler.stream(trial);
            const auto mus = sample_distinct_points(c.eigenvalue_count(), 1e-3, rng);
            const ComplexMatrix p = sampler.random_invertible(c.n(), rng);
            const SymmetricPencil s = congruence(descriptor_to_pencil(generic_kcf(c, mus)), p.transpose());
            const int got = codim_orbit_numeric(s, opts);
            why = "numeric codimension " + std::to_string(got) + ", closed form " + std::to_string(expected);
            return got == expected;
        });
    }
    report.wall_time_s = clock.seconds();
    return report;
}

StructureDescriptor random_orbit_descriptor(int max_n, std::mt19937_64& rng) {
    if (max_n < 1) {
        throw PreconditionError("random_orbit_descriptor: max_n must be ≥ 1");
    }
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int n = uniform(1, max_n);
    const auto pool = sample_distinct_points(2, 0.3, rng);
    std::vector<CanonicalBlock> blocks;
    int remaining = n;
    while (remaining > 0) {
        switch (uniform(0, 3)) {
            case 0: {
                const int d = uniform(0, std::min(2, (remaining - 1) / 2));
                blocks.emplace_back(MinimalPair{d});
                remaining -= 2 * d + 1;
                break;
            }
            case 1:
            case 2: {
                const int size = uniform(1, std::min(3, remaining));
                blocks.emplace_back(JordanFinite{size, pool[static_cast<std::size_t>(uniform(0, 1))]});
                remaining -= size;
                break;
            }
            default: {
                const int size = uniform(1, std::min(2, remaining));
                blocks.emplace_back(JordanInfinite{size});
                remaining -= size;
                break;
            }
        }
    }
    return StructureDescriptor(std::move(blocks));
}

ExperimentReport oracle_agreement_trial(int trials, int max_n, const SeededSampler& sampler,
                                        const ExtractOptions& opts) {
    const Stopwatch clock;
    ExperimentReport report;
    report.name = "oracle-agreement";
    report.tolerances["condition_cap"] = sampler.condition_cap();
    report.tolerances["rank_tol"] = opts.rank.tol;
    report.tolerances["rank_gap"] = opts.rank.gap;
    report.tolerances["cluster_tol"] = opts.cluster_tol;
    for (int i = 0; i < trials; ++i) {
        const auto trial = static_cast<std::uint64_t>(i);
        run_trial(report, sampler.sub_seed(trial), [&](std::string& why) {
            auto rng = sampler.stream(trial);
            const StructureDescriptor truth = random_orbit_descriptor(max_n, rng);
            const int n = truth.size();
            const ComplexMatrix w = sampler.random_invertible(n, rng);
            const SymmetricPencil s = congruence(descriptor_to_pencil(truth), w);

            const Eigenstructure es = extract_eigenstructure(s, opts);
            const StructureDescriptor got = es.to_descriptor();
            std::ostringstream msg;
            msg << "truth " << truth.to_string() << ", extracted " << got.to_string();

            const IntegerPartition eps_oracle = toeplitz_rank_counts(s, std::nullopt, std::max(n, 1), opts.rank);
            if (weyr_minimal(got) != eps_oracle) {
                msg << "; epsilon staircase " << weyr_minimal(got).to_string() << " vs toeplitz "
                    << eps_oracle.to_string();
                why = msg.str();
                return false;
            }
            for (const auto& g : truth.eigen_groups()) {
                const IntegerPartition delta_oracle = toeplitz_rank_counts(s, g.point, n, opts.rank);
                IntegerPartition delta_staircase;
                if (g.point.is_infinite()) {
                    delta_staircase = weyr_of(es.infinite_sizes, 1);
                } else if (const auto* c = nearest_cluster(es, g.point.value(), 1e-4)) {
                    delta_staircase = weyr_of(c->sizes, 1);
                }
                if (delta_staircase != delta_oracle) {
                    msg << "; delta staircase " << delta_staircase.to_string() << " vs toeplitz "
                        << delta_oracle.to_string();
                    why = msg.str();
                    return false;
                }
            }
            why = msg.str();
            return got.distinct_eigenvalue_count() == truth.distinct_eigenvalue_count() &&
                   same_orbit(got, truth, 1e-4);
        });
    }
    report.wall_time_s = clock.seconds();
    return report;
}

}  // namespace sympencil
