#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sympencil/canonical.hpp"
#include "sympencil/extract.hpp"
#include "sympencil/pencil.hpp"

namespace sympencil {

enum class FailureKind { Indeterminate, Mismatch, Error };

std::string to_string(FailureKind kind);

struct TrialFailure {
    std::uint64_t seed = 0;
    FailureKind kind = FailureKind::Mismatch;
    std::string diagnosis;

    friend bool operator==(const TrialFailure&, const TrialFailure&) = default;
};

/// Aggregate outcome of a verification run. successes + failures == trials.
struct ExperimentReport {
    std::string name;
    int trials = 0;
    int successes = 0;
    std::vector<TrialFailure> failures;
    std::map<std::string, double> tolerances;
    std::vector<std::string> notes;
    double wall_time_s = 0.0;

    bool all_passed() const { return failures.empty() && successes == trials; }
    double success_rate() const { return trials == 0 ? 1.0 : static_cast<double>(successes) / trials; }
    int count(FailureKind kind) const;

    void record_success() {
        ++trials;
        ++successes;
    }
    void record_failure(std::uint64_t seed, FailureKind kind, std::string diagnosis) {
        ++trials;
        failures.push_back({seed, kind, std::move(diagnosis)});
    }
};

/// Equality of everything except wall time.
bool same_outcome(const ExperimentReport& x, const ExperimentReport& y);

/// Deterministic source of random congruences and eigenvalues.
///
/// Trial i draws from its own engine seeded by a mix of (seed, i), so results
/// do not depend on the order in which trials run.
class SeededSampler {
public:
    explicit SeededSampler(std::uint64_t seed, double condition_cap = 100.0);

    std::uint64_t seed() const noexcept { return seed_; }
    double condition_cap() const noexcept { return cap_; }

    std::uint64_t sub_seed(std::uint64_t trial) const;
    std::mt19937_64 stream(std::uint64_t trial) const;

    /// Standard complex Gaussian n×n matrix, redrawn until cond₂ ≤ cap.
    ComplexMatrix random_invertible(int n, std::mt19937_64& rng) const;

private:
    std::uint64_t seed_;
    double cap_;
};

/// The three matrices and both sides of the Example 1.1 strict equivalence.
struct Example11 {
    Pencil p;          // diag(λ−λ1, λ−λ2, 0)
    Pencil perturbed;  // P with ε1 at (1,3) and ε2 at (3,2)
    Pencil q;          // M_1
    ComplexMatrix left;
    ComplexMatrix right;
    Pencil product;    // left·perturbed·right
};

Example11 example_1_1(Complex l1, Complex l2, Complex e1, Complex e2);

/// Checks the identity to 1e-12 relative and the structures of P and perturbed P.
ExperimentReport verify_example_1_1(Complex l1, Complex l2, Complex e1, Complex e2,
                                    const ExtractOptions& opts = {});

/// J^s_ℓ(μ) with t in the lower-right corner of the constant coefficient.
SymmetricPencil degenerate_jordan_finite(int size, Complex mu, double t);
/// J^s_k(∞) with t·λ in the lower-right corner.
SymmetricPencil degenerate_jordan_infinite(int size, double t);

/// Checks a degenerated block: `size` distinct simple eigenvalues and
/// distance exactly t to the unperturbed block.
ExperimentReport degeneration_check(bool infinite, int size, Complex mu, double t,
                                    const ExtractOptions& opts = {});

/// descriptor_to_pencil(d) + (1/m)·E_11.
SymmetricPencil rank_augment_sequence(const StructureDescriptor& d, int m);

/// P·K_a·Pᵀ for random P and eigenvalues; compares the extracted bundle with K_a's.
ExperimentReport genericity_trial(const GenericComponent& c, int trials, const SeededSampler& sampler,
                                  const ExtractOptions& opts = {});

/// Tangent-rank codimension of random K_a samples against (n−a)(n−r+1).
ExperimentReport codimension_trial(const GenericComponent& c, int trials, const SeededSampler& sampler,
                                   const RankOptions& opts = {});

/// Random orbit-level descriptor with size in [1, max_n]. Eigenvalues come
/// from a small pool so repeated eigenvalues and Jordan chains occur.
StructureDescriptor random_orbit_descriptor(int max_n, std::mt19937_64& rng);

/// Staircase extraction against block-Toeplitz counts on congruent copies of
/// random structures.
ExperimentReport oracle_agreement_trial(int trials, int max_n, const SeededSampler& sampler,
                                        const ExtractOptions& opts = {});

}  // namespace sympencil
