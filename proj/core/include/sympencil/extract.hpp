#pragma once

#include <optional>
#include <vector>

#include "sympencil/canonical.hpp"
#include "sympencil/partition.hpp"
#include "sympencil/pencil.hpp"
#include "sympencil/rank.hpp"

namespace sympencil {

struct ExtractOptions {
    RankOptions rank;
    /// Eigenvalues closer than cluster_tol·max(1,|μ|) start in the same cluster.
    double cluster_tol = 1e-6;
};

/// Jordan block sizes (decreasing) found at one finite eigenvalue.
struct EigenvalueCluster {
    Complex value;
    std::vector<int> sizes;
};

/// Complete eigenstructure of a general (possibly rectangular) pencil.
struct Eigenstructure {
    std::vector<int> right_indices;   // decreasing
    std::vector<int> left_indices;    // decreasing
    std::vector<int> infinite_sizes;  // decreasing
    std::vector<EigenvalueCluster> finite;

    /// Pairs equal left/right index lists into MinimalPair blocks.
    /// Throws StructureError when the lists differ.
    StructureDescriptor to_descriptor() const;
};

/// Normal rank from the largest numerical rank of λ0·A+B over three fixed
/// pseudo-random points of the unit disc and ∞.
std::size_t normal_rank(const Pencil& p, const RankOptions& opts = {});

/// Staircase deflation: right minimal indices and infinite structure first,
/// then left minimal indices on the transposed remainder, then eigenvalues of
/// the regular core with Jordan structure from shifted staircases.
Eigenstructure extract_eigenstructure(const Pencil& p, const ExtractOptions& opts = {});

/// Square pencils with paired minimal indices only.
StructureDescriptor extract_structure(const Pencil& p, const ExtractOptions& opts = {});

/// Weyr counts from kernel dimensions of block-Toeplitz expansions; no deflation.
///
/// Without mu: ε of the right minimal indices, using polynomial kernels of
/// degree ≤ k for k ≤ kmax (kmax must reach the largest index).
/// With mu: δ^μ from truncated power-series kernels of the shifted pencil.
IntegerPartition toeplitz_rank_counts(const Pencil& p, std::optional<SpectralPoint> mu, int kmax,
                                      const RankOptions& opts = {});

/// The block anti-diagonal rearrangement of a canonical form.
///
/// middle = [0 0 L; 0 J 0; Lᵀ 0 0] with row blocks of sizes (c, ρ, c+p), where L
/// collects the L_d halves of the MinimalPair blocks and J the Jordan blocks.
/// descriptor_to_pencil(d) == Πᵀ·middle·Π for the returned permutation Π.
struct SplitForm {
    SymmetricPencil middle;
    ComplexMatrix permutation;
    int c = 0;    // Σ d
    int rho = 0;  // regular size
    int p = 0;    // number of minimal pairs
};

SplitForm split_canonical_form(const StructureDescriptor& d);

/// s == wᵀ·split_canonical_form(structure).middle·w.
struct CongruenceWitness {
    StructureDescriptor structure;
    ComplexMatrix w;
};

/// S = Qᵀ·[A B R; Bᵀ S_reg 0; Rᵀ 0 0]·Q with Q unitary.
struct AntiTriangularForm {
    ComplexMatrix q;
    Pencil leading;     // A, c×c, symmetric
    Pencil coupling;    // B, c×ρ
    SymmetricPencil regular;  // S_reg, ρ×ρ
    Pencil right;       // S_right, c×(c+p)
    int c = 0;
    int rho = 0;
    int p = 0;

    /// The middle pencil with its zero blocks exactly zero.
    Pencil assembled() const;
    /// Qᵀ·assembled()·Q.
    Pencil reconstruct() const;
};

/// Throws InvalidWitness when ‖wᵀKw − s‖ > witness_tol·‖s‖.
AntiTriangularForm anti_triangular(const SymmetricPencil& s, const CongruenceWitness& witness,
                                   double witness_tol = 1e-8);

}  // namespace sympencil
