#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sympencil/partition.hpp"
#include "sympencil/pencil.hpp"

namespace sympencil {

/// M_d: the (2d+1)×(2d+1) block pairing a right and a left minimal index d.
struct MinimalPair {
    int d = 0;
    friend bool operator==(const MinimalPair&, const MinimalPair&) = default;
};

/// J^s_ℓ(μ): symmetric Jordan-like block of size ℓ at a finite eigenvalue.
struct JordanFinite {
    int size = 1;
    Complex mu{};
    friend bool operator==(const JordanFinite&, const JordanFinite&) = default;
};

/// J^s_k(∞): symmetric Jordan-like block of size k at the infinite eigenvalue.
struct JordanInfinite {
    int size = 1;
    friend bool operator==(const JordanInfinite&, const JordanInfinite&) = default;
};

using CanonicalBlock = std::variant<MinimalPair, JordanFinite, JordanInfinite>;

/// Number of rows (= columns) of the realized block.
int block_dimension(const CanonicalBlock& b);
/// "M_1", "J_2(0.5+1i)", "J_1(inf)".
std::string block_name(const CanonicalBlock& b);

enum class DescriptorLevel { Orbit, Bundle };

/// Jordan sizes (decreasing) attached to one eigenvalue.
struct EigenGroup {
    SpectralPoint point;
    std::vector<int> sizes;
};

/// Multiset of canonical blocks describing a complete eigenstructure.
///
/// At bundle level the eigenvalue values are placeholders: only the grouping
/// of Jordan sizes per eigenvalue is meaningful, and ∞ is an ordinary member of
/// that anonymous set.
class StructureDescriptor {
public:
    StructureDescriptor() = default;
    explicit StructureDescriptor(std::vector<CanonicalBlock> blocks,
                                 DescriptorLevel level = DescriptorLevel::Orbit);

    const std::vector<CanonicalBlock>& blocks() const noexcept { return blocks_; }
    DescriptorLevel level() const noexcept { return level_; }

    /// Realized size n = Σ(2d+1) + Σℓ + Σk.
    int size() const;
    /// n − #MinimalPair.
    int normal_rank() const;
    /// Degrees d of the MinimalPair blocks, decreasing.
    std::vector<int> minimal_indices() const;
    /// Finite groups in lexicographic eigenvalue order, then the ∞ group if any.
    std::vector<EigenGroup> eigen_groups() const;
    /// Number of distinct eigenvalues in C ∪ {∞}.
    int distinct_eigenvalue_count() const;

    StructureDescriptor as_bundle() const;
    /// Same blocks in the canonical realization order.
    StructureDescriptor sorted() const;

    std::string to_string() const;

    /// Exact equality after canonical sorting.
    friend bool operator==(const StructureDescriptor& x, const StructureDescriptor& y);

private:
    std::vector<CanonicalBlock> blocks_;
    DescriptorLevel level_ = DescriptorLevel::Orbit;
};

/// Equal minimal indices and Jordan structure with eigenvalues matched within
/// eig_tol·max(1,|μ|).
bool same_orbit(const StructureDescriptor& x, const StructureDescriptor& y, double eig_tol = 1e-6);
/// Equal minimal indices and equal multisets of per-eigenvalue partitions.
bool same_bundle(const StructureDescriptor& x, const StructureDescriptor& y);

/// Index triple (n, r, a) of one generic component, with a = (n−r)α + s.
class GenericComponent {
public:
    /// Requires n ≥ 2, 1 ≤ r ≤ n−1, 0 ≤ a ≤ ⌊r/2⌋.
    GenericComponent(int n, int r, int a);

    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    int a() const noexcept { return a_; }
    int alpha() const noexcept { return a_ / (n_ - r_); }
    int s() const noexcept { return a_ % (n_ - r_); }
    /// r − 2a, the number of simple eigenvalues.
    int eigenvalue_count() const noexcept { return r_ - 2 * a_; }

    friend bool operator==(const GenericComponent&, const GenericComponent&) = default;

private:
    int n_;
    int r_;
    int a_;
};

/// All ⌊r/2⌋+1 components for the given (n, r).
std::vector<GenericComponent> generic_components(int n, int r);

/// L_d(λ) = λG_d + F_d, size d×(d+1).
Pencil build_L(int d);

SymmetricPencil build_block(const CanonicalBlock& b);

/// Block-diagonal pencil.
SymmetricPencil direct_sum(std::span<const SymmetricPencil> blocks);

/// Descriptor of K_a with the given r−2a pairwise distinct eigenvalues.
StructureDescriptor generic_kcf(const GenericComponent& c, std::span<const Complex> eigenvalues);
/// Same, eigenvalues drawn uniformly from the unit disc.
StructureDescriptor generic_kcf(const GenericComponent& c, std::mt19937_64& rng);
/// Bundle-level descriptor of K_a, with placeholder eigenvalues 1, 2, ...
StructureDescriptor generic_bundle(const GenericComponent& c);

/// Direct sum of the blocks in canonical order: MinimalPair by decreasing d,
/// JordanFinite by (re, im) of μ then decreasing size, JordanInfinite by
/// decreasing size.
SymmetricPencil descriptor_to_pencil(const StructureDescriptor& d);

/// ε = (r_0, r_1, ...), r_k = #{MinimalPair with d ≥ k}.
IntegerPartition weyr_minimal(const StructureDescriptor& d);
/// δ^μ = (h_1, h_2, ...), h_k = #{Jordan blocks at μ with size ≥ k}.
IntegerPartition weyr_eigenvalue(const StructureDescriptor& d, SpectralPoint mu);

/// Uniform sample from the unit disc.
Complex sample_unit_disc(std::mt19937_64& rng);
/// count points from the unit disc, pairwise at distance ≥ min_gap.
std::vector<Complex> sample_distinct_points(int count, double min_gap, std::mt19937_64& rng);

}  // namespace sympencil
