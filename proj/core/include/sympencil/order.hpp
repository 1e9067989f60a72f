#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sympencil/canonical.hpp"
#include "sympencil/partition.hpp"

namespace sympencil {

/// η ⪯ ν: every prefix sum of η is ≤ the matching prefix sum of ν (zero padded).
bool dominated_by(const IntegerPartition& eta, const IntegerPartition& nu);

/// (n_1+a, ..., n_L+a) over the declared length L ≥ η.length().
/// The length may only be omitted when a == 0.
IntegerPartition partition_add(const IntegerPartition& eta, int a, std::optional<std::size_t> length);

/// dim{ x(λ) : P(λ)x(λ) = 0, deg x ≤ k } for k = 0..kmax, from ε alone.
std::vector<int> polynomial_kernel_dimensions(const IntegerPartition& epsilon, int kmax);

enum class ObstructionKind { MinimalIndexMajorization, SimpleEigenvalueMultiplicity, None };

std::string to_string(ObstructionKind kind);

/// Why bun(K_{a'}) cannot lie in the closure of bun(K_a).
struct Obstruction {
    ObstructionKind kind = ObstructionKind::None;
    int container_a = 0;  // a
    int candidate_a = 0;  // a'
    /// Majorization evidence: ε of K_{a'} and of K_a, with ε_{K_a'} ⋠ ε_{K_a}.
    IntegerPartition candidate_weyr;
    IntegerPartition container_weyr;
    /// Eigenvalue evidence: K_{a'} needs r−2a' simple eigenvalues, limits of
    /// bun(K_a) carry at most r−2a.
    int demanded_simple = 0;
    int available_simple = 0;
};

/// Requires equal (n, r) and a ≠ a'.
Obstruction closure_obstruction(const GenericComponent& container, const GenericComponent& candidate);

/// Row a, column a' holds closure_obstruction(K_a, K_{a'}); the diagonal is None.
std::vector<std::vector<Obstruction>> obstruction_table(int n, int r);

/// Components a for which the implemented necessary conditions for
/// bun(d) ⊆ closure(bun(K_a)) hold. Necessary only, not sufficient:
///  - rank(d) ≤ r;
///  - polynomial kernel dimensions of d dominate those of K_a (upper
///    semicontinuity; equals ε_d ⪯ ε_{K_a} when the ranks agree);
///  - when rank(d) == r, d has at most r−2a simple eigenvalues.
std::vector<GenericComponent> candidate_components(const StructureDescriptor& d, int n, int r);

}  // namespace sympencil
