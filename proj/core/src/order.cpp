#include "sympencil/order.hpp"

#include <algorithm>

#include "sympencil/errors.hpp"

namespace sympencil {

bool dominated_by(const IntegerPartition& eta, const IntegerPartition& nu) {
    const std::size_t len = std::max(eta.length(), nu.length());
    long long lhs = 0;
    long long rhs = 0;
    for (std::size_t i = 0; i < len; ++i) {
        lhs += eta[i];
        rhs += nu[i];
        if (lhs > rhs) {
            return false;
        }
    }
    return true;
}

IntegerPartition partition_add(const IntegerPartition& eta, int a, std::optional<std::size_t> length) {
    if (a < 0) {
        throw PreconditionError("partition_add: a must be ≥ 0");
    }
    if (!length) {
        if (a > 0) {
            throw PreconditionError("partition_add: a length is required when a > 0");
        }
        return eta;
    }
    if (*length < eta.length()) {
        throw PreconditionError("partition_add: declared length is shorter than the partition");
    }
    std::vector<int> parts(*length);
    for (std::size_t i = 0; i < *length; ++i) {
        parts[i] = eta[i] + a;
    }
    return IntegerPartition(std::move(parts));
}

std::vector<int> polynomial_kernel_dimensions(const IntegerPartition& epsilon, int kmax) {
    // #{d ≤ j} = r_0 − r_{j+1}; the kernel of degree ≤ k has dimension Σ_{j≤k} #{d ≤ j}.
    std::vector<int> out;
    int running = 0;
    for (int k = 0; k <= kmax; ++k) {
        running += epsilon[0] - epsilon[static_cast<std::size_t>(k) + 1];
        out.push_back(running);
    }
    return out;
}

std::string to_string(ObstructionKind kind) {
    switch (kind) {
        case ObstructionKind::MinimalIndexMajorization:
            return "minimal-index-majorization";
        case ObstructionKind::SimpleEigenvalueMultiplicity:
            return "simple-eigenvalue-multiplicity";
        case ObstructionKind::None:
            break;
    }
    return "none";
}

Obstruction closure_obstruction(const GenericComponent& container, const GenericComponent& candidate) {
    if (container.n() != candidate.n() || container.r() != candidate.r()) {
        throw PreconditionError("closure_obstruction: components must share (n, r)");
    }
    if (container.a() == candidate.a()) {
        throw PreconditionError("closure_obstruction: a and a' must differ");
    }
    Obstruction ob;
    ob.container_a = container.a();
    ob.candidate_a = candidate.a();
    if (candidate.a() > container.a()) {
        ob.candidate_weyr = weyr_minimal(generic_bundle(candidate));
        ob.container_weyr = weyr_minimal(generic_bundle(container));
        if (!dominated_by(ob.candidate_weyr, ob.container_weyr)) {
            ob.kind = ObstructionKind::MinimalIndexMajorization;
        }
    } else {
        ob.demanded_simple = candidate.eigenvalue_count();
        ob.available_simple = container.eigenvalue_count();
        if (ob.demanded_simple > ob.available_simple) {
            ob.kind = ObstructionKind::SimpleEigenvalueMultiplicity;
        }
    }
    return ob;
}

std::vector<std::vector<Obstruction>> obstruction_table(int n, int r) {
    const auto comps = generic_components(n, r);
    std::vector<std::vector<Obstruction>> table(comps.size(), std::vector<Obstruction>(comps.size()));
    for (std::size_t i = 0; i < comps.size(); ++i) {
        for (std::size_t j = 0; j < comps.size(); ++j) {
            if (i == j) {
                table[i][j].container_a = table[i][j].candidate_a = comps[i].a();
                continue;
            }
            table[i][j] = closure_obstruction(comps[i], comps[j]);
        }
    }
    return table;
}

std::vector<GenericComponent> candidate_components(const StructureDescriptor& d, int n, int r) {
    if (d.size() != n) {
        throw PreconditionError("candidate_components: descriptor size differs from n");
    }
    std::vector<GenericComponent> out;
    const int rank = d.normal_rank();
    if (rank > r) {
        return out;
    }
    const IntegerPartition eps = weyr_minimal(d);
    const auto kernel = polynomial_kernel_dimensions(eps, n);
    int simple = 0;
    for (const auto& g : d.eigen_groups()) {
        if (g.sizes == std::vector<int>{1}) {
            ++simple;
        }
    }
    for (const auto& c : generic_components(n, r)) {
        const auto generic_kernel = polynomial_kernel_dimensions(weyr_minimal(generic_bundle(c)), n);
        bool ok = true;
        for (std::size_t k = 0; k < kernel.size() && ok; ++k) {
            ok = kernel[k] >= generic_kernel[k];
        }
        if (ok && rank == r) {
            ok = simple <= c.eigenvalue_count();
        }
        if (ok) {
            out.push_back(c);
        }
    }
    return out;
}

}  // namespace sympencil
