#include "sympencil/geometry.hpp"

#include "sympencil/errors.hpp"

namespace sympencil {

ComplexMatrix tangent_map_matrix(const SymmetricPencil& s) {
    const Eigen::Index n = s.size();
    const Eigen::Index half = n * (n + 1) / 2;
    ComplexMatrix t = ComplexMatrix::Zero(2 * half, n * n);
    // For X = E_kl: (XᵀM + MX)_ij = δ_il·M_kj + M_ik·δ_jl.
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const Eigen::Index col = l * n + k;
            Eigen::Index row = 0;
            for (Eigen::Index i = 0; i < n; ++i) {
                for (Eigen::Index j = i; j < n; ++j, ++row) {
                    Complex va{};
                    Complex vb{};
                    if (i == l) {
                        va += s.a()(k, j);
                        vb += s.b()(k, j);
                    }
                    if (j == l) {
                        va += s.a()(i, k);
                        vb += s.b()(i, k);
                    }
                    t(row, col) = va;
                    t(half + row, col) = vb;
                }
            }
        }
    }
    return t;
}

int codim_orbit_numeric(const SymmetricPencil& s, const RankOptions& opts) {
    const Eigen::Index n = s.size();
    if (n == 0) {
        return 0;
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(tangent_map_matrix(s));
    const Eigen::VectorXd& sv = svd.singularValues();
    const RankDecision d = decide_rank(sv, opts.tol * sv(0), opts.gap);
    if (d.ambiguous) {
        throw IndeterminateStructure("indeterminate tangent-map rank", d.retained, d.discarded);
    }
    return static_cast<int>(n * (n + 1) - static_cast<Eigen::Index>(d.rank));
}

int codim_bundle_numeric(const SymmetricPencil& s, const ExtractOptions& opts) {
    const int orbit = codim_orbit_numeric(s, opts.rank);
    return orbit - extract_structure(s, opts).distinct_eigenvalue_count();
}

int codim_orbit_generic(const GenericComponent& c) {
    return (c.n() - c.a()) * (c.n() - c.r() + 1);
}

int codim_bundle_generic(const GenericComponent& c) {
    return (c.n() + 1) * (c.n() - c.r()) - c.a() * (c.n() - c.r() - 1);
}

}  // namespace sympencil
