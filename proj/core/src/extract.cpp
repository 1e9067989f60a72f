#include "sympencil/extract.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "sympencil/errors.hpp"

namespace sympencil {

namespace {

using Index = Eigen::Index;

struct StaircaseStep {
    Index nullity;
    Index rank;
};

struct Staircase {
    std::vector<StaircaseStep> steps;
    ComplexMatrix e;
    ComplexMatrix f;

    // Step i (1-based) exposes m_i − ρ_i minimal indices equal to i−1.
    std::vector<int> minimal_indices() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            for (Index k = 0; k < steps[i].nullity - steps[i].rank; ++k) {
                out.push_back(static_cast<int>(i));
            }
        }
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    // ρ_i − m_{i+1} Jordan blocks of size i at zero.
    std::vector<int> jordan_sizes() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const Index next = i + 1 < steps.size() ? steps[i + 1].nullity : 0;
            for (Index k = 0; k < steps[i].rank - next; ++k) {
                out.push_back(static_cast<int>(i + 1));
            }
        }
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }
};

[[noreturn]] void throw_indeterminate(const char* where, const RankDecision& d) {
    std::ostringstream msg;
    msg << "indeterminate structure (" << where << "): retained singular value " << d.retained
        << " vs discarded " << d.discarded << " at threshold " << d.threshold;
    throw IndeterminateStructure(msg.str(), d.retained, d.discarded);
}

RankDecision checked_decision(const Eigen::VectorXd& sv, double threshold, double gap,
                              const char* where) {
    const RankDecision d = decide_rank(sv, threshold, gap);
    if (d.ambiguous) {
        throw_indeterminate(where, d);
    }
    return d;
}

// Deflates the structure of λE + F at λ = 0: right minimal indices and the
// Jordan blocks at zero. Unitary equivalence keeps the remainder in (e, f).
Staircase run_staircase(ComplexMatrix e, ComplexMatrix f, double threshold, double gap) {
    Staircase st;
    while (f.cols() > 0) {
        const Index p = f.rows();
        const Index q = f.cols();
        if (p == 0) {
            st.steps.push_back({q, 0});
            e.resize(0, 0);
            f.resize(0, 0);
            break;
        }
        Eigen::JacobiSVD<ComplexMatrix> svd_f(f, Eigen::ComputeFullV);
        const Index k = static_cast<Index>(
            checked_decision(svd_f.singularValues(), threshold, gap, "staircase column compression").rank);
        const Index m = q - k;
        if (m == 0) {
            break;
        }
        ComplexMatrix v(q, q);
        v.leftCols(m) = svd_f.matrixV().rightCols(m);
        v.rightCols(k) = svd_f.matrixV().leftCols(k);

        const ComplexMatrix e1 = e * v.leftCols(m);
        Eigen::JacobiSVD<ComplexMatrix> svd_e(e1, Eigen::ComputeFullU);
        const Index rho = static_cast<Index>(
            checked_decision(svd_e.singularValues(), threshold, gap, "staircase row compression").rank);
        const ComplexMatrix uh = svd_e.matrixU().adjoint();

        const ComplexMatrix et = uh * e * v;
        const ComplexMatrix ft = uh * f * v;
        st.steps.push_back({m, rho});
        e = et.bottomRightCorner(p - rho, q - m);
        f = ft.bottomRightCorner(p - rho, q - m);
    }
    for (std::size_t i = 0; i + 1 < st.steps.size(); ++i) {
        if (st.steps[i].rank < st.steps[i + 1].nullity) {
            throw IndeterminateStructure("staircase produced an inconsistent rank sequence", 0.0, 0.0);
        }
    }
    st.e = std::move(e);
    st.f = std::move(f);
    return st;
}

std::vector<Complex> core_eigenvalues(const ComplexMatrix& a, const ComplexMatrix& b, double threshold,
                                      double gap) {
    if (a.rows() == 0) {
        return {};
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(a);
    const RankDecision d = checked_decision(svd.singularValues(), threshold, gap, "regular core");
    if (d.rank < static_cast<std::size_t>(a.rows())) {
        throw IndeterminateStructure("regular core retains an infinite eigenvalue", d.retained, d.discarded);
    }
    const ComplexMatrix m = -a.partialPivLu().solve(b);
    Eigen::ComplexEigenSolver<ComplexMatrix> ces(m, false);
    std::vector<Complex> out(ces.eigenvalues().data(), ces.eigenvalues().data() + ces.eigenvalues().size());
    std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
        return std::make_pair(x.real(), x.imag()) < std::make_pair(y.real(), y.imag());
    });
    return out;
}

Complex mean_of(const std::vector<Complex>& values, const std::vector<std::size_t>& members) {
    Complex sum{};
    for (auto i : members) {
        sum += values[i];
    }
    return sum / static_cast<double>(members.size());
}

// Groups eigenvalues of the regular core λa + b. Starting from each unassigned
// eigenvalue, the k nearest unassigned ones form a candidate cluster; the
// largest k whose mean has shifted-staircase algebraic multiplicity exactly k
// wins. Eigenvalues within cluster_tol of the seed are always included.
std::vector<EigenvalueCluster> cluster_eigenvalues(const ComplexMatrix& a, const ComplexMatrix& b,
                                                   const std::vector<Complex>& eigs, double base_scale,
                                                   const ExtractOptions& opts) {
    const std::size_t count = eigs.size();
    std::vector<bool> assigned(count, false);
    std::vector<EigenvalueCluster> clusters;
    const double a_norm = a.norm();
    const double b_norm = b.norm();

    for (std::size_t seed = 0; seed < count; ++seed) {
        if (assigned[seed]) {
            continue;
        }
        std::vector<std::size_t> pool;
        for (std::size_t j = 0; j < count; ++j) {
            if (!assigned[j]) {
                pool.push_back(j);
            }
        }
        const Complex origin = eigs[seed];
        std::stable_sort(pool.begin(), pool.end(), [&](std::size_t x, std::size_t y) {
            return std::abs(eigs[x] - origin) < std::abs(eigs[y] - origin);
        });
        const double radius = opts.cluster_tol * std::max(1.0, std::abs(origin));
        const auto forced = static_cast<std::size_t>(std::count_if(
            pool.begin(), pool.end(), [&](std::size_t j) { return std::abs(eigs[j] - origin) <= radius; }));

        std::size_t best = 0;
        std::vector<int> best_sizes;
        Complex best_center{};
        std::vector<std::size_t> members;
        for (std::size_t k = 1; k <= pool.size(); ++k) {
            members.push_back(pool[k - 1]);
            if (k < forced) {
                continue;
            }
            const Complex center = mean_of(eigs, members);
            const double threshold = opts.rank.tol * std::max(base_scale, b_norm + std::abs(center) * a_norm);
            const Staircase st = run_staircase(a, b + center * a, threshold, opts.rank.gap);
            if (!st.minimal_indices().empty()) {
                throw IndeterminateStructure("regular core shows minimal indices under a shift", 0.0, 0.0);
            }
            std::vector<int> sizes = st.jordan_sizes();
            if (static_cast<std::size_t>(std::accumulate(sizes.begin(), sizes.end(), 0)) == k) {
                best = k;
                best_sizes = std::move(sizes);
                best_center = center;
            }
        }
        if (best == 0) {
            std::ostringstream msg;
            msg << "indeterminate structure: eigenvalue cluster near " << origin
                << " has no consistent algebraic multiplicity";
            throw IndeterminateStructure(msg.str(), 0.0, 0.0);
        }
        for (std::size_t k = 0; k < best; ++k) {
            assigned[pool[k]] = true;
        }
        clusters.push_back({best_center, best_sizes});
    }
    return clusters;
}

}  // namespace

StructureDescriptor Eigenstructure::to_descriptor() const {
    if (right_indices != left_indices) {
        throw StructureError("left and right minimal indices differ; no MinimalPair pairing exists");
    }
    std::vector<CanonicalBlock> blocks;
    for (int d : right_indices) {
        blocks.emplace_back(MinimalPair{d});
    }
    for (const auto& c : finite) {
        for (int size : c.sizes) {
            blocks.emplace_back(JordanFinite{size, c.value});
        }
    }
    for (int k : infinite_sizes) {
        blocks.emplace_back(JordanInfinite{k});
    }
    return StructureDescriptor(std::move(blocks)).sorted();
}

std::size_t normal_rank(const Pencil& p, const RankOptions& opts) {
    if (p.rows() == 0 || p.cols() == 0) {
        return 0;
    }
    std::mt19937_64 rng(0x5eed'0f'5a'11ULL);
    std::vector<SpectralPoint> points;
    for (int i = 0; i < 3; ++i) {
        points.emplace_back(sample_unit_disc(rng));
    }
    points.push_back(SpectralPoint::infinity());

    std::vector<RankDecision> decisions;
    for (const auto& at : points) {
        const double scale = at.is_infinite()
                                 ? p.a().norm()
                                 : std::sqrt(std::norm(at.value()) * p.a().squaredNorm() + p.b().squaredNorm());
        decisions.push_back(rank_decision(evaluate(p, at), scale, opts));
    }
    std::size_t best = 0;
    bool any_clean = false;
    for (const auto& d : decisions) {
        if (!d.ambiguous) {
            best = std::max(best, d.rank);
            any_clean = true;
        }
    }
    for (const auto& d : decisions) {
        if (d.ambiguous && (!any_clean || d.rank >= best)) {
            throw_indeterminate("normal rank", d);
        }
    }
    return best;
}

Eigenstructure extract_eigenstructure(const Pencil& p, const ExtractOptions& opts) {
    const double scale = p.norm();
    const double threshold = opts.rank.tol * scale;
    Eigenstructure out;

    // Zeros of the reversal λB + A are the infinite eigenvalues of λA + B.
    const Staircase first = run_staircase(p.b(), p.a(), threshold, opts.rank.gap);
    out.right_indices = first.minimal_indices();
    out.infinite_sizes = first.jordan_sizes();

    const Staircase second = run_staircase(first.e.transpose(), first.f.transpose(), threshold, opts.rank.gap);
    out.left_indices = second.minimal_indices();
    if (!second.jordan_sizes().empty()) {
        throw IndeterminateStructure("infinite structure survived the first deflation", 0.0, 0.0);
    }
    if (second.e.rows() != second.e.cols()) {
        throw IndeterminateStructure("deflated core is not square", 0.0, 0.0);
    }

    // The core in λ·core_a + core_b orientation (transposed, same spectrum).
    const ComplexMatrix& core_a = second.f;
    const ComplexMatrix& core_b = second.e;
    const auto eigs = core_eigenvalues(core_a, core_b, threshold, opts.rank.gap);
    out.finite = cluster_eigenvalues(core_a, core_b, eigs, scale, opts);
    std::sort(out.finite.begin(), out.finite.end(), [](const EigenvalueCluster& x, const EigenvalueCluster& y) {
        return std::make_pair(x.value.real(), x.value.imag()) < std::make_pair(y.value.real(), y.value.imag());
    });

    auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    long long realized = sum(out.right_indices) + sum(out.left_indices) +
                         static_cast<long long>(out.left_indices.size()) + sum(out.infinite_sizes);
    long long columns = sum(out.right_indices) + sum(out.left_indices) +
                        static_cast<long long>(out.right_indices.size()) + sum(out.infinite_sizes);
    for (const auto& c : out.finite) {
        realized += sum(c.sizes);
        columns += sum(c.sizes);
    }
    if (realized != p.rows() || columns != p.cols()) {
        throw StructureError("extracted structure does not account for the pencil size");
    }
    return out;
}

StructureDescriptor extract_structure(const Pencil& p, const ExtractOptions& opts) {
    if (!p.is_square()) {
        throw DimensionError("extract_structure needs a square pencil");
    }
    const Eigenstructure es = extract_eigenstructure(p, opts);
    if (es.right_indices != es.left_indices) {
        if (p.is_symmetric(opts.rank.tol)) {
            throw StructureError("symmetric pencil produced unequal left and right minimal indices");
        }
        throw StructureError("left and right minimal indices differ; not a paired structure");
    }
    return es.to_descriptor();
}

IntegerPartition toeplitz_rank_counts(const Pencil& p, std::optional<SpectralPoint> mu, int kmax,
                                      const RankOptions& opts) {
    if (kmax < 1) {
        throw PreconditionError("toeplitz_rank_counts: kmax must be ≥ 1");
    }
    const Index m = p.rows();
    const Index n = p.cols();
    const double base = p.norm();

    auto nullity = [&](const ComplexMatrix& t, int blocks) {
        if (t.cols() == 0) {
            return Index{0};
        }
        const double scale = base * std::sqrt(static_cast<double>(blocks));
        return t.cols() - static_cast<Index>(numerical_rank(t, scale, opts));
    };

    // Right minimal indices: kernels of P(λ)x(λ) = 0 with deg x ≤ k.
    auto minimal_counts = [&](int kk) {
        std::vector<Index> at_most;  // #{d ≤ k}
        Index previous = 0;
        for (int k = 0; k <= kk; ++k) {
            ComplexMatrix t = ComplexMatrix::Zero((k + 2) * m, (k + 1) * n);
            for (int j = 0; j <= k; ++j) {
                t.block(j * m, j * n, m, n) = p.b();
                t.block((j + 1) * m, j * n, m, n) = p.a();
            }
            const Index current = nullity(t, k + 1);
            at_most.push_back(current - previous);
            previous = current;
        }
        for (std::size_t i = 1; i < at_most.size(); ++i) {
            if (at_most[i] < at_most[i - 1]) {
                throw IndeterminateStructure("block-Toeplitz kernel dimensions are inconsistent", 0.0, 0.0);
            }
        }
        return at_most;
    };

    if (!mu) {
        const auto at_most = minimal_counts(kmax);
        const Index total = at_most.back();
        std::vector<int> parts{static_cast<int>(total)};
        for (int k = 1; k <= kmax; ++k) {
            parts.push_back(static_cast<int>(total - at_most[static_cast<std::size_t>(k - 1)]));
        }
        return IntegerPartition(std::move(parts));
    }

    const auto at_most = minimal_counts(static_cast<int>(std::max<Index>(n, 1)));
    const Index right_count = at_most.back();

    ComplexMatrix lead = p.a();
    ComplexMatrix shifted = p.b();
    if (mu->is_infinite()) {
        std::swap(lead, shifted);
    } else {
        shifted += mu->value() * p.a();
    }
    std::vector<int> parts;
    Index previous = 0;
    for (int k = 1; k <= kmax; ++k) {
        ComplexMatrix t = ComplexMatrix::Zero(k * m, k * n);
        for (int j = 0; j < k; ++j) {
            t.block(j * m, j * n, m, n) = shifted;
            if (j > 0) {
                t.block(j * m, (j - 1) * n, m, n) = lead;
            }
        }
        const Index current = nullity(t, k);
        const Index h = current - previous - right_count;
        if (h < 0 || (!parts.empty() && h > parts.back())) {
            throw IndeterminateStructure("truncated power-series kernel dimensions are inconsistent", 0.0, 0.0);
        }
        previous = current;
        if (h == 0) {
            break;
        }
        parts.push_back(static_cast<int>(h));
    }
    return IntegerPartition(std::move(parts));
}

SplitForm split_canonical_form(const StructureDescriptor& d) {
    const StructureDescriptor sorted = d.sorted();
    const int n = sorted.size();
    SplitForm out;
    std::vector<int> degrees;
    std::vector<CanonicalBlock> jordan;
    for (const auto& b : sorted.blocks()) {
        if (const auto* mp = std::get_if<MinimalPair>(&b)) {
            degrees.push_back(mp->d);
        } else {
            jordan.push_back(b);
        }
    }
    out.p = static_cast<int>(degrees.size());
    out.c = std::accumulate(degrees.begin(), degrees.end(), 0);
    out.rho = n - 2 * out.c - out.p;

    // Canonical positions of each M_d: columns of L at local 0..d, rows of L at d+1..2d.
    std::vector<int> block_start;
    int offset = 0;
    for (int deg : degrees) {
        block_start.push_back(offset);
        offset += 2 * deg + 1;
    }
    const int jordan_start = offset;

    // perm[k] = canonical index placed at split position k.
    std::vector<int> perm(static_cast<std::size_t>(n));
    const int t = out.p;
    // Row blocks of L top to bottom: d_t, ..., d_1.
    int row = 0;
    for (int i = t - 1; i >= 0; --i) {
        for (int r = 0; r < degrees[static_cast<std::size_t>(i)]; ++r) {
            perm[static_cast<std::size_t>(row++)] = block_start[static_cast<std::size_t>(i)] + degrees[static_cast<std::size_t>(i)] + 1 + r;
        }
    }
    for (int j = 0; j < out.rho; ++j) {
        perm[static_cast<std::size_t>(out.c + j)] = jordan_start + j;
    }
    // Column blocks of L left to right: d_1, ..., d_t.
    int col = out.c + out.rho;
    for (int i = 0; i < t; ++i) {
        for (int r = 0; r <= degrees[static_cast<std::size_t>(i)]; ++r) {
            perm[static_cast<std::size_t>(col++)] = block_start[static_cast<std::size_t>(i)] + r;
        }
    }

    out.permutation = ComplexMatrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        out.permutation(k, perm[static_cast<std::size_t>(k)]) = 1.0;
    }
    const SymmetricPencil canonical = descriptor_to_pencil(sorted);
    const ComplexMatrix& pi = out.permutation;
    out.middle = SymmetricPencil(Pencil(pi * canonical.a() * pi.transpose(), pi * canonical.b() * pi.transpose()));
    return out;
}

Pencil AntiTriangularForm::assembled() const {
    const int n = 2 * c + p + rho;
    ComplexMatrix za = ComplexMatrix::Zero(n, n);
    ComplexMatrix zb = ComplexMatrix::Zero(n, n);
    const int last = c + rho;
    za.topLeftCorner(c, c) = leading.a();
    zb.topLeftCorner(c, c) = leading.b();
    za.block(0, c, c, rho) = coupling.a();
    zb.block(0, c, c, rho) = coupling.b();
    za.block(c, 0, rho, c) = coupling.a().transpose();
    zb.block(c, 0, rho, c) = coupling.b().transpose();
    za.block(c, c, rho, rho) = regular.a();
    zb.block(c, c, rho, rho) = regular.b();
    za.block(0, last, c, c + p) = right.a();
    zb.block(0, last, c, c + p) = right.b();
    za.block(last, 0, c + p, c) = right.a().transpose();
    zb.block(last, 0, c + p, c) = right.b().transpose();
    return Pencil(std::move(za), std::move(zb));
}

Pencil AntiTriangularForm::reconstruct() const {
    const ComplexMatrix qt = q.transpose();
    return multiply(qt, assembled(), q);
}

AntiTriangularForm anti_triangular(const SymmetricPencil& s, const CongruenceWitness& witness, double witness_tol) {
    const SplitForm split = split_canonical_form(witness.structure);
    const Index n = s.size();
    if (split.middle.size() != n || witness.w.rows() != n || witness.w.cols() != n) {
        throw InvalidWitness("witness dimensions do not match the pencil", std::numeric_limits<double>::infinity());
    }
    const ComplexMatrix wt = witness.w.transpose();
    const Pencil image = multiply(wt, split.middle, witness.w);
    const double residual = (image - s.pencil()).norm();
    if (residual > witness_tol * std::max(s.norm(), 1.0)) {
        throw InvalidWitness("witness does not reproduce the pencil", residual);
    }

    // Wᵀ = Qᵀ·R with Qᵀ unitary and R upper triangular.
    Eigen::HouseholderQR<ComplexMatrix> qr(wt);
    const ComplexMatrix q_t = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    const ComplexMatrix rt = r.transpose();
    const ComplexMatrix za = r * split.middle.a() * rt;
    const ComplexMatrix zb = r * split.middle.b() * rt;

    AntiTriangularForm out;
    out.q = q_t.transpose();
    out.c = split.c;
    out.rho = split.rho;
    out.p = split.p;
    const int c = split.c;
    const int rho = split.rho;
    const int last = c + rho;
    auto sym = [](const ComplexMatrix& x) -> ComplexMatrix { return (x + x.transpose()) * 0.5; };
    out.leading = Pencil(sym(za.topLeftCorner(c, c)), sym(zb.topLeftCorner(c, c)));
    out.coupling = Pencil(za.block(0, c, c, rho), zb.block(0, c, c, rho));
    out.regular = SymmetricPencil(Pencil(sym(za.block(c, c, rho, rho)), sym(zb.block(c, c, rho, rho))));
    out.right = Pencil(za.block(0, last, c, c + split.p), zb.block(0, last, c, c + split.p));
    return out;
}

}  // namespace sympencil
