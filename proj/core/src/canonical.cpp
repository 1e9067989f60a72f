#include "sympencil/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include "sympencil/errors.hpp"

namespace sympencil {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string format_complex(Complex z) {
    std::ostringstream out;
    out << z.real();
    if (z.imag() != 0.0) {
        out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
    }
    return out.str();
}

void validate_block(const CanonicalBlock& b) {
    std::visit(Overloaded{
                   [](const MinimalPair& m) {
                       if (m.d < 0) {
                           throw PreconditionError("MinimalPair degree must be ≥ 0");
                       }
                   },
                   [](const JordanFinite& j) {
                       if (j.size < 1) {
                           throw PreconditionError("Jordan block size must be ≥ 1");
                       }
                       if (!std::isfinite(j.mu.real()) || !std::isfinite(j.mu.imag())) {
                           throw PreconditionError("finite eigenvalue must be finite");
                       }
                   },
                   [](const JordanInfinite& j) {
                       if (j.size < 1) {
                           throw PreconditionError("Jordan block size must be ≥ 1");
                       }
                   },
               },
               b);
}

// Canonical realization order.
bool block_less(const CanonicalBlock& x, const CanonicalBlock& y) {
    if (x.index() != y.index()) {
        return x.index() < y.index();
    }
    if (const auto* mx = std::get_if<MinimalPair>(&x)) {
        return mx->d > std::get<MinimalPair>(y).d;
    }
    if (const auto* jx = std::get_if<JordanFinite>(&x)) {
        const auto& jy = std::get<JordanFinite>(y);
        return std::make_tuple(jx->mu.real(), jx->mu.imag(), -jx->size) <
               std::make_tuple(jy.mu.real(), jy.mu.imag(), -jy.size);
    }
    return std::get<JordanInfinite>(x).size > std::get<JordanInfinite>(y).size;
}

bool lex_less(Complex x, Complex y) {
    return std::make_pair(x.real(), x.imag()) < std::make_pair(y.real(), y.imag());
}

}  // namespace

int block_dimension(const CanonicalBlock& b) {
    return std::visit(Overloaded{
                          [](const MinimalPair& m) { return 2 * m.d + 1; },
                          [](const JordanFinite& j) { return j.size; },
                          [](const JordanInfinite& j) { return j.size; },
                      },
                      b);
}

std::string block_name(const CanonicalBlock& b) {
    return std::visit(Overloaded{
                          [](const MinimalPair& m) { return "M_" + std::to_string(m.d); },
                          [](const JordanFinite& j) {
                              return "J_" + std::to_string(j.size) + "(" + format_complex(j.mu) + ")";
                          },
                          [](const JordanInfinite& j) { return "J_" + std::to_string(j.size) + "(inf)"; },
                      },
                      b);
}

StructureDescriptor::StructureDescriptor(std::vector<CanonicalBlock> blocks, DescriptorLevel level)
    : blocks_(std::move(blocks)), level_(level) {
    for (const auto& b : blocks_) {
        validate_block(b);
    }
}

int StructureDescriptor::size() const {
    int n = 0;
    for (const auto& b : blocks_) {
        n += block_dimension(b);
    }
    return n;
}

int StructureDescriptor::normal_rank() const {
    return size() - static_cast<int>(minimal_indices().size());
}

std::vector<int> StructureDescriptor::minimal_indices() const {
    std::vector<int> out;
    for (const auto& b : blocks_) {
        if (const auto* m = std::get_if<MinimalPair>(&b)) {
            out.push_back(m->d);
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<EigenGroup> StructureDescriptor::eigen_groups() const {
    std::vector<EigenGroup> groups;
    EigenGroup infinite{SpectralPoint::infinity(), {}};
    for (const auto& b : blocks_) {
        if (const auto* j = std::get_if<JordanFinite>(&b)) {
            auto it = std::find_if(groups.begin(), groups.end(),
                                   [&](const EigenGroup& g) { return g.point.value() == j->mu; });
            if (it == groups.end()) {
                groups.push_back({SpectralPoint(j->mu), {j->size}});
            } else {
                it->sizes.push_back(j->size);
            }
        } else if (const auto* k = std::get_if<JordanInfinite>(&b)) {
            infinite.sizes.push_back(k->size);
        }
    }
    std::sort(groups.begin(), groups.end(), [](const EigenGroup& x, const EigenGroup& y) {
        return lex_less(x.point.value(), y.point.value());
    });
    if (!infinite.sizes.empty()) {
        groups.push_back(std::move(infinite));
    }
    for (auto& g : groups) {
        std::sort(g.sizes.begin(), g.sizes.end(), std::greater<>());
    }
    return groups;
}

int StructureDescriptor::distinct_eigenvalue_count() const {
    return static_cast<int>(eigen_groups().size());
}

StructureDescriptor StructureDescriptor::as_bundle() const {
    return StructureDescriptor(blocks_, DescriptorLevel::Bundle);
}

StructureDescriptor StructureDescriptor::sorted() const {
    auto blocks = blocks_;
    std::stable_sort(blocks.begin(), blocks.end(), block_less);
    return StructureDescriptor(std::move(blocks), level_);
}

std::string StructureDescriptor::to_string() const {
    const auto s = sorted();
    if (s.blocks_.empty()) {
        return "(empty)";
    }
    std::string out;
    for (std::size_t i = 0; i < s.blocks_.size(); ++i) {
        if (i > 0) {
            out += " ⊕ ";
        }
        const auto* j = std::get_if<JordanFinite>(&s.blocks_[i]);
        if (level_ == DescriptorLevel::Bundle && j != nullptr) {
            // Bundle members only keep which blocks share an eigenvalue.
            const auto groups = s.eigen_groups();
            const auto it = std::find_if(groups.begin(), groups.end(), [&](const EigenGroup& g) {
                return !g.point.is_infinite() && g.point.value() == j->mu;
            });
            out += "J_" + std::to_string(j->size) + "(μ" + std::to_string(it - groups.begin() + 1) + ")";
        } else {
            out += block_name(s.blocks_[i]);
        }
    }
    return out;
}

bool operator==(const StructureDescriptor& x, const StructureDescriptor& y) {
    return x.level_ == y.level_ && x.sorted().blocks_ == y.sorted().blocks_;
}

bool same_orbit(const StructureDescriptor& x, const StructureDescriptor& y, double eig_tol) {
    if (x.minimal_indices() != y.minimal_indices()) {
        return false;
    }
    auto gx = x.eigen_groups();
    auto gy = y.eigen_groups();
    if (gx.size() != gy.size()) {
        return false;
    }
    std::vector<bool> used(gy.size(), false);
    for (const auto& g : gx) {
        bool matched = false;
        for (std::size_t i = 0; i < gy.size() && !matched; ++i) {
            if (used[i] || g.point.is_infinite() != gy[i].point.is_infinite() || g.sizes != gy[i].sizes) {
                continue;
            }
            if (!g.point.is_infinite()) {
                const Complex a = g.point.value();
                const Complex b = gy[i].point.value();
                const double scale = std::max({1.0, std::abs(a), std::abs(b)});
                if (std::abs(a - b) > eig_tol * scale) {
                    continue;
                }
            }
            used[i] = true;
            matched = true;
        }
        if (!matched) {
            return false;
        }
    }
    return true;
}

bool same_bundle(const StructureDescriptor& x, const StructureDescriptor& y) {
    if (x.minimal_indices() != y.minimal_indices()) {
        return false;
    }
    auto signature = [](const StructureDescriptor& d) {
        std::vector<std::vector<int>> parts;
        for (const auto& g : d.eigen_groups()) {
            parts.push_back(g.sizes);
        }
        std::sort(parts.begin(), parts.end());
        return parts;
    };
    return signature(x) == signature(y);
}

GenericComponent::GenericComponent(int n, int r, int a) : n_(n), r_(r), a_(a) {
    if (n < 2 || r < 1 || r > n - 1) {
        throw PreconditionError("generic component requires n ≥ 2 and 1 ≤ r ≤ n−1");
    }
    if (a < 0 || a > r / 2) {
        throw PreconditionError("generic component requires 0 ≤ a ≤ ⌊r/2⌋");
    }
}

std::vector<GenericComponent> generic_components(int n, int r) {
    std::vector<GenericComponent> out;
    for (int a = 0; a <= r / 2; ++a) {
        out.emplace_back(n, r, a);
    }
    return out;
}

Pencil build_L(int d) {
    if (d < 0) {
        throw PreconditionError("build_L: d must be ≥ 0");
    }
    ComplexMatrix g = ComplexMatrix::Zero(d, d + 1);
    ComplexMatrix f = ComplexMatrix::Zero(d, d + 1);
    for (int i = 0; i < d; ++i) {
        g(i, i) = 1.0;
        f(i, i + 1) = 1.0;
    }
    return Pencil(std::move(g), std::move(f));
}

SymmetricPencil build_block(const CanonicalBlock& b) {
    validate_block(b);
    const int n = block_dimension(b);
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    std::visit(Overloaded{
                   [&](const MinimalPair& m) {
                       const Pencil l = build_L(m.d);
                       // [0 Lᵀ; L 0] with the zero block of size (d+1)×(d+1) leading
                       a.bottomLeftCorner(m.d, m.d + 1) = l.a();
                       c.bottomLeftCorner(m.d, m.d + 1) = l.b();
                       a.topRightCorner(m.d + 1, m.d) = l.a().transpose();
                       c.topRightCorner(m.d + 1, m.d) = l.b().transpose();
                   },
                   [&](const JordanFinite& j) {
                       for (int i = 0; i < n; ++i) {
                           a(i, n - 1 - i) = 1.0;
                           c(i, n - 1 - i) = -j.mu;
                       }
                       for (int i = 0; i + 1 < n; ++i) {
                           c(i, n - 2 - i) = 1.0;
                       }
                   },
                   [&](const JordanInfinite&) {
                       for (int i = 0; i < n; ++i) {
                           c(i, n - 1 - i) = 1.0;
                       }
                       for (int i = 0; i + 1 < n; ++i) {
                           a(i, n - 2 - i) = 1.0;
                       }
                   },
               },
               b);
    return SymmetricPencil(Pencil(std::move(a), std::move(c)));
}

SymmetricPencil direct_sum(std::span<const SymmetricPencil> blocks) {
    Eigen::Index n = 0;
    for (const auto& b : blocks) {
        n += b.size();
    }
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    ComplexMatrix c = ComplexMatrix::Zero(n, n);
    Eigen::Index offset = 0;
    for (const auto& b : blocks) {
        a.block(offset, offset, b.size(), b.size()) = b.a();
        c.block(offset, offset, b.size(), b.size()) = b.b();
        offset += b.size();
    }
    return SymmetricPencil(Pencil(std::move(a), std::move(c)));
}

StructureDescriptor generic_kcf(const GenericComponent& c, std::span<const Complex> eigenvalues) {
    if (static_cast<int>(eigenvalues.size()) != c.eigenvalue_count()) {
        throw PreconditionError("generic_kcf: expected r−2a eigenvalues");
    }
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j) {
            if (eigenvalues[i] == eigenvalues[j]) {
                throw PreconditionError("generic_kcf: eigenvalues must be pairwise distinct");
            }
        }
    }
    std::vector<CanonicalBlock> blocks;
    for (int i = 0; i < c.s(); ++i) {
        blocks.emplace_back(MinimalPair{c.alpha() + 1});
    }
    for (int i = 0; i < c.n() - c.r() - c.s(); ++i) {
        blocks.emplace_back(MinimalPair{c.alpha()});
    }
    for (const Complex mu : eigenvalues) {
        blocks.emplace_back(JordanFinite{1, mu});
    }
    return StructureDescriptor(std::move(blocks));
}

StructureDescriptor generic_kcf(const GenericComponent& c, std::mt19937_64& rng) {
    const auto mus = sample_distinct_points(c.eigenvalue_count(), 1e-6, rng);
    return generic_kcf(c, mus);
}

StructureDescriptor generic_bundle(const GenericComponent& c) {
    std::vector<Complex> mus;
    for (int i = 0; i < c.eigenvalue_count(); ++i) {
        mus.emplace_back(static_cast<double>(i + 1), 0.0);
    }
    return generic_kcf(c, mus).as_bundle();
}

SymmetricPencil descriptor_to_pencil(const StructureDescriptor& d) {
    if (d.level() != DescriptorLevel::Orbit) {
        throw PreconditionError("descriptor_to_pencil needs an orbit-level descriptor");
    }
    std::vector<SymmetricPencil> parts;
    const StructureDescriptor canonical = d.sorted();
    for (const auto& b : canonical.blocks()) {
        parts.push_back(build_block(b));
    }
    return direct_sum(parts);
}

IntegerPartition weyr_minimal(const StructureDescriptor& d) {
    return weyr_of(d.minimal_indices(), 0);
}

IntegerPartition weyr_eigenvalue(const StructureDescriptor& d, SpectralPoint mu) {
    for (const auto& g : d.eigen_groups()) {
        if (g.point == mu) {
            return weyr_of(g.sizes, 1);
        }
    }
    return {};
}

Complex sample_unit_disc(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double radius = std::sqrt(unit(rng));
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(radius, angle);
}

std::vector<Complex> sample_distinct_points(int count, double min_gap, std::mt19937_64& rng) {
    std::vector<Complex> out;
    while (static_cast<int>(out.size()) < count) {
        const Complex z = sample_unit_disc(rng);
        const bool clash = std::any_of(out.begin(), out.end(),
                                       [&](Complex w) { return std::abs(z - w) < min_gap; });
        if (!clash) {
            out.push_back(z);
        }
    }
    return out;
}

}  // namespace sympencil
