#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "sympencil/canonical.hpp"
#include "sympencil/errors.hpp"
#include "sympencil/experiments.hpp"

using namespace sympencil;

TEST(BuildL, L1) {
    const Pencil l = build_L(1);
    ComplexMatrix a(1, 2);
    a << 1.0, 0.0;
    ComplexMatrix b(1, 2);
    b << 0.0, 1.0;
    EXPECT_EQ(l.a(), a);
    EXPECT_EQ(l.b(), b);
}

TEST(BuildL, L0IsEmptyRow) {
    const Pencil l = build_L(0);
    EXPECT_EQ(l.rows(), 0);
    EXPECT_EQ(l.cols(), 1);
}

TEST(BuildL, L2HasFullRowRank) {
    const Pencil l = build_L(2);
    EXPECT_EQ(l.rows(), 2);
    EXPECT_EQ(l.cols(), 3);
    EXPECT_EQ(test::evaluation_rank(l, 1.0), 2U);
    EXPECT_THROW(build_L(-1), PreconditionError);
}

TEST(BuildBlock, M0IsOneByOneZero) {
    const SymmetricPencil m0 = build_block(MinimalPair{0});
    EXPECT_EQ(m0.pencil(), Pencil::zero(1, 1));
}

TEST(BuildBlock, J1Finite) {
    const Complex mu(0.5, -2.0);
    const SymmetricPencil j = build_block(JordanFinite{1, mu});
    EXPECT_EQ(j.a()(0, 0), Complex(1.0, 0.0));
    EXPECT_EQ(j.b()(0, 0), -mu);
}

TEST(BuildBlock, J1InfinityIsOne) {
    const SymmetricPencil j = build_block(JordanInfinite{1});
    EXPECT_EQ(j.a()(0, 0), Complex(0.0, 0.0));
    EXPECT_EQ(j.b()(0, 0), Complex(1.0, 0.0));
}

TEST(BuildBlock, M1MatchesAntiDiagonalQ) {
    const SymmetricPencil m1 = build_block(MinimalPair{1});
    const auto ex = example_1_1(1.0, 2.0, 1.0, 1.0);
    EXPECT_EQ(m1.pencil(), ex.q);
}

TEST(BuildBlock, J2AtZeroPattern) {
    const SymmetricPencil j = build_block(JordanFinite{2, 0.0});
    ComplexMatrix a(2, 2);
    a << 0.0, 1.0, 1.0, 0.0;
    ComplexMatrix b(2, 2);
    b << 1.0, 0.0, 0.0, 0.0;
    EXPECT_EQ(j.a(), a);
    EXPECT_EQ(j.b(), b);
}

TEST(BuildBlock, InvalidBlocks) {
    EXPECT_THROW(build_block(MinimalPair{-1}), PreconditionError);
    EXPECT_THROW(build_block(JordanFinite{0, 1.0}), PreconditionError);
    EXPECT_THROW(build_block(JordanInfinite{0}), PreconditionError);
}

TEST(BuildBlock, DimensionsAndRank) {
    for (int d = 0; d <= 4; ++d) {
        const SymmetricPencil m = build_block(MinimalPair{d});
        EXPECT_EQ(m.size(), 2 * d + 1);
        EXPECT_EQ(test::evaluation_rank(m), static_cast<std::size_t>(2 * d));
    }
    for (int l = 1; l <= 4; ++l) {
        EXPECT_EQ(test::evaluation_rank(build_block(JordanFinite{l, 3.0})), static_cast<std::size_t>(l));
        EXPECT_EQ(test::evaluation_rank(build_block(JordanInfinite{l})), static_cast<std::size_t>(l));
    }
}

TEST(DirectSum, Empty) {
    const SymmetricPencil s = direct_sum({});
    EXPECT_EQ(s.size(), 0);
}

TEST(DirectSum, M1PlusJ1) {
    const std::vector<SymmetricPencil> parts{build_block(MinimalPair{1}), build_block(JordanFinite{1, 3.0})};
    const SymmetricPencil s = direct_sum(parts);
    EXPECT_EQ(s.size(), 4);
    EXPECT_EQ(test::evaluation_rank(s), 3U);
}

TEST(DirectSum, ExampleP) {
    const std::vector<SymmetricPencil> parts{build_block(JordanFinite{1, 1.0}), build_block(JordanFinite{1, 2.0}),
                                             build_block(MinimalPair{0})};
    EXPECT_EQ(direct_sum(parts).pencil(), example_1_1(1.0, 2.0, 1.0, 1.0).p);
}

TEST(GenericComponent, EuclideanDivision) {
    const GenericComponent c(7, 4, 2);
    EXPECT_EQ(c.alpha(), 0);
    EXPECT_EQ(c.s(), 2);
    EXPECT_EQ(c.eigenvalue_count(), 0);
    const GenericComponent d(10, 8, 4);
    EXPECT_EQ(d.alpha(), 2);
    EXPECT_EQ(d.s(), 0);
}

TEST(GenericComponent, OutOfRange) {
    EXPECT_THROW(GenericComponent(1, 0, 0), PreconditionError);
    EXPECT_THROW(GenericComponent(3, 3, 0), PreconditionError);
    EXPECT_THROW(GenericComponent(5, 3, 2), PreconditionError);
    EXPECT_THROW(GenericComponent(5, 3, -1), PreconditionError);
}

TEST(GenericKcf, QOfExample) {
    std::mt19937_64 rng(1);
    EXPECT_EQ(generic_kcf(GenericComponent(3, 2, 1), rng), StructureDescriptor({MinimalPair{1}}));
}

TEST(GenericKcf, POfExample) {
    const std::vector<Complex> mus{1.0, 2.0};
    const StructureDescriptor want({MinimalPair{0}, JordanFinite{1, 1.0}, JordanFinite{1, 2.0}});
    EXPECT_EQ(generic_kcf(GenericComponent(3, 2, 0), mus), want);
}

TEST(GenericKcf, SevenFourTwo) {
    std::mt19937_64 rng(2);
    const StructureDescriptor want({MinimalPair{1}, MinimalPair{1}, MinimalPair{0}});
    EXPECT_EQ(generic_kcf(GenericComponent(7, 4, 2), rng), want);
}

TEST(GenericKcf, EigenvalueErrors) {
    const GenericComponent c(3, 2, 0);
    const std::vector<Complex> one{1.0};
    const std::vector<Complex> twice{1.0, 1.0};
    EXPECT_THROW(generic_kcf(c, one), PreconditionError);
    EXPECT_THROW(generic_kcf(c, twice), PreconditionError);
}

TEST(GenericKcf, SizeRankAndDegreeBookkeeping) {
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 10; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            for (const auto& c : generic_components(n, r)) {
                const StructureDescriptor d = generic_kcf(c, rng);
                EXPECT_EQ(d.size(), n);
                EXPECT_EQ(d.normal_rank(), r);
                const auto idx = d.minimal_indices();
                EXPECT_EQ(std::accumulate(idx.begin(), idx.end(), 0), c.a());
                EXPECT_EQ(d.distinct_eigenvalue_count(), r - 2 * c.a());
            }
        }
    }
}

TEST(GenericKcf, SampledEigenvaluesInDiscAndSeparated) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const auto pts = sample_distinct_points(6, 1e-6, rng);
        for (std::size_t i = 0; i < pts.size(); ++i) {
            EXPECT_LE(std::abs(pts[i]), 1.0);
            for (std::size_t j = 0; j < i; ++j) {
                EXPECT_GT(std::abs(pts[i] - pts[j]), 1e-6);
            }
        }
    }
}

TEST(GenericComponents, CountAndDistinctBundles) {
    for (int n = 2; n <= 10; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            const auto cs = generic_components(n, r);
            ASSERT_EQ(static_cast<int>(cs.size()), r / 2 + 1);
            for (std::size_t i = 0; i < cs.size(); ++i) {
                EXPECT_EQ(cs[i].a(), static_cast<int>(i));
                for (std::size_t j = 0; j < i; ++j) {
                    EXPECT_FALSE(same_bundle(generic_bundle(cs[i]), generic_bundle(cs[j])));
                }
            }
        }
    }
}

TEST(DescriptorToPencil, M0) {
    EXPECT_EQ(descriptor_to_pencil(StructureDescriptor({MinimalPair{0}})).pencil(), Pencil::zero(1, 1));
}

TEST(DescriptorToPencil, K1IsQ) {
    std::mt19937_64 rng(5);
    const SymmetricPencil s = descriptor_to_pencil(generic_kcf(GenericComponent(3, 2, 1), rng));
    EXPECT_EQ(s.pencil(), example_1_1(1.0, 2.0, 1.0, 1.0).q);
}

TEST(DescriptorToPencil, OrderIndependent) {
    const StructureDescriptor x({JordanInfinite{1}, MinimalPair{0}, JordanFinite{2, 1.0}, MinimalPair{2}});
    const StructureDescriptor y({MinimalPair{2}, JordanFinite{2, 1.0}, JordanInfinite{1}, MinimalPair{0}});
    EXPECT_EQ(descriptor_to_pencil(x), descriptor_to_pencil(y));
}

TEST(DescriptorToPencil, SymmetricWithRankNMinusPairs) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const StructureDescriptor d = random_orbit_descriptor(9, rng);
        const SymmetricPencil s = descriptor_to_pencil(d);
        EXPECT_TRUE(s.pencil().is_symmetric(0.0));
        EXPECT_EQ(s.size(), d.size());
        EXPECT_EQ(test::evaluation_rank(s, Complex(0.123, 0.877)), static_cast<std::size_t>(d.normal_rank()));
    }
}

TEST(DescriptorToPencil, RejectsBundleLevel) {
    EXPECT_THROW(descriptor_to_pencil(generic_bundle(GenericComponent(3, 2, 0))), PreconditionError);
}

TEST(Weyr, Minimal) {
    EXPECT_EQ(weyr_minimal(StructureDescriptor({MinimalPair{1}, MinimalPair{0}})), IntegerPartition({2, 1}));
    EXPECT_TRUE(weyr_minimal(StructureDescriptor({JordanFinite{2, 1.0}})).empty());
}

TEST(Weyr, MinimalOfKa) {
    for (int n = 2; n <= 9; ++n) {
        for (int r = 1; r <= n - 1; ++r) {
            for (const auto& c : generic_components(n, r)) {
                std::vector<int> want(static_cast<std::size_t>(c.alpha() + 1), n - r);
                want.push_back(c.s());
                EXPECT_EQ(weyr_minimal(generic_bundle(c)), IntegerPartition(want));
            }
        }
    }
}

TEST(Weyr, Eigenvalue) {
    const StructureDescriptor d({JordanFinite{1, 5.0}, JordanFinite{1, 7.0}});
    EXPECT_EQ(weyr_eigenvalue(d, 5.0), IntegerPartition({1}));
    EXPECT_TRUE(weyr_eigenvalue(d, 6.0).empty());
    const Complex mu(0.5, 0.5);
    EXPECT_EQ(weyr_eigenvalue(StructureDescriptor({JordanFinite{3, mu}, JordanFinite{1, mu}}), mu),
              IntegerPartition({2, 1, 1}));
    EXPECT_EQ(weyr_eigenvalue(StructureDescriptor({JordanInfinite{2}}), SpectralPoint::infinity()),
              IntegerPartition({1, 1}));
}

TEST(Descriptor, SizeAndRank) {
    const StructureDescriptor d({MinimalPair{2}, MinimalPair{0}, JordanFinite{3, 1.0}, JordanInfinite{2}});
    EXPECT_EQ(d.size(), 5 + 1 + 3 + 2);
    EXPECT_EQ(d.normal_rank(), 11 - 2);
    EXPECT_EQ(d.minimal_indices(), (std::vector<int>{2, 0}));
    EXPECT_EQ(d.distinct_eigenvalue_count(), 2);
}

TEST(Descriptor, EqualityIgnoresOrderButNotLevel) {
    const StructureDescriptor x({MinimalPair{0}, JordanFinite{1, 2.0}});
    const StructureDescriptor y({JordanFinite{1, 2.0}, MinimalPair{0}});
    EXPECT_EQ(x, y);
    EXPECT_FALSE(x == x.as_bundle());
}

TEST(Descriptor, ToString) {
    const StructureDescriptor d({JordanInfinite{1}, JordanFinite{2, Complex(0.5, 1.0)}, MinimalPair{1}});
    EXPECT_EQ(d.to_string(), "M_1 ⊕ J_2(0.5+1i) ⊕ J_1(inf)");
    EXPECT_EQ(generic_bundle(GenericComponent(3, 2, 0)).to_string(), "M_0 ⊕ J_1(μ1) ⊕ J_1(μ2)");
    EXPECT_EQ(StructureDescriptor().to_string(), "(empty)");
}

TEST(Descriptor, SameOrbitAndBundle) {
    const StructureDescriptor x({MinimalPair{0}, JordanFinite{1, 1.0}, JordanFinite{1, 2.0}});
    const StructureDescriptor y({MinimalPair{0}, JordanFinite{1, 1.0 + 1e-9}, JordanFinite{1, 2.0}});
    const StructureDescriptor z({MinimalPair{0}, JordanFinite{1, 3.0}, JordanFinite{1, 4.0}});
    const StructureDescriptor w({MinimalPair{0}, JordanFinite{1, 3.0}, JordanInfinite{1}});
    const StructureDescriptor v({MinimalPair{0}, JordanFinite{2, 3.0}});
    EXPECT_TRUE(same_orbit(x, y));
    EXPECT_FALSE(same_orbit(x, z));
    EXPECT_TRUE(same_bundle(x, z));
    EXPECT_TRUE(same_bundle(x, w));
    EXPECT_FALSE(same_bundle(x, v));
}
