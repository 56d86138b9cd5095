#include "trialis/triality.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace trialis;

TEST(Triality, Dimensions) {
    const std::vector<std::pair<std::string, std::size_t>> t{{"R", 0}, {"C", 2}, {"H", 9}, {"O", 28}};
    for (const auto& [n, d] : t) EXPECT_EQ(triality_algebra(CompositionAlgebra::named(n)).dim(), d) << n;
    const std::vector<std::pair<std::string, std::size_t>> der{{"R", 0}, {"C", 0}, {"H", 3}, {"O", 14}};
    for (const auto& [n, d] : der) EXPECT_EQ(derivations(*CompositionAlgebra::named(n)).dim(), d) << n;
}

TEST(Triality, SplitFormsHaveSameDims) {
    EXPECT_EQ(triality_algebra(CompositionAlgebra::named("Os")).dim(), 28u);
    EXPECT_EQ(triality_algebra(CompositionAlgebra::named("Hs")).dim(), 9u);
    EXPECT_EQ(derivations(*CompositionAlgebra::named("Os")).dim(), 14u);
}

TEST(Triality, ClosedAndJacobi) {
    for (const std::string n : {"C", "H", "O"}) {
        const auto& t = triality_algebra(CompositionAlgebra::named(n));
        EXPECT_TRUE(t.closed_under_bracket()) << n;
        EXPECT_TRUE(t.structure().verify_jacobi().ok) << n;
    }
    const auto o = CompositionAlgebra::named("O");
    const auto der = derivations(*o);
    EXPECT_TRUE(der.closed_under_bracket());
    for (std::size_t i = 0; i < der.dim(); ++i) EXPECT_TRUE(is_derivation(*o, der.element(i)[0]));
}

TEST(Triality, BasisElementsAreTriples) {
    const auto o = CompositionAlgebra::named("O");
    const auto& t = triality_algebra(o);
    for (std::size_t i = 0; i < t.dim(); ++i) {
        const auto u = t.element(i);
        EXPECT_TRUE(is_triality_triple(*o, u));
        EXPECT_TRUE(is_triality_triple_untwisted(*o, untwist(*o, u)));
        for (const auto& m : u) EXPECT_TRUE(is_skew(*o, m));
    }
}

TEST(Triality, SigmaHasOrderThree) {
    const auto o = CompositionAlgebra::named("O");
    const auto u = triality_algebra(o).element(5);
    EXPECT_EQ(sigma(u, 3), u);
    EXPECT_EQ(sigma(sigma(u)), sigma(u, 2));
}

TEST(Triality, PsiSpansTriality) {
    for (const std::string n : {"H", "O"}) {
        const auto a = CompositionAlgebra::named(n);
        const auto ps = psi_sum(a);
        EXPECT_EQ(rank(ps.map), triality_algebra(a).dim()) << n;
        EXPECT_EQ(ps.kernel.size(), ps.gens.size() - rank(ps.map)) << n;
    }
    const auto o = CompositionAlgebra::named("O");
    const auto p = psi(*o, 1, o->e(1), o->e(2));
    EXPECT_TRUE(is_triality_triple(*o, p));
    EXPECT_TRUE(triality_algebra(o).contains(p));
}

TEST(Triality, WedgeIsSkew) {
    const auto o = CompositionAlgebra::named("O");
    const Matrix w = wedge(*o, o->e(1), o->e(3));
    EXPECT_TRUE(is_skew(*o, w));
    EXPECT_EQ(w.apply(o->e(1)), o->e(3));
}

TEST(Triality, InclusionChain) {
    // stabilizer dims frozen from the kernel solve
    const std::vector<std::tuple<std::string, std::string, std::size_t>> chain{
        {"R", "C", 0}, {"C", "H", 3}, {"H", "O", 12}};
    for (const auto& [b, bp, stab] : chain) {
        const auto inc = inclusion_embedding(CompositionAlgebra::named(b), CompositionAlgebra::named(bp));
        EXPECT_TRUE(inc.lie_morphism) << b;
        EXPECT_TRUE(inc.image_in_stabilizer) << b;
        EXPECT_TRUE(inc.kernel_contained) << b;
        EXPECT_EQ(inc.stabilizer_dim, stab) << b;
        EXPECT_TRUE(kernel_containment(CompositionAlgebra::named(b), CompositionAlgebra::named(bp)));
        EXPECT_GE(inc.stabilizer_dim, rank(inc.map));
    }
}

TEST(Triality, OuterAutomorphisms) {
    const auto o = CompositionAlgebra::named("O");
    const auto l = triality_algebra(o).structure();
    for (auto f : {&outer_s, &outer_t}) {
        const Matrix m = triality_endomorphism(o, f);
        EXPECT_EQ(rank(m), 28u);
        EXPECT_TRUE(l.is_automorphism(m));
    }
}

TEST(Triality, DerivedG2Family) {
    const auto o = CompositionAlgebra::named("O");
    const auto fam = g2_derived_family();
    ASSERT_EQ(fam.size(), 14u);
    std::vector<Vec> flat;
    for (const auto& m : fam) {
        EXPECT_TRUE(is_derivation(*o, m));
        flat.push_back(flatten({m}));
    }
    EXPECT_EQ(rank_of(flat, 64), 14u);
    std::vector<Vec> printed;
    for (const auto& m : g2_parametrized_family()) printed.push_back(flatten({m}));
    EXPECT_EQ(g2_parametrized_family().size(), 14u);
    EXPECT_EQ(rank_of(printed, 64), 14u);
}

TEST(Triality, TupleAlgebra) {
    const MatTuple a{Matrix::from_rows({{0, 1}, {0, 0}}, 2)}, b{Matrix::from_rows({{0, 0}, {1, 0}}, 2)};
    const MatTuple c = tuple_bracket(a, b);
    EXPECT_EQ(c[0], Matrix::diag({1, -1}));
    EXPECT_EQ(unflatten(flatten(c), 1, 2), c);
    EXPECT_EQ(tuple_add(a, tuple_scale(a, -1))[0], Matrix(2, 2));
}
