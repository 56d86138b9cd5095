#include "trialis/jordan.hpp"

#include <gtest/gtest.h>

using namespace trialis;

namespace {
const AlgPtr O = CompositionAlgebra::named("O");
}

TEST(Jordan, Dimensions) {
    EXPECT_EQ(JordanElement::dim_for(*O), 27u);
    EXPECT_EQ(JordanElement::dim_for(*CompositionAlgebra::named("H")), 15u);
    EXPECT_EQ(ZornElement::dim_for(*O), 56u);
}

TEST(Jordan, UnitAndCoords) {
    std::mt19937_64 rng(1);
    const auto e = JordanElement::identity(O);
    for (int t = 0; t < 20; ++t) {
        const auto x = random_jordan(O, rng);
        EXPECT_EQ(jordan_product(e, x), x);
        EXPECT_EQ(JordanElement::from_coords(O, x.coords()), x);
    }
    EXPECT_EQ(trace(e), Q(3));
}

TEST(Jordan, JordanIdentityProperty) {
    std::mt19937_64 rng(20240611);
    for (const std::string n : {"R", "C", "H", "O", "Os"}) {
        const auto a = CompositionAlgebra::named(n);
        for (int t = 0; t < 40; ++t) {
            const auto x = random_jordan(a, rng), y = random_jordan(a, rng);
            const auto x2 = jordan_product(x, x);
            EXPECT_EQ(jordan_product(x2, jordan_product(x, y)), jordan_product(x, jordan_product(x2, y))) << n;
            EXPECT_EQ(jordan_product(x, y), jordan_product(y, x));
        }
    }
}

TEST(Jordan, Determinant) {
    EXPECT_EQ(determinant(JordanElement::identity(O)), Q(1));
    EXPECT_EQ(determinant(JordanElement::diag(O, 1, 2, 3)), Q(6));
    // r1 r2 r3 - r3 Q(x3) with x3 = e1
    auto x = JordanElement::diag(O, 2, 3, 5);
    x.x[2] = O->e(1);
    EXPECT_EQ(determinant(x), Q(30 - 5));
}

TEST(Jordan, DeterminantPolarizationProperty) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
        const auto x = random_jordan(O, rng), y = random_jordan(O, rng), z = random_jordan(O, rng);
        EXPECT_EQ(determinant(x, x, x), determinant(x));
        EXPECT_EQ(determinant(x, y, z), determinant(y, z, x));
        EXPECT_EQ(determinant(x, y, z), determinant(y, x, z));
        EXPECT_EQ(trace_form(cross_product(x, y), z), determinant(x, y, z));
        EXPECT_EQ(determinant(cyclic_relabel(x)), determinant(x));
        EXPECT_EQ(determinant(x.scaled(2)), determinant(x) * 8);
    }
}

TEST(Jordan, TraceFormDefiniteness) {
    EXPECT_EQ(inertia(trace_form_gram(O)), (Inertia{27, 0, 0}));
    const Inertia s = inertia(trace_form_gram(CompositionAlgebra::named("Os")));
    EXPECT_EQ(s.zero, 0u);
    EXPECT_EQ(s.pos + s.neg, 27u);
}

TEST(Jordan, DerivationDims) {
    EXPECT_EQ(jordan_derivation_dim(CompositionAlgebra::named("R")), 3u);
    EXPECT_EQ(jordan_derivation_dim(CompositionAlgebra::named("C")), 8u);
    EXPECT_EQ(jordan_derivation_dim(CompositionAlgebra::named("H")), 21u);
    EXPECT_EQ(jordan_derivation_dim(O), 52u);
}

TEST(Zorn, UnitAndBlocks) {
    std::mt19937_64 rng(3);
    const auto u = ZornElement::unit(O);
    for (int t = 0; t < 10; ++t) {
        const ZornElement m{Q(t), Q(1 - t), random_jordan(O, rng), random_jordan(O, rng)};
        EXPECT_EQ(zorn_multiply(u, m), m);
        EXPECT_EQ(zorn_multiply(m, u), m);
        const ZornElement x{0, 0, m.X, JordanElement::zero(O)}, y{0, 0, JordanElement::zero(O), m.Y};
        EXPECT_EQ(zorn_multiply(x, y).a, trace_form(m.X, m.Y));
        EXPECT_EQ(zorn_multiply(y, x).b, trace_form(m.X, m.Y));
    }
}

TEST(Structurable, ExhaustiveSmall) {
    for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"R", "R"}, {"R", "C"}, {"C", "C"}, {"C", "H"}, {"R", "O"}, {"H", "C"}}) {
        const TensorAlgebra t{CompositionAlgebra::named(a), CompositionAlgebra::named(b)};
        const auto r = structurable_identity_check(t);
        EXPECT_TRUE(r.ok) << a << b;
        EXPECT_EQ(r.triples, t.dim() * t.dim() * t.dim());
    }
}

TEST(Structurable, SampledOctonions) {
    const TensorAlgebra t{O, O};
    EXPECT_EQ(t.dim(), 64u);
    const auto r = structurable_identity_check(t, 100, 5);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.triples, 100u);
}

TEST(Structurable, TensorProduct) {
    const TensorAlgebra t{CompositionAlgebra::named("C"), CompositionAlgebra::named("H")};
    const Vec x = t.e(3), one = t.one();
    EXPECT_EQ(t.multiply(one, x), x);
    EXPECT_EQ(t.conjugate(t.conjugate(x)), x);
    // V_{1,1} is the identity
    EXPECT_EQ(structurable_v(t, one, one, x), x);
}
