#include "trialis/composition.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace trialis;

namespace {

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> d(-3, 3);
    Vec v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

const std::vector<std::string> all_names{"R", "C", "H", "O", "Cs", "Hs", "Os"};

}  // namespace

TEST(Composition, NamesAndDims) {
    EXPECT_EQ(algebra_names().size(), 7u);
    EXPECT_EQ(CompositionAlgebra::named("R")->dim(), 1u);
    EXPECT_EQ(CompositionAlgebra::named("C")->dim(), 2u);
    EXPECT_EQ(CompositionAlgebra::named("Hs")->dim(), 4u);
    EXPECT_EQ(CompositionAlgebra::named("O")->dim(), 8u);
    EXPECT_FALSE(CompositionAlgebra::named("O")->is_split());
    EXPECT_TRUE(CompositionAlgebra::named("Os")->is_split());
    EXPECT_ANY_THROW(CompositionAlgebra::named("S"));
}

TEST(Composition, NormFormInertia) {
    for (const auto& n : all_names) {
        const auto a = CompositionAlgebra::named(n);
        const Inertia in = inertia(a->norm_form());
        if (a->is_split())
            EXPECT_EQ(in, (Inertia{a->dim() / 2, a->dim() / 2, 0})) << n;
        else
            EXPECT_EQ(in, (Inertia{a->dim(), 0, 0})) << n;
    }
}

TEST(Composition, NormIsMultiplicative) {
    std::mt19937_64 rng(1);
    for (const auto& n : all_names) {
        const auto a = CompositionAlgebra::named(n);
        for (int t = 0; t < 50; ++t) {
            const Vec x = random_vec(rng, a->dim()), y = random_vec(rng, a->dim());
            EXPECT_EQ(a->norm(a->multiply(x, y)), a->norm(x) * a->norm(y)) << n;
        }
    }
}

TEST(Composition, ConjugationIsAntiInvolution) {
    std::mt19937_64 rng(2);
    for (const auto& n : all_names) {
        const auto a = CompositionAlgebra::named(n);
        for (int t = 0; t < 30; ++t) {
            const Vec x = random_vec(rng, a->dim()), y = random_vec(rng, a->dim());
            EXPECT_EQ(a->conjugate(a->multiply(x, y)), a->multiply(a->conjugate(y), a->conjugate(x))) << n;
            EXPECT_EQ(a->conjugate(a->conjugate(x)), x);
            Vec nx(a->dim());
            nx[0] = a->norm(x);
            EXPECT_EQ(a->multiply(x, a->conjugate(x)), nx) << n;
        }
    }
}

TEST(Composition, Alternativity) {
    std::mt19937_64 rng(3);
    for (const std::string n : {"O", "Os"}) {
        const auto a = CompositionAlgebra::named(n);
        for (int t = 0; t < 30; ++t) {
            const Vec x = random_vec(rng, 8), y = random_vec(rng, 8);
            for (const auto& q : a->associator(x, x, y)) EXPECT_EQ(q, 0);
            for (const auto& q : a->associator(x, y, y)) EXPECT_EQ(q, 0);
            for (const auto& q : a->associator(x, y, x)) EXPECT_EQ(q, 0);
        }
    }
}

TEST(Composition, AssociativityAndCommutativity) {
    std::mt19937_64 rng(4);
    const auto h = CompositionAlgebra::named("H"), c = CompositionAlgebra::named("C"),
               o = CompositionAlgebra::named("O");
    bool o_assoc = true, h_comm = true;
    for (int t = 0; t < 20; ++t) {
        const Vec x = random_vec(rng, 4), y = random_vec(rng, 4), z = random_vec(rng, 4);
        for (const auto& q : h->associator(x, y, z)) EXPECT_EQ(q, 0);
        for (const auto& q : h->commutator(x, y)) h_comm = h_comm && q == 0;
        const Vec u = random_vec(rng, 2), v = random_vec(rng, 2);
        for (const auto& q : c->commutator(u, v)) EXPECT_EQ(q, 0);
        const Vec p = random_vec(rng, 8), r = random_vec(rng, 8), s = random_vec(rng, 8);
        for (const auto& q : o->associator(p, r, s)) o_assoc = o_assoc && q == 0;
    }
    EXPECT_FALSE(h_comm);
    EXPECT_FALSE(o_assoc);
}

TEST(Composition, BasisTableSigns) {
    // e_i e_i = -1 for imaginary units of the compact algebras
    const auto o = CompositionAlgebra::named("O");
    for (std::size_t i = 1; i < 8; ++i) {
        EXPECT_EQ(o->mul(i, i).k, 0u);
        EXPECT_EQ(o->mul(i, i).sign, -1);
        EXPECT_EQ(o->conj_sign(i), -1);
    }
    EXPECT_EQ(o->imaginary_part_basis().dim(), 7u);
}

TEST(Composition, ElementsAndPolar) {
    const auto h = CompositionAlgebra::named("H");
    const AlgebraElement i = h->basis(1), j = h->basis(2);
    EXPECT_EQ(i * j, -(j * i));
    EXPECT_EQ(norm(i + j), Q(2));
    EXPECT_EQ(conjugate(i), -i);
    EXPECT_EQ(h->polar(i.coeffs(), i.coeffs()), Q(2));
    EXPECT_EQ(h->polar(i.coeffs(), j.coeffs()), Q(0));
    EXPECT_TRUE(commutator(i, i).is_zero());
}

TEST(Composition, MultiplicationMatrices) {
    std::mt19937_64 rng(6);
    const auto o = CompositionAlgebra::named("Os");
    const Vec x = random_vec(rng, 8), y = random_vec(rng, 8);
    EXPECT_EQ(o->left_mult(x).apply(y), o->multiply(x, y));
    EXPECT_EQ(o->right_mult(y).apply(x), o->multiply(x, y));
    EXPECT_EQ(o->conj_matrix().apply(x), o->conjugate(x));
}

TEST(Composition, DoublingBySigns) {
    const auto a = CompositionAlgebra::from_signs({-1, -1, -1});
    EXPECT_EQ(a->dim(), 8u);
    EXPECT_FALSE(a->is_split());
    const auto s = CompositionAlgebra::cayley_dickson_double(CompositionAlgebra::named("H"), true);
    EXPECT_TRUE(s->is_split());
    EXPECT_EQ(inertia(s->norm_form()), (Inertia{4, 4, 0}));
}
