#include "trialis/magic_square.hpp"
#include "trialis/roots.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

using namespace trialis;

namespace {

const std::vector<std::string> compact{"R", "C", "H", "O"};

std::size_t expected_dim(const std::string& a, const std::string& b) {
    static const std::map<std::string, std::size_t> idx{{"R", 0}, {"C", 1}, {"H", 2}, {"O", 3}};
    static const std::size_t d[4][4] = {{3, 8, 21, 52}, {8, 16, 35, 78}, {21, 35, 66, 133}, {52, 78, 133, 248}};
    return d[idx.at(a)][idx.at(b)];
}

}  // namespace

TEST(MagicSquare, DimensionsAndJacobi) {
    for (const auto& a : compact)
        for (const auto& b : compact) {
            if (a == "O" && b == "O") continue;
            const auto m = build_magic_square(CompositionAlgebra::named(a), CompositionAlgebra::named(b));
            EXPECT_EQ(m.dim(), expected_dim(a, b)) << a << b;
            EXPECT_TRUE(m.L.verify_jacobi().ok) << a << b;
        }
}

TEST(MagicSquare, E8) {
    const auto m = build_magic_square(CompositionAlgebra::named("O"), CompositionAlgebra::named("O"));
    EXPECT_EQ(m.dim(), 248u);
    EXPECT_TRUE(m.L.verify_jacobi().ok);
}

TEST(MagicSquare, TitsRectangleAgrees) {
    for (const auto& a : compact)
        for (const auto& b : compact) EXPECT_EQ(tits_rectangle_dim(a, b), expected_dim(a, b)) << a << b;
}

TEST(MagicSquare, CompactFormIsDefinite) {
    for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{{"R", "H"}, {"C", "H"}, {"H", "O"}}) {
        const auto m = build_magic_square(CompositionAlgebra::named(a), CompositionAlgebra::named(b));
        EXPECT_EQ(inertia(m.L.killing_form()), (Inertia{0, m.dim(), 0})) << a << b;
    }
}

TEST(MagicSquare, SplitTypes) {
    const std::map<std::string, std::string> type{{"RR", "A1"}, {"RC", "A2"}, {"RH", "C3"}, {"RO", "F4"},
                                                  {"CC", "A2xA2"}, {"CH", "A5"}, {"CO", "E6"}, {"HH", "D6"},
                                                  {"HO", "E7"}};
    for (const auto& [ab, t] : type) {
        const auto s = build_split_form(ab.substr(0, 1), ab.substr(1, 1));
        const auto r = extract_root_system(s.L, s.cartan);
        EXPECT_EQ(r.type.label(), t) << ab;
        const Inertia in = inertia(s.L.killing_form());
        EXPECT_EQ(in.pos, r.cartan.size() + r.roots.size() / 2) << ab;
    }
}

TEST(MagicSquare, ConventionIsSymmetric) {
    EXPECT_EQ(default_convention(), default_convention());
    EXPECT_FALSE(describe(default_convention()).empty());
    EXPECT_EQ(split_name("O"), "Os");
}

TEST(MagicSquare, Automorphisms) {
    const auto m = build_magic_square(CompositionAlgebra::named("C"), CompositionAlgebra::named("H"));
    const Matrix theta = involution_theta(m), tau = order3_tau(m);
    EXPECT_TRUE(m.L.is_automorphism(theta));
    EXPECT_EQ(theta * theta, Matrix::identity(m.dim()));
    EXPECT_TRUE(m.L.is_automorphism(tau));
    EXPECT_EQ(tau * tau * tau, Matrix::identity(m.dim()));
    const auto fixed = fixed_space(theta);
    EXPECT_TRUE(m.L.is_subalgebra(fixed));
    EXPECT_EQ(fixed.dim(), m.na + m.nb + m.a * m.b);
}

TEST(MagicSquare, OctonionOrderThree) {
    const auto o = CompositionAlgebra::named("O");
    const Matrix phi = octonion_order3_automorphism(*o);
    EXPECT_EQ(phi * phi * phi, Matrix::identity(8));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int t = 0; t < 10; ++t) {
        Vec x(8), y(8);
        for (auto& q : x) q = d(rng);
        for (auto& q : y) q = d(rng);
        EXPECT_EQ(phi.apply(o->multiply(x, y)), o->multiply(phi.apply(x), phi.apply(y)));
    }
}

TEST(MagicSquare, DualPairs) {
    for (const std::string a : {"C", "H", "O"}) {
        const auto pairs = dual_pairs(a);
        ASSERT_EQ(pairs.size(), 4u);
        EXPECT_EQ(pairs[0].centralizer_dim, 3u) << a;
        EXPECT_EQ(pairs[1].centralizer_dim, 8u) << a;
        EXPECT_EQ(pairs[2].centralizer_dim, 14u) << a;
        for (const auto& p : pairs) EXPECT_TRUE(p.closed) << a << " " << p.sub;
    }
}

TEST(MagicSquare, OctonionRowSubalgebras) {
    const auto big = build_magic_square(CompositionAlgebra::named("H"), CompositionAlgebra::named("O"));
    for (const std::string b : {"R", "C", "H"}) {
        const auto s = subalgebra_in_octonion_row(big, b);
        EXPECT_EQ(s.dim(), expected_dim("H", b)) << b;
        EXPECT_TRUE(big.L.is_subalgebra(s)) << b;
    }
    EXPECT_EQ(tA_subspace(big).dim(), 9u);
}

TEST(FourAlity, Model) {
    const auto f = build_4ality();
    EXPECT_EQ(f.L.dim(), 28u);
    EXPECT_TRUE(f.L.verify_jacobi().ok);
    EXPECT_TRUE(f.L.is_automorphism(f.tau));
    EXPECT_TRUE(f.L.is_automorphism(f.tau_prime));
    EXPECT_EQ(fixed_space(f.tau).dim(), 14u);
    EXPECT_EQ(fixed_space(f.tau_prime).dim(), 8u);
    for (const auto& m : f.modules) EXPECT_TRUE(is_representation(f.L, m));
    const auto r = extract_root_system(f.L, f.cartan);
    EXPECT_EQ(r.type.label(), "D4");
    std::vector<Weight> hw;
    for (const auto& mod : f.modules) {
        std::vector<Matrix> act;
        for (const auto& h : f.cartan) {
            Matrix s(8, 8);
            for (std::size_t i = 0; i < h.size(); ++i)
                if (!is_zero(h[i])) s = s + mod[i].scaled(h[i]);
            act.push_back(s);
        }
        const auto w = module_highest_weights(r, act);
        ASSERT_EQ(w.size(), 1u);
        hw.push_back(w[0]);
    }
    EXPECT_NE(hw[0], hw[1]);
    EXPECT_NE(hw[1], hw[2]);
    EXPECT_NE(hw[0], hw[2]);
}

TEST(MagicSquare, StructureConstantRoundTrip) {
    const auto s = build_split_form("H", "O");
    std::stringstream ss;
    s.L.write(ss);
    EXPECT_EQ(LieAlgebra::read(ss), s.L);
}
