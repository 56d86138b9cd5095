#include "trialis/magic_square.hpp"
#include "trialis/roots.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace trialis;

namespace {

Z total_dim(const std::vector<Constituent>& cs) {
    Z s = 0;
    for (const auto& c : cs) s += c.dim * static_cast<long>(c.multiplicity);
    return s;
}

std::multiset<std::string> dims_of(const std::vector<Constituent>& cs) {
    std::multiset<std::string> s;
    for (const auto& c : cs)
        for (long long i = 0; i < c.multiplicity; ++i) s.insert(c.dim.get_str());
    return s;
}

}  // namespace

TEST(Roots, RootCounts) {
    const std::vector<std::tuple<char, int, std::size_t>> t{
        {'A', 4, 20}, {'B', 3, 18}, {'C', 4, 32}, {'D', 5, 40}, {'E', 6, 72},
        {'E', 7, 126}, {'E', 8, 240}, {'F', 4, 48}, {'G', 2, 12}};
    for (const auto& [l, r, n] : t) {
        EXPECT_EQ(RootSystem::standard(l, r).root_count(), n) << l << r;
        EXPECT_EQ(standard_root_count(l, r), n);
    }
    EXPECT_EQ(RootSystem::standard('F', 4).long_root_count(), 24u);
    EXPECT_TRUE(RootSystem::standard('E', 8).simply_laced());
    EXPECT_FALSE(RootSystem::standard('G', 2).simply_laced());
}

TEST(Roots, ParseProducts) {
    const auto rs = RootSystem::parse("A2xA2");
    EXPECT_EQ(rs.rank(), 4u);
    EXPECT_EQ(rs.components().size(), 2u);
    EXPECT_EQ(identify_type(rs).label(), "A2xA2");
    EXPECT_ANY_THROW(RootSystem::parse("Q3"));
}

TEST(Roots, IdentifyPermutedCartan) {
    // E6 with nodes reversed
    auto a = RootSystem::standard('E', 6).cartan();
    std::vector<std::vector<long>> p(6, std::vector<long>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) p[i][j] = a[5 - i][5 - j];
    EXPECT_EQ(identify_type(RootSystem::from_cartan(p)).label(), "E6");
    EXPECT_ANY_THROW(RootSystem::from_cartan({{2, -3}, {-3, 2}}));
}

TEST(Roots, WeylDimensions) {
    EXPECT_EQ(weyl_dimension(RootSystem::standard('E', 8), {0, 0, 0, 0, 0, 0, 0, 1}), 248);
    EXPECT_EQ(weyl_dimension(RootSystem::standard('E', 7), {0, 0, 0, 0, 0, 0, 1}), 56);
    EXPECT_EQ(weyl_dimension(RootSystem::standard('E', 6), {1, 0, 0, 0, 0, 0}), 27);
    EXPECT_EQ(weyl_dimension(RootSystem::standard('F', 4), {0, 0, 0, 1}), 26);
    EXPECT_EQ(weyl_dimension(RootSystem::standard('G', 2), {1, 0}), 7);
    EXPECT_EQ(weyl_dimension(RootSystem::standard('A', 2), {1, 1}), 8);
    EXPECT_EQ(weyl_dimension(RootSystem::standard('D', 6), {0, 0, 0, 0, 0, 1}), 32);
    for (const auto& [l, r] : std::vector<std::pair<char, int>>{{'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}, {'B', 3}}) {
        const auto rs = RootSystem::standard(l, r);
        EXPECT_EQ(weyl_dimension(rs, rs.adjoint_weight()), Z(rs.root_count() + rs.rank()));
    }
}

TEST(Roots, CharacterMatchesWeylProperty) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(0, 2);
    for (const auto& [l, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'C', 3}, {'D', 4}}) {
        const auto rs = RootSystem::standard(l, r);
        for (int t = 0; t < 4; ++t) {
            Weight w(rs.rank());
            for (auto& x : w) x = d(rng);
            const Character ch(rs, w);
            EXPECT_EQ(Z(static_cast<long>(ch.total())), weyl_dimension(rs, w)) << l << r;
            long long sum = 0;
            for (const auto& [mu, m] : ch.all_weights()) sum += m;
            EXPECT_EQ(sum, ch.total());
        }
    }
}

TEST(Roots, Multiplicities) {
    const auto e8 = RootSystem::standard('E', 8);
    EXPECT_EQ(weight_multiplicity(e8, e8.adjoint_weight(), Weight(8, 0)), 8);
    const auto g2 = RootSystem::standard('G', 2);
    EXPECT_EQ(weight_multiplicity(g2, {1, 0}, {0, 0}), 1);
    EXPECT_EQ(weyl_orbit(e8, e8.adjoint_weight()).size(), 240u);
}

TEST(Roots, CasimirOfAdjoint) {
    // (theta, theta + 2 rho) = 2 h^vee with long roots of length 2
    const std::vector<std::tuple<char, int, long>> t{{'E', 8, 30}, {'E', 7, 18}, {'E', 6, 12}, {'F', 4, 9}, {'G', 2, 4}};
    for (const auto& [l, r, h] : t) {
        const auto rs = RootSystem::standard(l, r);
        EXPECT_EQ(casimir_value(rs, rs.adjoint_weight()), Q(2 * h)) << l << r;
    }
}

TEST(Roots, SquaresOfE8) {
    const auto e8 = RootSystem::standard('E', 8);
    const auto alt = square_decompose(e8, e8.adjoint_weight(), Parity::alt);
    EXPECT_EQ(dims_of(alt), (std::multiset<std::string>{"248", "30380"}));
    const auto sym = square_decompose(e8, e8.adjoint_weight(), Parity::sym);
    EXPECT_EQ(dims_of(sym), (std::multiset<std::string>{"1", "3875", "27000"}));
}

TEST(Roots, PowerDimensionsProperty) {
    for (const auto& [l, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 3}, {'G', 2}, {'F', 4}}) {
        const auto rs = RootSystem::standard(l, r);
        Weight w(rs.rank(), 0);
        w[0] = 1;
        const Z n = weyl_dimension(rs, w);
        const long nl = n.get_si();
        EXPECT_EQ(total_dim(power_decompose(rs, w, 2, Parity::sym)), Z(binom(nl + 1, 2)));
        EXPECT_EQ(total_dim(power_decompose(rs, w, 2, Parity::alt)), Z(binom(nl, 2)));
        EXPECT_EQ(total_dim(power_decompose(rs, w, 3, Parity::sym)), Z(binom(nl + 2, 3)));
        EXPECT_EQ(total_dim(power_decompose(rs, w, 3, Parity::alt)), Z(binom(nl, 3)));
    }
}

TEST(Roots, ClebschGordan) {
    const auto a1 = RootSystem::standard('A', 1);
    for (long m = 0; m < 5; ++m)
        for (long n = 0; n <= m; ++n) {
            const auto cs = tensor_decompose(a1, {m}, {n});
            EXPECT_EQ(cs.size(), static_cast<std::size_t>(n + 1));
            EXPECT_EQ(total_dim(cs), Z((m + 1) * (n + 1)));
        }
}

TEST(Roots, GradingDims) {
    const std::map<long, std::size_t> e8{{-2, 1}, {-1, 56}, {0, 134}, {1, 56}, {2, 1}};
    EXPECT_EQ(highest_root_grading_dims(RootSystem::standard('E', 8)), e8);
    const std::map<long, std::size_t> f4{{-2, 1}, {-1, 14}, {0, 22}, {1, 14}, {2, 1}};
    EXPECT_EQ(highest_root_grading_dims(RootSystem::standard('F', 4)), f4);
}

TEST(Roots, ExtractionFromSplitF4) {
    const auto s = build_split_form("R", "O");
    const auto r = extract_root_system(s.L, s.cartan);
    EXPECT_EQ(r.type.label(), "F4");
    EXPECT_EQ(r.roots.size(), 48u);
    EXPECT_EQ(r.zero_dim, 4u);
    const auto g = highest_root_grading(s.L, r);
    EXPECT_EQ(g.dims, highest_root_grading_dims(RootSystem::standard('F', 4)));
}

TEST(Roots, EigenspaceTest) {
    // Lambda^2 of the 2-dim module is one line
    const auto e = casimir_eigenspace_test(RootSystem::standard('A', 1), {1});
    EXPECT_TRUE(e.single);
    EXPECT_EQ(e.codim, 0);
}

TEST(Roots, Reflections) {
    const auto rs = RootSystem::standard('B', 3);
    const Weight w{1, -2, 3};
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(rs.reflect(rs.reflect(w, i), i), w);
    EXPECT_TRUE(rs.dominant(rs.dominant_conjugate(w)));
}
