#include "trialis/dynkin.hpp"

#include <gtest/gtest.h>

using namespace trialis;

namespace {
MarkedDiagram md(const std::string& s) { return MarkedDiagram::parse(s); }
}  // namespace

TEST(Diagram, ParseAndPrint) {
    for (const std::string s : {"E8[8]", "A3[3]xA3[2]", "A1[1^3]", "D4", "B3[1,3]"}) EXPECT_EQ(md(s).str(), s);
    EXPECT_ANY_THROW(md("E9[1]"));
    EXPECT_ANY_THROW(md("A3[5]"));
    EXPECT_ANY_THROW(md("A3[1"));
}

TEST(Diagram, Equivalence) {
    EXPECT_TRUE(md("A3[1]").equivalent(md("A3[3]")));
    EXPECT_TRUE(md("D4[1]").equivalent(md("D4[4]")));
    EXPECT_TRUE(md("D4[3]").equivalent(md("D4[1]")));
    EXPECT_FALSE(md("D4[2]").equivalent(md("D4[1]")));
    EXPECT_TRUE(md("A1[1]xA2[1]").equivalent(md("A2[2]xA1[1]")));
    EXPECT_FALSE(md("B3[1]").equivalent(md("B3[3]")));
    EXPECT_EQ(md("E6[6]").canonical(), md("E6[1]").canonical());
}

TEST(Diagram, VarietyDimensions) {
    EXPECT_EQ(variety_dim(md("A4[2]")), 6u);
    EXPECT_EQ(ambient_dim(md("A4[2]")), 9);
    EXPECT_EQ(variety_dim(md("E6[1]")), 16u);
    EXPECT_EQ(ambient_dim(md("E6[1]")), 26);
    EXPECT_EQ(variety_dim(md("E7[7]")), 27u);
    EXPECT_EQ(ambient_dim(md("E7[7]")), 55);
    EXPECT_EQ(variety_dim(md("E8[8]")), 57u);
    EXPECT_EQ(ambient_dim(md("E8[8]")), 247);
    EXPECT_EQ(variety_dim(md("D6[6]")), 15u);
    EXPECT_EQ(ambient_dim(md("A1[1^2]")), 2);
    EXPECT_EQ(ambient_dim(md("A1[1]xA2[1]")), 5);
    EXPECT_EQ(algebra_dim(md("A1[1]xA2[1]")), 11u);
}

TEST(Diagram, GrassmannianProperty) {
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            const auto d = md("A" + std::to_string(n) + "[" + std::to_string(k) + "]");
            EXPECT_EQ(variety_dim(d), static_cast<std::size_t>(k * (n + 1 - k)));
            EXPECT_EQ(ambient_dim(d), Z(binom(n + 1, k) - 1));
        }
}

TEST(Diagram, AsymptoticDirections) {
    EXPECT_TRUE(asymptotic_directions(md("D7[4]")).equivalent(md("A3[1]xA3[2]")));
    EXPECT_TRUE(asymptotic_directions(md("E7[7]")).equivalent(md("E6[6]")));
    EXPECT_TRUE(asymptotic_directions(md("E8[8]")).equivalent(md("E7[7]")));
    EXPECT_TRUE(asymptotic_directions(md("G2[2]")).equivalent(md("A1[1^3]")));
    EXPECT_TRUE(asymptotic_directions(md("A4[2]")).equivalent(md("A1[1]xA2[1]")));
    EXPECT_THROW(asymptotic_directions(md("G2[1]")), RootError);
    EXPECT_TRUE(is_short_node({'G', 2}, 1));
    EXPECT_FALSE(is_short_node({'G', 2}, 2));
}

TEST(Diagram, Folding) {
    const auto e6 = md("E6");
    const auto f = fold(e6, default_symmetry({'E', 6}));
    EXPECT_EQ(identify_type(f.system()).label(), "F4");
    const auto g = fold(md("D4"), default_symmetry({'D', 4}, 3));
    EXPECT_EQ(identify_type(g.system()).label(), "G2");
    const auto c = fold(md("A5"), default_symmetry({'A', 5}));
    EXPECT_EQ(identify_type(c.system()).label(), "C3");
    EXPECT_EQ(diagram_automorphisms({'D', 4}).size(), 6u);
    EXPECT_EQ(diagram_automorphisms({'E', 7}).size(), 1u);
}

TEST(Diagram, TitsTransform) {
    // lines through a point of P^4: P^3
    const auto t = tits_transform({'A', 4}, {1}, {2});
    EXPECT_TRUE(t.y.equivalent(md("A3[1]")));
    const auto b = kempf_bundle({'A', 4}, {1}, {1});
    EXPECT_TRUE(b.tangent);
    EXPECT_EQ(b.rank, 4);
}

TEST(Diagram, LinesAndAdjointNodes) {
    EXPECT_EQ(adjoint_nodes({'E', 8}), (std::vector<int>{8}));
    EXPECT_EQ(adjoint_nodes({'A', 4}), (std::vector<int>{1, 4}));
    EXPECT_EQ(adjoint_nodes({'D', 5}), (std::vector<int>{2}));
    // all lines on OP2: E6/P3
    EXPECT_TRUE(lines_variety(md("E6[1]")).equivalent(md("E6[3]")));
    EXPECT_EQ(variety_dim(lines_variety(md("E6[1]"))), 25u);
}

TEST(Diagram, Names) {
    EXPECT_EQ(variety_name(md("A4[2]")), "G(2,5)");
    EXPECT_EQ(variety_name(md("A2[1^2]")), "v2(P2)");
    EXPECT_EQ(variety_name(md("E6[1]")), "OP2");
    EXPECT_EQ(variety_name(md("E7[7]")), "Gw(O3,O6)");
    EXPECT_EQ(variety_name(md("D5[5]")), "S5");
}

TEST(Freudenthal, Dimensions) {
    for (long a : {1, 2, 4, 8}) {
        const auto rows = freudenthal_table(static_cast<int>(a));
        ASSERT_EQ(rows.size(), 4u);
        const std::vector<long> want{9 * a + 6, 11 * a + 9, 9 * a + 11, 6 * a + 9};
        for (std::size_t i = 0; i < 4; ++i) {
            EXPECT_EQ(rows[i].expected, want[i]);
            EXPECT_EQ(static_cast<long>(rows[i].dim), want[i]);
            ASSERT_TRUE(rows[i].chosen.has_value());
            EXPECT_EQ(static_cast<long>(variety_dim(*rows[i].chosen)), want[i]);
        }
    }
}

TEST(Freudenthal, GeometricSquare) {
    const auto sq = geometric_magic_square();
    const std::vector<long> as{1, 2, 4, 8};
    for (std::size_t c = 0; c < 4; ++c) {
        const long a = as[c];
        EXPECT_EQ(static_cast<long>(sq[0][c].dim), 2 * a - 1);
        EXPECT_EQ(static_cast<long>(sq[1][c].dim), 2 * a);
        EXPECT_EQ(static_cast<long>(sq[2][c].dim), 3 * a + 3);
        EXPECT_EQ(static_cast<long>(sq[3][c].dim), 6 * a + 9);
        for (std::size_t r = 1; r < 4; ++r) {
            ASSERT_TRUE(sq[r][c].diagram.has_value());
            EXPECT_EQ(sq[r][c].dim, variety_dim(*sq[r][c].diagram));
            EXPECT_EQ(sq[r][c].ambient, ambient_dim(*sq[r][c].diagram));
        }
    }
}
