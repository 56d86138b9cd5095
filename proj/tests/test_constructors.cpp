#include "trialis/constructors.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace trialis;

namespace {

const RoundsResult& minuscule() {
    static const RoundsResult r = run_rounds(Mode::minuscule, 6);
    return r;
}

const RoundsResult& adjoint() {
    static const RoundsResult r = run_rounds(Mode::adjoint, 6);
    return r;
}

MarkedDiagram md(const std::string& s) { return MarkedDiagram::parse(s); }

}  // namespace

TEST(Admissibility, Minuscule) {
    EXPECT_TRUE(minuscule_admissible(md("A1[1]")));
    EXPECT_TRUE(minuscule_admissible(md("A1[1]xA2[1]")));
    EXPECT_TRUE(minuscule_admissible(md("D5[5]")));
    EXPECT_TRUE(minuscule_admissible(md("E6[1]")));
    EXPECT_FALSE(minuscule_admissible(md("A1[1^3]")));
    EXPECT_FALSE(minuscule_admissible(md("D6[6]")));
}

TEST(Admissibility, Adjoint) {
    EXPECT_TRUE(adjoint_admissible(md("A1[1^3]")));
    EXPECT_TRUE(adjoint_admissible(md("D6[6]")));
    EXPECT_TRUE(adjoint_admissible(md("E7[7]")));
    EXPECT_FALSE(adjoint_admissible(md("A1[1]")));
    const auto t = tangent_test(md("D6[6]"));
    EXPECT_EQ(t.codim, 1);
}

TEST(InverseSurgery, Outputs) {
    const auto a = identify_output(md("A1[1]xA2[1]"), Mode::minuscule);
    EXPECT_TRUE(a.x.equivalent(md("A4[2]")));
    EXPECT_EQ(a.algebra, "sl5");
    EXPECT_TRUE(a.bookkeeping);
    const auto e = identify_output(md("E7[7]"), Mode::adjoint);
    EXPECT_TRUE(e.x.equivalent(md("E8[8]")));
    EXPECT_EQ(e.algebra, "e8");
    EXPECT_EQ(e.g_dim, 248u);
    EXPECT_EQ(e.h_dim, 133u);
    EXPECT_EQ(e.t_dim, 56);
    EXPECT_TRUE(e.bookkeeping);
    const auto g = identify_output(md("A1[1^3]"), Mode::adjoint);
    EXPECT_EQ(g.algebra, "g2");
    EXPECT_THROW(identify_output(md("A1[1^3]"), Mode::minuscule), RootError);
}

TEST(InverseSurgery, RoundTripProperty) {
    // asymptotic directions undo inverse surgery on every admissible row
    for (const auto& v : minuscule().rounds)
        for (const auto& r : v) {
            EXPECT_TRUE(r.round_trip) << r.y.str();
            EXPECT_TRUE(asymptotic_directions(r.x).equivalent(r.y)) << r.y.str();
            EXPECT_TRUE(r.bookkeeping) << r.y.str();
            EXPECT_EQ(r.y_ambient, ambient_dim(r.y));
            EXPECT_EQ(r.x_ambient, ambient_dim(r.x));
        }
    for (const auto& r : adjoint().rounds.back()) {
        EXPECT_TRUE(r.round_trip) << r.y.str();
        EXPECT_TRUE(r.bookkeeping) << r.y.str();
    }
}

TEST(Rounds, FirstTwo) {
    const auto& r = minuscule().rounds;
    ASSERT_GE(r.size(), 2u);
    std::set<std::string> one, two;
    for (const auto& row : r[0]) one.insert(row.y_name + "->" + row.x_name);
    for (const auto& row : r[1]) two.insert(row.y_name + "->" + row.x_name);
    EXPECT_EQ(one, (std::set<std::string>{"P1->P2", "v2(P1)->Q3", "P1xP1->Q4"}));
    EXPECT_EQ(two, (std::set<std::string>{"P2->P3", "Q3->Q5", "P1xP2->G(2,5)", "Q4->Q6", "v2(P2)->Gw(3,6)",
                                          "P2xP2->G(3,6)"}));
}

TEST(Rounds, TrashStaysInadmissible) {
    const auto& res = minuscule();
    EXPECT_GT(res.trash.size(), 0u);
    for (const auto& t : res.trash) EXPECT_FALSE(minuscule_admissible(t)) << t.str();
    for (const auto& v : res.rounds)
        for (const auto& row : v)
            for (const auto& t : res.trash) EXPECT_FALSE(row.y.equivalent(t)) << t.str();
}

TEST(Rounds, Deterministic) {
    const auto again = run_rounds(Mode::minuscule, 6);
    EXPECT_EQ(render_round_table(again.rounds[1]), render_round_table(minuscule().rounds[1]));
    EXPECT_EQ(render_stable_table(again.rounds[5]), render_stable_table(minuscule().rounds[5]));
}

TEST(Rounds, StableFamiliesAndCatalan) {
    std::set<StableFamily> seen;
    for (const auto& row : minuscule().rounds[5]) {
        bool ok = false;
        const auto f = stable_family(row, &ok);
        if (f == StableFamily::none) continue;
        EXPECT_TRUE(ok) << row.y.str() << " " << family_name(f);
        seen.insert(f);
    }
    EXPECT_EQ(seen.size(), 6u);
    // spinor ambient of v2(P^{m-1}) -> Gw(m,2m): C_{m+1} - 1
    for (const auto& row : minuscule().rounds[5])
        if (stable_family(row) == StableFamily::veronese) {
            const long m = static_cast<long>(row.y.system().rank()) + 1;
            const Z catalan = binom(2 * m + 2, m + 1) / (m + 2);
            EXPECT_EQ(row.x_ambient, catalan - 1) << row.y.str();
        }
}

TEST(Rounds, TerminalPath) {
    std::vector<RoundRow> all;
    for (const auto& v : minuscule().rounds) all.insert(all.end(), v.begin(), v.end());
    EXPECT_EQ(render_terminal_path(all, "P1xP2"), "P1xP2 -> G(2,5) -> S5 -> OP2 -> Gw(O3,O6)\n");
}

TEST(Adjoint, Exceptionals) {
    std::set<std::string> algebras;
    for (const auto& r : adjoint().rounds.back()) algebras.insert(r.algebra);
    for (const std::string e : {"g2", "f4", "e6", "e7", "e8", "so7", "so12"}) EXPECT_TRUE(algebras.count(e)) << e;
    const auto rows = adjoint_table_rows(adjoint().rounds.back());
    EXPECT_EQ(rows.size(), 8u);
}

TEST(Adjoint, NonfundamentalAmbient) {
    for (int k = 3; k <= 9; ++k) EXPECT_EQ(nonfundamental_ambient('A', k - 1), 2 * k - 5);
    for (int m = 2; m <= 8; ++m) EXPECT_EQ(nonfundamental_ambient('C', m), 2 * m - 3);
}

TEST(Render, TableAlignment) {
    EXPECT_EQ(render_table({{"a", "bb", ""}, {"ccc", "d", "e"}}), "a    bb\nccc  d   e\n");
    EXPECT_EQ(algebra_label({'D', 6}), "so12");
    EXPECT_EQ(algebra_label({'C', 3}), "sp6");
    EXPECT_EQ(algebra_label({'F', 4}), "f4");
}
