#include "trialis/series.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace trialis;

namespace {

struct Known {
    std::string name;
    long g, x2, y2, y2p;
};
// Weyl dimensions of the S^2 and Lambda^2 summands
const std::vector<Known> known{{"f4", 52, 1274, 1053, 324},
                               {"e6", 78, 2925, 2430, 650},
                               {"e7", 133, 8645, 7371, 1539},
                               {"e8", 248, 30380, 27000, 3875}};

}  // namespace

TEST(Deligne, KnownValues) {
    EXPECT_EQ(deligne_dim(DeligneModule::Y2, qfrac(-1, 5)), Q(27000));
    for (const auto& k : known) {
        const Q l = exceptional_algebra(k.name).lambda;
        EXPECT_EQ(deligne_dim(DeligneModule::g, l), Q(k.g)) << k.name;
        EXPECT_EQ(deligne_dim(DeligneModule::X2, l), Q(k.x2)) << k.name;
        EXPECT_EQ(deligne_dim(DeligneModule::Y2, l), Q(k.y2)) << k.name;
        EXPECT_EQ(deligne_dim(DeligneModule::Y2p, l), Q(k.y2p)) << k.name;
    }
}

TEST(Deligne, MatchesWeylOnAllExceptional) {
    for (const auto& e : exceptional_algebras()) {
        const auto rs = RootSystem::parse(e.type);
        const auto adj = rs.adjoint_weight();
        EXPECT_EQ(deligne_dim(DeligneModule::g, e.lambda), Q(weyl_dimension(rs, adj))) << e.name;
        Z alt = 0;
        for (const auto& c : square_decompose(rs, adj, Parity::alt))
            if (c.weight != adj) alt += c.dim * static_cast<long>(c.multiplicity);
        EXPECT_EQ(deligne_dim(DeligneModule::X2, e.lambda), Q(alt)) << e.name;
    }
}

TEST(Deligne, YkMagnitudes) {
    for (const auto& [name, kmax] : std::vector<std::pair<std::string, int>>{{"f4", 3}, {"e6", 3}, {"e7", 3}, {"e8", 2}})
        for (int k = 1; k <= kmax; ++k) {
            const auto r = deligne_yk(k, exceptional_algebra(name).lambda);
            EXPECT_TRUE(r.agrees()) << name << " k=" << k;
            EXPECT_EQ(r.magnitude, abs(r.printed));
        }
}

TEST(Deligne, VogelPointAgreement) {
    for (const auto& e : exceptional_algebras()) {
        const VogelPoint p = deligne_vogel_point(e.lambda);
        EXPECT_EQ(vogel_dim(VogelModule::g, p), deligne_dim(DeligneModule::g, e.lambda)) << e.name;
        EXPECT_EQ(vogel_dim(VogelModule::X2, p), deligne_dim(DeligneModule::X2, e.lambda)) << e.name;
        EXPECT_EQ(vogel_dim(VogelModule::Y2, p), deligne_dim(DeligneModule::Y2, e.lambda)) << e.name;
    }
}

TEST(Vogel, ProjectiveInvariance) {
    const VogelPoint p = vogel_exc_point("e8");
    const VogelPoint q{p.alpha * 3, p.beta * 3, p.gamma * 3};
    const VogelPoint r{p.gamma, p.alpha, p.beta};
    EXPECT_TRUE(p.projectively_equal(q));
    EXPECT_TRUE(p.projectively_equal(r));
    for (auto m : {VogelModule::g, VogelModule::X2, VogelModule::Y2, VogelModule::Y2p, VogelModule::Y2pp}) {
        EXPECT_EQ(vogel_dim(m, p), vogel_dim(m, q)) << module_name(m);
    }
    EXPECT_EQ(vogel_dim(VogelModule::g, r), Q(248));
}

TEST(Vogel, TableShape) {
    const auto t = vogel_table();
    std::map<std::string, int> per;
    for (const auto& r : t) per[r.series]++;
    EXPECT_EQ(per["SL"], 1);
    EXPECT_EQ(per["OSP"], 1);
    EXPECT_GE(per["EXC"], 7);
    // sl_n line: dim g = n^2 - 1
    for (long n = 2; n < 8; ++n) EXPECT_EQ(vogel_dim(VogelModule::g, {-2, 2, Q(n)}), Q(n * n - 1));
    // so_n line
    for (long n = 5; n < 12; ++n) EXPECT_EQ(vogel_dim(VogelModule::g, {-2, 4, Q(n - 4)}), Q(n * (n - 1) / 2));
}

TEST(Vogel, PoleRaises) {
    EXPECT_THROW(deligne_dim(DeligneModule::g, Q(0)), PoleError);
}

TEST(Subexceptional, CorrectedMatchesWeyl) {
    for (int a : {1, 2, 4, 8}) {
        const auto alg = subexceptional_algebra(a);
        const auto rs = RootSystem::parse(alg.type);
        const auto d = subexceptional_dims(Q(a), 1);
        EXPECT_EQ(d.g, Q(weyl_dimension(rs, alg.g))) << a;
        EXPECT_EQ(d.V, Q(weyl_dimension(rs, alg.v))) << a;
        EXPECT_EQ(d.V2, Q(weyl_dimension(rs, alg.v2))) << a;
        for (long k = 1; k <= 4; ++k) {
            Weight w = alg.v;
            for (auto& x : w) x *= k;
            EXPECT_EQ(subexceptional_vk_corrected(Q(a), k), Q(weyl_dimension(rs, w))) << a << " k=" << k;
        }
    }
    EXPECT_EQ(subexceptional_dims(Q(8), 1).V, Q(56));
    EXPECT_EQ(subexceptional_dims(Q(8), 1).g, Q(133));
}

TEST(Subexceptional, GeneratingFunction) {
    for (int a : {2, 4, 8})
        for (const auto& t : symmetric_power_series_check(a, 3)) EXPECT_TRUE(t.ok()) << a << " k=" << t.k;
}

TEST(Binomial, RationalTop) {
    EXPECT_EQ(binomial(Q(5), 2), Q(10));
    EXPECT_EQ(binomial(qfrac(1, 2), 2), qfrac(-1, 8));
    EXPECT_EQ(binomial(Q(7), 0), Q(1));
}

TEST(TrialityModel, SeriesDimsMatchWeyl) {
    for (int a : {1, 2, 4, 8}) {
        const auto rs = RootSystem::parse(series_type(a));
        for (const std::array<long, 4>& pqrs : std::vector<std::array<long, 4>>{
                 {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}}) {
            EXPECT_EQ(exceptional_series_dim(pqrs, Q(a)), Q(weyl_dimension(rs, cone_weight(pqrs, a))))
                << a << " " << pqrs[0] << pqrs[1] << pqrs[2] << pqrs[3];
        }
    }
    EXPECT_EQ(exceptional_series_dim({1, 0, 0, 0}, Q(8)), Q(248));
    EXPECT_EQ(cone_generator_weights(8)[0], RootSystem::standard('E', 8).adjoint_weight());
}

TEST(Casimir, RatioTables) {
    for (const std::string n : {"f4", "e6", "e7", "e8"})
        for (const auto& r : casimir_ratio_table(n)) EXPECT_TRUE(r.ok) << n << " " << r.space << " " << r.module;
}

TEST(Duality, Exceptional) {
    for (const std::string n : {"f4", "e6", "e7", "e8"}) {
        const auto r = duality_check(n);
        EXPECT_TRUE(r.g_invariant) << n;
        EXPECT_TRUE(r.x2_invariant) << n;
        EXPECT_TRUE(r.y2_matches) << n;
    }
}
