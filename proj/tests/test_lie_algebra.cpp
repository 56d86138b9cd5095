#include "trialis/lie_algebra.hpp"

#include <gtest/gtest.h>

#include <atomic>
#include <sstream>

using namespace trialis;

namespace {

// h, e, f
LieAlgebra sl2() {
    LieAlgebra l(3);
    l.set_bracket(0, 1, {{1, 2}});
    l.set_bracket(0, 2, {{2, -2}});
    l.set_bracket(1, 2, {{0, 1}});
    return l;
}

// x, y, z with [x,y] = z
LieAlgebra heisenberg() {
    LieAlgebra l(3);
    l.set_bracket(0, 1, {{2, 1}});
    return l;
}

}  // namespace

TEST(LieAlgebra, Antisymmetry) {
    const auto l = sl2();
    EXPECT_TRUE(l.antisymmetric());
    EXPECT_EQ(l.bracket(1, 0), (SparseVec{{1, -2}}));
}

TEST(LieAlgebra, JacobiDetectsViolation) {
    EXPECT_TRUE(sl2().verify_jacobi().ok);
    EXPECT_TRUE(heisenberg().verify_jacobi().ok);
    LieAlgebra bad = sl2();
    bad.set_bracket(1, 2, {{0, 1}, {1, 1}});
    const auto r = bad.verify_jacobi();
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.i, 0u);
}

TEST(LieAlgebra, KillingForm) {
    const Matrix k = sl2().killing_form();
    EXPECT_EQ(k(0, 0), Q(8));
    EXPECT_EQ(k(1, 2), Q(4));
    EXPECT_EQ(inertia(k), (Inertia{2, 1, 0}));
    EXPECT_EQ(inertia(heisenberg().killing_form()), (Inertia{0, 0, 3}));
}

TEST(LieAlgebra, AdIsRepresentation) {
    const auto l = sl2();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Vec x(3), y(3);
            x[i] = 1;
            y[j] = 1;
            EXPECT_EQ(commutator(l.ad(x), l.ad(y)), l.ad(l.bracket(x, y)));
        }
    Vec h(3);
    h[0] = 1;
    EXPECT_EQ(l.ad_sparse(h).apply(Vec{0, 1, 0}), (Vec{0, 2, 0}));
}

TEST(LieAlgebra, CenterDerivedCentralizer) {
    const auto s = sl2(), n = heisenberg();
    EXPECT_EQ(s.center().dim(), 0u);
    EXPECT_EQ(s.derived().dim(), 3u);
    EXPECT_EQ(n.center().dim(), 1u);
    EXPECT_EQ(n.derived().dim(), 1u);
    EXPECT_EQ(n.killing_radical().dim(), 3u);
    EXPECT_EQ(s.killing_radical().dim(), 0u);
    EXPECT_EQ(s.centralizer(std::vector<Vec>{{1, 0, 0}}).dim(), 1u);
    EXPECT_EQ(n.centralizer(std::vector<Vec>{{1, 0, 0}}).dim(), 2u);
}

TEST(LieAlgebra, SubalgebraRestriction) {
    const auto s = sl2();
    const Subspace b = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
    EXPECT_TRUE(s.is_subalgebra(b));
    EXPECT_FALSE(s.is_subalgebra(Subspace::span(3, {{0, 1, 0}, {0, 0, 1}})));
    const auto r = s.restrict_to(b);
    EXPECT_EQ(r.dim(), 2u);
    EXPECT_TRUE(r.verify_jacobi().ok);
    EXPECT_EQ(r.derived().dim(), 1u);
}

TEST(LieAlgebra, Homomorphisms) {
    const auto s = sl2();
    // Chevalley involution h -> -h, e -> -f, f -> -e
    Matrix c(3, 3);
    c(0, 0) = -1;
    c(2, 1) = -1;
    c(1, 2) = -1;
    EXPECT_TRUE(s.is_automorphism(c));
    EXPECT_FALSE(s.is_automorphism(Matrix::diag({1, 2, 1})));
    EXPECT_TRUE(s.is_automorphism(Matrix::diag({1, 2, qfrac(1, 2)})));
}

TEST(LieAlgebra, FileRoundTrip) {
    auto s = sl2();
    s.set_label(0, "h");
    s.set_label(1, "e");
    s.set_label(2, "f");
    std::stringstream ss;
    s.write(ss);
    const auto r = LieAlgebra::read(ss);
    EXPECT_EQ(r, s);
    EXPECT_EQ(r.labels()[1], "e");
    std::istringstream bad("1 2 0 1\n");
    EXPECT_THROW(LieAlgebra::read(bad), LinalgError);
}

TEST(LieAlgebra, ScaleLcm) {
    LieAlgebra l(2);
    l.set_bracket(0, 1, {{1, qfrac(1, 6)}});
    EXPECT_EQ(l.scale_lcm(), Q(6));
}

TEST(Parallel, CoversEveryIndex) {
    EXPECT_GE(worker_count(), 1u);
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Sparse, DenseRoundTrip) {
    const Vec v{0, 3, 0, qfrac(-1, 2)};
    const auto s = to_sparse(v);
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(to_dense(s, 4), v);
}
