#include "trialis/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace trialis;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST(Rational, PrintAndParse) {
    EXPECT_EQ(to_string(qfrac(6, -4)), "-3/2");
    EXPECT_EQ(to_string(qfrac(8, 4)), "2");
    EXPECT_EQ(parse_rational("-3/2"), qfrac(-3, 2));
    EXPECT_EQ(parse_rational("10/5"), Q(2));
    for (long p = -7; p <= 7; ++p)
        for (long q = 1; q <= 5; ++q) EXPECT_EQ(parse_rational(to_string(qfrac(p, q))), qfrac(p, q));
}

TEST(Rational, RejectsGarbage) {
    EXPECT_ANY_THROW(parse_rational("1/0"));
    EXPECT_ANY_THROW(parse_rational("abc"));
}

TEST(Rational, Binomials) {
    EXPECT_EQ(binom(10, 3), 120);
    EXPECT_EQ(binom(5, 7), 0);
    EXPECT_EQ(binom(5, -1), 0);
    // (x+1)...(x+k)/k! agrees with C(x+k, k) at integers
    for (long x = 0; x < 8; ++x)
        for (long k = 0; k < 6; ++k) EXPECT_EQ(binom_poly(Q(x), k), Q(binom(x + k, k)));
    EXPECT_EQ(binom_poly(qfrac(1, 2), 2), qfrac(15, 8));
    EXPECT_EQ(lcm_denominators({qfrac(1, 4), qfrac(5, 6), Q(3)}), 12);
}

TEST(Matrix, RankAndKernel) {
    const Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    EXPECT_EQ(rank(m), 2u);
    const auto k = solve_kernel(m);
    ASSERT_EQ(k.size(), 1u);
    for (const auto& q : m.apply(k[0])) EXPECT_EQ(q, 0);
}

TEST(Matrix, InverseProperty) {
    std::mt19937_64 rng(7);
    int tested = 0;
    for (int t = 0; t < 20; ++t) {
        const Matrix m = random_matrix(rng, 5, 5);
        const auto inv = inverse(m);
        if (rank(m) < 5) {
            EXPECT_FALSE(inv.has_value());
            continue;
        }
        ASSERT_TRUE(inv.has_value());
        EXPECT_EQ(m * *inv, Matrix::identity(5));
        EXPECT_EQ(*inv * m, Matrix::identity(5));
        ++tested;
    }
    EXPECT_GT(tested, 10);
}

TEST(Matrix, SolveProperty) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        const Matrix a = random_matrix(rng, 4, 6);
        const Vec x = random_matrix(rng, 6, 1).col(0);
        const Vec b = a.apply(x);
        const auto y = solve(a, b);
        ASSERT_TRUE(y.has_value());
        EXPECT_EQ(a.apply(*y), b);
    }
    const Matrix z = Matrix::from_rows({{1, 1}, {1, 1}}, 2);
    EXPECT_FALSE(solve(z, Vec{1, 2}).has_value());
}

TEST(Matrix, SparseKernelMatchesDense) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        const Matrix m = random_matrix(rng, 6, 9, -1, 1);
        std::vector<SparseRow> rows;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            SparseRow r;
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!is_zero(m(i, j))) r.push_back({j, m(i, j)});
            rows.push_back(r);
        }
        const auto ks = sparse_kernel(9, rows);
        EXPECT_EQ(ks.size(), 9 - rank(m));
        for (const auto& v : ks)
            for (const auto& q : m.apply(v)) EXPECT_EQ(q, 0);
        EXPECT_EQ(Subspace::span(9, ks), Subspace::span(9, solve_kernel(m)));
    }
}

TEST(Inertia, DiagonalAndHilbert) {
    EXPECT_EQ(inertia(Matrix::diag({1, -2, 0, 5})), (Inertia{2, 1, 1}));
    Matrix h(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) h(i, j) = qfrac(1, static_cast<long>(i + j + 1));
    EXPECT_EQ(inertia(h), (Inertia{5, 0, 0}));
    EXPECT_EQ(inertia(-h), (Inertia{0, 5, 0}));
}

TEST(Inertia, CongruenceInvariant) {
    std::mt19937_64 rng(5);
    const Matrix d = Matrix::diag({3, -1, 2, 0, -7});
    for (int t = 0; t < 10; ++t) {
        const Matrix p = random_matrix(rng, 5, 5);
        if (rank(p) < 5) continue;
        EXPECT_EQ(inertia(p.transpose() * d * p), (Inertia{2, 2, 1}));
    }
}

TEST(Eigen, CharpolyAndEigenvalues) {
    const Matrix m = Matrix::from_rows({{2, 1}, {1, 2}}, 2);
    EXPECT_EQ(charpoly(m), (std::vector<Q>{3, -4, 1}));
    const auto ev = rational_eigenvalues(m);
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_EQ(ev[0].second + ev[1].second, 2u);
    const Matrix rot = Matrix::from_rows({{0, -1}, {1, 0}}, 2);
    EXPECT_THROW(rational_eigenvalues(rot), LinalgError);
}

TEST(Eigen, SimultaneousDiagonal) {
    const Matrix a = Matrix::diag({1, 1, 2, 2});
    const Matrix b = Matrix::diag({0, 3, 0, 3});
    const auto es = simultaneous_eigenspaces(std::vector<Matrix>{a, b});
    EXPECT_EQ(es.size(), 4u);
    for (const auto& e : es) EXPECT_EQ(e.space.dim(), 1u);
}

TEST(Subspace, SumAndIntersection) {
    const Subspace u = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
    const Subspace w = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(u.intersect(w).dim(), 1u);
    EXPECT_EQ(u.sum(w).dim(), 3u);
    EXPECT_TRUE(u.contains(Vec{2, -3, 0}));
    EXPECT_FALSE(u.contains(Vec{0, 0, 1}));
    const auto c = u.coords(Vec{2, -3, 0});
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(u.combine(*c), (Vec{2, -3, 0}));
    EXPECT_TRUE(u.sum(w).contains(u));
}

TEST(Subspace, DimensionFormulaProperty) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 15; ++t) {
        const Matrix a = random_matrix(rng, 3, 7, -1, 1), b = random_matrix(rng, 4, 7, -1, 1);
        std::vector<Vec> ra, rb;
        for (std::size_t i = 0; i < 3; ++i) ra.push_back(a.row(i));
        for (std::size_t i = 0; i < 4; ++i) rb.push_back(b.row(i));
        const auto u = Subspace::span(7, ra), w = Subspace::span(7, rb);
        EXPECT_EQ(u.sum(w).dim() + u.intersect(w).dim(), u.dim() + w.dim());
    }
}

TEST(Matrix, BlockComponents) {
    Matrix m(4, 4);
    m(0, 2) = 1;
    m(1, 3) = 1;
    EXPECT_EQ(block_components(m).size(), 2u);
}
