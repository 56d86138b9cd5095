// Dense/sparse exact linear algebra.
#pragma once

#include "trialis/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace trialis {

using Vec = std::vector<Q>;

struct LinalgError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
    static Matrix diag(const Vec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Q& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Q& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Vec apply(const Vec& v) const;
    Matrix transpose() const;
    bool is_zero() const;
    bool is_symmetric() const;
    Q trace() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Q& s) const;
    bool operator==(const Matrix& o) const = default;

    const std::vector<Q>& data() const { return a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Q> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

// square matrix with rows of (col, value)
struct SparseMatrix {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<std::size_t, Q>>> rows;
    explicit SparseMatrix(std::size_t n_ = 0) : n(n_), rows(n_) {}
    static SparseMatrix from_dense(const Matrix& m);
    Vec apply(const Vec& v) const;
    void add(std::size_t i, std::size_t j, const Q& x);
};

struct Rref {
    Matrix r;                       // nonzero rows only
    std::vector<std::size_t> pivots;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::size_t rank_of(const std::vector<Vec>& vs, std::size_t n);
// basis of {v : m v = 0}, one vector per free column
std::vector<Vec> solve_kernel(const Matrix& m);
std::optional<Vec> solve(const Matrix& a, const Vec& b);
// kernel of a sparse system given row by row, (column, value) pairs
using SparseRow = std::vector<std::pair<std::size_t, Q>>;
std::vector<Vec> sparse_kernel(std::size_t ncols, const std::vector<SparseRow>& rows);
std::optional<Matrix> inverse(const Matrix& m);

// row-reduced span of vectors in Q^n
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : n_(ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vs);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // coordinates w.r.t. basis(); nullopt if v is outside
    std::optional<Vec> coords(const Vec& v) const;
    // coordinates read at pivots, no membership check
    Vec coords_unchecked(const Vec& v) const;
    bool contains(const Vec& v) const { return coords(v).has_value(); }
    bool contains(const Subspace& o) const;
    Vec combine(const Vec& c) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    bool operator==(const Subspace& o) const;

private:
    std::size_t n_ = 0;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

struct Inertia {
    std::size_t pos = 0, neg = 0, zero = 0;
    bool operator==(const Inertia&) const = default;
};
Inertia inertia(const Matrix& symmetric);

// monic characteristic polynomial, coefficients c[0..n] of x^0..x^n
std::vector<Q> charpoly(const Matrix& m);
// rational eigenvalues with algebraic multiplicity; throws LinalgError
// if some eigenvalue is irrational
std::vector<std::pair<Q, std::size_t>> rational_eigenvalues(const Matrix& m);

struct Eigenspace {
    Vec label;               // one eigenvalue per operator
    Subspace space;
};

// joint eigenspace decomposition of commuting operators, each
// diagonalizable over Q; throws LinalgError otherwise
std::vector<Eigenspace> simultaneous_eigenspaces(const std::vector<Matrix>& ms);
std::vector<Eigenspace> simultaneous_eigenspaces(const std::vector<SparseMatrix>& ms,
                                                 std::size_t n);
// restricted to an invariant subspace
std::vector<Eigenspace> simultaneous_eigenspaces(const std::vector<SparseMatrix>& ms,
                                                 const Subspace& start);

// connected components of the nonzero pattern of a square matrix
std::vector<std::vector<std::size_t>> block_components(const Matrix& m);

}  // namespace trialis
