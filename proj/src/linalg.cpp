#include "trialis/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace trialis {

// ---- Matrix ----

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw LinalgError("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::diag(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw LinalgError("apply: size mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Q& x = (*this)(i, j);
            if (sgn(x) != 0 && sgn(v[j]) != 0) r[i] += x * v[j];
        }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Q& x) { return sgn(x) == 0; });
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Q Matrix::trace() const {
    Q t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw LinalgError("product: size mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Q& x = (*this)(i, k);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (sgn(o(k, j)) != 0) r(i, j) += x * o(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw LinalgError("sum: size mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
}

Matrix Matrix::scaled(const Q& s) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---- SparseMatrix ----

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
    if (m.rows() != m.cols()) throw LinalgError("sparse: not square");
    SparseMatrix s(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (sgn(m(i, j)) != 0) s.rows[i].emplace_back(j, m(i, j));
    return s;
}

Vec SparseMatrix::apply(const Vec& v) const {
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [j, x] : rows[i])
            if (sgn(v[j]) != 0) r[i] += x * v[j];
    return r;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Q& x) {
    if (sgn(x) == 0) return;
    for (auto& [c, y] : rows[i])
        if (c == j) {
            y += x;
            return;
        }
    rows[i].emplace_back(j, x);
}

// ---- elimination ----

namespace {

// in-place rref on row vectors; returns pivots, drops zero rows
std::vector<std::size_t> rref_rows(std::vector<Vec>& m, std::size_t ncols) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        if (m[r][c] != 1) {
            Q inv = 1 / m[r][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (sgn(m[r][j]) != 0) m[r][j] *= inv;
        }
        std::vector<std::size_t> nz;
        for (std::size_t j = c + 1; j < ncols; ++j)
            if (sgn(m[r][j]) != 0) nz.push_back(j);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            Q f = m[i][c];
            m[i][c] = 0;
            for (std::size_t j : nz) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    m.resize(r);
    return piv;
}

std::vector<Vec> rows_of(const Matrix& m) {
    std::vector<Vec> rs;
    rs.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rs.push_back(m.row(i));
    return rs;
}

}  // namespace

Rref rref(const Matrix& m) {
    auto rs = rows_of(m);
    auto piv = rref_rows(rs, m.cols());
    return {Matrix::from_rows(rs, m.cols()), piv};
}

std::size_t rank(const Matrix& m) {
    auto rs = rows_of(m);
    return rref_rows(rs, m.cols()).size();
}

std::size_t rank_of(const std::vector<Vec>& vs, std::size_t n) {
    auto rs = vs;
    return rref_rows(rs, n).size();
}

std::vector<Vec> solve_kernel(const Matrix& m) {
    auto rs = rows_of(m);
    auto piv = rref_rows(rs, m.cols());
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        Vec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rs[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw LinalgError("solve: size mismatch");
    std::vector<Vec> rs;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vec r = a.row(i);
        r.push_back(b[i]);
        rs.push_back(std::move(r));
    }
    auto piv = rref_rows(rs, a.cols() + 1);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = rs[i][a.cols()];
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw LinalgError("inverse: not square");
    std::size_t n = m.rows();
    std::vector<Vec> rs;
    for (std::size_t i = 0; i < n; ++i) {
        Vec r = m.row(i);
        r.resize(2 * n);
        r[n + i] = 1;
        rs.push_back(std::move(r));
    }
    auto piv = rref_rows(rs, 2 * n);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rs[i][n + j];
    return inv;
}

// ---- Subspace ----

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vs) {
    Subspace s(ambient);
    s.basis_ = vs;
    for (auto& v : s.basis_)
        if (v.size() != ambient) throw LinalgError("span: vector length mismatch");
    s.pivots_ = rref_rows(s.basis_, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        Vec v(ambient);
        v[i] = 1;
        s.basis_.push_back(std::move(v));
        s.pivots_.push_back(i);
    }
    return s;
}

Vec Subspace::coords_unchecked(const Vec& v) const {
    Vec c(pivots_.size());
    for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

Vec Subspace::combine(const Vec& c) const {
    Vec v(n_);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (sgn(c[k]) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (sgn(basis_[k][j]) != 0) v[j] += c[k] * basis_[k][j];
    }
    return v;
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
    if (v.size() != n_) throw LinalgError("coords: length mismatch");
    Vec c = coords_unchecked(v);
    if (combine(c) != v) return std::nullopt;
    return c;
}

bool Subspace::contains(const Subspace& o) const {
    for (const auto& v : o.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    auto vs = basis_;
    vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
    return span(n_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
    // x = sum a_i u_i = sum b_j w_j
    std::size_t p = dim(), q = o.dim();
    Matrix m(n_, p + q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t r = 0; r < n_; ++r) m(r, i) = basis_[i][r];
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t r = 0; r < n_; ++r) m(r, p + j) = -o.basis_[j][r];
    std::vector<Vec> vs;
    for (const auto& k : solve_kernel(m)) vs.push_back(combine(Vec(k.begin(), k.begin() + p)));
    return span(n_, vs);
}

bool Subspace::operator==(const Subspace& o) const {
    return n_ == o.n_ && pivots_ == o.pivots_ && basis_ == o.basis_;
}

// ---- inertia ----

std::vector<std::vector<std::size_t>> block_components(const Matrix& m) {
    std::size_t n = m.rows();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && sgn(m(i, j)) != 0) parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [k, g] : groups) out.push_back(std::move(g));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

Inertia inertia_dense(std::vector<Vec> a) {
    std::size_t n = a.size();
    Inertia res;
    std::vector<bool> done(n, false);
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && sgn(a[i][i]) != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // zero diagonal: x_i -> x_i + x_j makes a_ii = 2 a_ij
            std::size_t pi = n, pj = n;
            for (std::size_t i = 0; i < n && pi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && sgn(a[i][j]) != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            }
            if (pi == n) break;
            for (std::size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            p = pi;
        }
        if (sgn(a[p][p]) > 0) ++res.pos;
        else ++res.neg;
        done[p] = true;
        --remaining;
        std::vector<std::size_t> nz;
        for (std::size_t k = 0; k < n; ++k)
            if (!done[k] && sgn(a[p][k]) != 0) nz.push_back(k);
        Q inv = 1 / a[p][p];
        for (std::size_t i : nz) {
            Q f = a[i][p] * inv;
            for (std::size_t k : nz) a[i][k] -= f * a[p][k];
        }
    }
    res.zero = n - res.pos - res.neg;
    return res;
}

}  // namespace

Inertia inertia(const Matrix& f) {
    if (!f.is_symmetric()) throw LinalgError("inertia: form is not symmetric");
    Inertia total;
    for (const auto& comp : block_components(f)) {
        std::vector<Vec> a(comp.size(), Vec(comp.size()));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j) a[i][j] = f(comp[i], comp[j]);
        Inertia b = inertia_dense(std::move(a));
        total.pos += b.pos;
        total.neg += b.neg;
        total.zero += b.zero;
    }
    return total;
}

// ---- characteristic polynomial & eigenvalues ----

std::vector<Q> charpoly(const Matrix& m) {
    if (m.rows() != m.cols()) throw LinalgError("charpoly: not square");
    std::size_t n = m.rows();
    std::vector<Vec> h = rows_of(m);
    // reduce to upper Hessenberg form by similarity
    for (std::size_t c = 0; c + 2 <= n; ++c) {
        std::size_t mrow = c + 1;
        std::size_t i = mrow;
        while (i < n && sgn(h[i][c]) == 0) ++i;
        if (i == n) continue;
        if (i != mrow) {
            std::swap(h[i], h[mrow]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][mrow]);
        }
        Q t = h[mrow][c];
        for (std::size_t r = mrow + 1; r < n; ++r) {
            if (sgn(h[r][c]) == 0) continue;
            Q u = h[r][c] / t;
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(h[mrow][k]) != 0) h[r][k] -= u * h[mrow][k];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(h[k][r]) != 0) h[k][mrow] += u * h[k][r];
        }
    }
    // p_k = charpoly of leading k x k block
    std::vector<std::vector<Q>> p(n + 1);
    p[0] = {Q(1)};
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Q> cur(k + 1);
        for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
            cur[d + 1] += p[k - 1][d];
            cur[d] -= h[k - 1][k - 1] * p[k - 1][d];
        }
        Q prod = 1;
        for (std::size_t i = k - 1; i >= 1; --i) {
            prod *= h[i][i - 1];
            if (sgn(prod) == 0) break;
            Q coef = prod * h[i - 1][k - 1];
            if (sgn(coef) != 0)
                for (std::size_t d = 0; d < p[i - 1].size(); ++d) cur[d] -= coef * p[i - 1][d];
        }
        p[k] = std::move(cur);
    }
    return p[n];
}

namespace {

// integer polynomial evaluation
Z eval_poly(const std::vector<Z>& c, const Z& x) {
    Z r = 0;
    for (std::size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

std::vector<Z> deflate(const std::vector<Z>& c, const Z& root) {
    // divide by (x - root)
    std::size_t n = c.size() - 1;
    std::vector<Z> q(n);
    Z carry = 0;
    for (std::size_t i = n; i-- > 0;) {
        carry = c[i + 1] + carry * root;
        q[i] = carry;
    }
    return q;
}

}  // namespace

std::vector<std::pair<Q, std::size_t>> rational_eigenvalues(const Matrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return {};
    Z d = lcm_denominators(m.data());
    Matrix mi = m.scaled(Q(d));
    // Gershgorin bound on the integer matrix
    Z bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Z s = 0;
        for (std::size_t j = 0; j < n; ++j) s += abs(mi(i, j).get_num());
        if (s > bound) bound = s;
    }
    auto cq = charpoly(mi);
    std::vector<Z> c;
    for (auto& x : cq) {
        if (x.get_den() != 1) throw LinalgError("charpoly of integer matrix not integral");
        c.push_back(x.get_num());
    }
    std::vector<std::pair<Q, std::size_t>> out;
    std::size_t zeros = 0;
    while (c.size() > 1 && c[0] == 0) {
        c.erase(c.begin());
        ++zeros;
    }
    if (zeros) out.emplace_back(Q(0), zeros);
    if (c.size() > 1) {
        if (bound > Z(1000000)) throw LinalgError("eigenvalue search bound too large");
        long b = bound.get_si();
        for (long x = -b; x <= b && c.size() > 1; ++x) {
            if (x == 0) continue;
            Z zx = x;
            std::size_t mult = 0;
            while (c.size() > 1 && eval_poly(c, zx) == 0) {
                c = deflate(c, zx);
                ++mult;
            }
            if (mult) out.emplace_back(Q(zx, d), mult);
        }
    }
    if (c.size() > 1) throw LinalgError("matrix has irrational eigenvalues");
    for (auto& [v, k] : out) v.canonicalize();
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

// ---- simultaneous eigenspaces ----

namespace {

struct BlockEigen {
    Q value;
    std::vector<Vec> vecs;  // in block-local coordinates of the full restricted matrix
};

// eigen decomposition of a square matrix that must be Q-diagonalizable
std::vector<std::pair<Q, std::vector<Vec>>> diagonalize(const Matrix& r) {
    std::size_t m = r.rows();
    std::map<Q, std::vector<Vec>> acc;
    for (const auto& comp : block_components(r)) {
        std::size_t b = comp.size();
        Matrix blk(b, b);
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j) blk(i, j) = r(comp[i], comp[j]);
        auto evs = rational_eigenvalues(blk);
        std::size_t got = 0;
        for (auto& [lam, mult] : evs) {
            Matrix s = blk;
            for (std::size_t i = 0; i < b; ++i) s(i, i) -= lam;
            auto ker = solve_kernel(s);
            if (ker.size() != mult) throw LinalgError("operator not diagonalizable");
            got += ker.size();
            for (auto& k : ker) {
                Vec full(m);
                for (std::size_t i = 0; i < b; ++i) full[comp[i]] = k[i];
                acc[lam].push_back(std::move(full));
            }
        }
        if (got != b) throw LinalgError("operator not diagonalizable");
    }
    return {acc.begin(), acc.end()};
}

}  // namespace

std::vector<Eigenspace> simultaneous_eigenspaces(const std::vector<SparseMatrix>& ms,
                                                 const Subspace& start) {
    std::vector<Eigenspace> spaces{{Vec{}, start}};
    for (const auto& op : ms) {
        if (op.n != start.ambient()) throw LinalgError("eigenspaces: size mismatch");
        std::vector<Eigenspace> next;
        for (auto& es : spaces) {
            const Subspace& w = es.space;
            std::size_t m = w.dim();
            Matrix r(m, m);
            for (std::size_t j = 0; j < m; ++j) {
                Vec img = op.apply(w.basis()[j]);
                auto c = w.coords(img);
                if (!c) throw LinalgError("eigenspaces: subspace not invariant (operators do not commute?)");
                for (std::size_t i = 0; i < m; ++i) r(i, j) = (*c)[i];
            }
            for (auto& [lam, vecs] : diagonalize(r)) {
                std::vector<Vec> amb;
                amb.reserve(vecs.size());
                for (auto& c : vecs) amb.push_back(w.combine(c));
                Vec label = es.label;
                label.push_back(lam);
                next.push_back({label, Subspace::span(w.ambient(), amb)});
            }
        }
        spaces = std::move(next);
    }
    std::sort(spaces.begin(), spaces.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
    return spaces;
}

std::vector<Eigenspace> simultaneous_eigenspaces(const std::vector<SparseMatrix>& ms,
                                                 std::size_t n) {
    return simultaneous_eigenspaces(ms, Subspace::full(n));
}

std::vector<Eigenspace> simultaneous_eigenspaces(const std::vector<Matrix>& ms) {
    if (ms.empty()) throw LinalgError("eigenspaces: no operators");
    std::vector<SparseMatrix> sp;
    for (auto& m : ms) sp.push_back(SparseMatrix::from_dense(m));
    return simultaneous_eigenspaces(sp, ms[0].rows());
}

}  // namespace trialis

namespace trialis {

std::vector<Vec> sparse_kernel(std::size_t ncols, const std::vector<SparseRow>& rows) {
    // echelon rows keyed by leading column, leading coefficient 1
    std::vector<SparseRow> piv(ncols);
    std::vector<bool> has(ncols, false);
    for (const auto& in : rows) {
        std::map<std::size_t, Q> r;
        for (auto& [c, v] : in)
            if (sgn(v) != 0) r[c] += v;
        while (!r.empty()) {
            auto it = r.begin();
            if (sgn(it->second) == 0) {
                r.erase(it);
                continue;
            }
            std::size_t lead = it->first;
            if (!has[lead]) {
                Q inv = 1 / it->second;
                SparseRow row;
                for (auto& [c, v] : r)
                    if (sgn(v) != 0) row.emplace_back(c, v * inv);
                piv[lead] = std::move(row);
                has[lead] = true;
                break;
            }
            Q f = it->second;
            for (auto& [c, v] : piv[lead]) {
                auto jt = r.find(c);
                if (jt == r.end()) r.emplace(c, -f * v);
                else {
                    jt->second -= f * v;
                    if (sgn(jt->second) == 0) r.erase(jt);
                }
            }
        }
    }
    std::vector<Vec> ker;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (has[f]) continue;
        Vec x(ncols);
        x[f] = 1;
        for (std::size_t p = ncols; p-- > 0;) {
            if (!has[p]) continue;
            Q s = 0;
            for (auto& [c, v] : piv[p])
                if (c != p && sgn(x[c]) != 0) s += v * x[c];
            x[p] = -s;
        }
        ker.push_back(std::move(x));
    }
    return ker;
}

}  // namespace trialis
