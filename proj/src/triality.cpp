#include "trialis/triality.hpp"

#include <map>
#include <mutex>

namespace trialis {

Vec flatten(const MatTuple& t) {
    Vec v;
    for (auto& m : t) v.insert(v.end(), m.data().begin(), m.data().end());
    return v;
}

MatTuple unflatten(const Vec& v, std::size_t k, std::size_t n) {
    if (v.size() != k * n * n) throw LinalgError("unflatten: length mismatch");
    MatTuple t(k, Matrix(n, n));
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t[c](i, j) = v[c * n * n + i * n + j];
    return t;
}

MatTuple tuple_bracket(const MatTuple& a, const MatTuple& b) {
    MatTuple r;
    for (std::size_t c = 0; c < a.size(); ++c) r.push_back(commutator(a[c], b[c]));
    return r;
}

MatTuple tuple_add(const MatTuple& a, const MatTuple& b) {
    MatTuple r;
    for (std::size_t c = 0; c < a.size(); ++c) r.push_back(a[c] + b[c]);
    return r;
}

MatTuple tuple_scale(const MatTuple& a, const Q& s) {
    MatTuple r;
    for (auto& m : a) r.push_back(m.scaled(s));
    return r;
}

MatrixLieAlgebra::MatrixLieAlgebra(std::size_t k, std::size_t n, const std::vector<MatTuple>& spanning)
    : k_(k), n_(n), span_(k * n * n) {
    std::vector<Vec> vs;
    for (auto& t : spanning) vs.push_back(flatten(t));
    span_ = Subspace::span(k * n * n, vs);
}

bool MatrixLieAlgebra::closed_under_bracket() const {
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (!contains(tuple_bracket(element(i), element(j)))) return false;
    return true;
}

LieAlgebra MatrixLieAlgebra::structure() const {
    LieAlgebra g(dim());
    std::vector<MatTuple> els;
    for (std::size_t i = 0; i < dim(); ++i) els.push_back(element(i));
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j) {
            auto c = coords(tuple_bracket(els[i], els[j]));
            if (!c) throw LinalgError("matrix Lie algebra not closed under bracket");
            g.set_bracket(i, j, to_sparse(*c));
        }
    return g;
}

// ---- derivations ----

MatrixLieAlgebra derivations(const CompositionAlgebra& a) {
    std::size_t n = a.dim();
    std::vector<Vec> rows;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            auto ab = a.mul(p, q);
            for (std::size_t out = 0; out < n; ++out) {
                Vec row(n * n);
                row[out * n + ab.k] += ab.sign;
                for (std::size_t i = 0; i < n; ++i) {
                    auto m1 = a.mul(i, q);
                    if (m1.k == out) row[i * n + p] -= m1.sign;
                    auto m2 = a.mul(p, i);
                    if (m2.k == out) row[i * n + q] -= m2.sign;
                }
                rows.push_back(std::move(row));
            }
        }
    std::vector<MatTuple> basis;
    for (auto& v : solve_kernel(Matrix::from_rows(rows, n * n))) basis.push_back(unflatten(v, 1, n));
    return MatrixLieAlgebra(1, n, basis);
}

bool is_derivation(const CompositionAlgebra& a, const Matrix& d) {
    std::size_t n = a.dim();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Vec x = a.e(p), y = a.e(q);
            Vec lhs = d.apply(a.multiply(x, y));
            Vec r1 = a.multiply(d.apply(x), y), r2 = a.multiply(x, d.apply(y));
            for (std::size_t i = 0; i < n; ++i)
                if (lhs[i] != r1[i] + r2[i]) return false;
        }
    return true;
}

// ---- triality ----

bool is_skew(const CompositionAlgebra& a, const Matrix& m) {
    Matrix g = a.norm_form();
    Matrix s = m.transpose() * g + g * m;
    return s.is_zero();
}

TrialityTriple untwist(const CompositionAlgebra& a, const TrialityTriple& t) {
    Matrix c = a.conj_matrix();
    return {c * t[0] * c, t[1], t[2]};
}

bool is_triality_triple_untwisted(const CompositionAlgebra& a, const TrialityTriple& t) {
    return is_triality_triple(a, untwist(a, t));
}

bool is_triality_triple(const CompositionAlgebra& a, const TrialityTriple& t) {
    if (t.size() != 3) return false;
    std::size_t n = a.dim();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Vec x = a.e(p), y = a.e(q);
            Vec lhs = a.conjugate(t[0].apply(a.conjugate(a.multiply(x, y))));
            Vec r1 = a.multiply(t[1].apply(x), y), r2 = a.multiply(x, t[2].apply(y));
            for (std::size_t i = 0; i < n; ++i)
                if (lhs[i] != r1[i] + r2[i]) return false;
        }
    return true;
}

namespace {

MatrixLieAlgebra compute_triality(const CompositionAlgebra& a) {
    std::size_t n = a.dim(), nn = n * n, N = 3 * nn;
    std::vector<Vec> rows;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            auto ab = a.mul(p, q);
            for (std::size_t out = 0; out < n; ++out) {
                Vec row(N);
                // conj T1 conj(ab)
                row[out * n + ab.k] += ab.sign * a.conj_sign(ab.k) * a.conj_sign(out);
                for (std::size_t i = 0; i < n; ++i) {
                    auto m1 = a.mul(i, q);
                    if (m1.k == out) row[nn + i * n + p] -= m1.sign;
                    auto m2 = a.mul(p, i);
                    if (m2.k == out) row[2 * nn + i * n + q] -= m2.sign;
                }
                rows.push_back(std::move(row));
            }
        }
    // skew for the (diagonal) norm form
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Vec row(N);
                row[c * nn + i * n + j] += a.norm(a.e(i));
                row[c * nn + j * n + i] += a.norm(a.e(j));
                rows.push_back(std::move(row));
            }
    std::vector<MatTuple> basis;
    for (auto& v : solve_kernel(Matrix::from_rows(rows, N))) basis.push_back(unflatten(v, 3, n));
    return MatrixLieAlgebra(3, n, basis);
}

}  // namespace

const MatrixLieAlgebra& triality_algebra(const AlgPtr& a) {
    static std::mutex m;
    static std::map<const CompositionAlgebra*, std::pair<AlgPtr, MatrixLieAlgebra>> cache;
    std::lock_guard<std::mutex> g(m);
    auto it = cache.find(a.get());
    if (it != cache.end()) return it->second.second;
    auto res = cache.emplace(a.get(), std::make_pair(a, compute_triality(*a)));
    return res.first->second.second;
}

Matrix triality_project(const AlgPtr& a, int i) {
    if (i < 1 || i > 3) throw AlgebraError("projection index must be 1, 2 or 3");
    const auto& t = triality_algebra(a);
    std::size_t n = a->dim();
    Matrix p(n * n, t.dim());
    for (std::size_t j = 0; j < t.dim(); ++j) {
        auto e = t.element(j);
        for (std::size_t r = 0; r < n * n; ++r) p(r, j) = e[i - 1].data()[r];
    }
    return p;
}

TrialityTriple sigma(const TrialityTriple& t, int times) {
    TrialityTriple r = t;
    for (int s = 0; s < ((times % 3) + 3) % 3; ++s) r = {r[2], r[0], r[1]};
    return r;
}

Matrix wedge(const CompositionAlgebra& a, const Vec& u, const Vec& v) {
    std::size_t n = a.dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec x = a.e(j);
        Q pu = a.polar(u, x) / 2, pv = a.polar(v, x) / 2;
        for (std::size_t i = 0; i < n; ++i) m(i, j) = pu * v[i] - pv * u[i];
    }
    return m;
}

TrialityTriple psi(const CompositionAlgebra& a, int i, const Vec& u, const Vec& v) {
    if (i < 1 || i > 3) throw AlgebraError("psi index must be 1, 2 or 3");
    std::size_t n = a.dim();
    Matrix t1(n, n), t2(n, n), t3(n, n);
    Vec ub = a.conjugate(u), vb = a.conjugate(v);
    for (std::size_t j = 0; j < n; ++j) {
        Vec x = a.e(j);
        Q qu = a.polar(u, x), qv = a.polar(v, x);
        Vec s2a = a.multiply(vb, a.multiply(u, x)), s2b = a.multiply(ub, a.multiply(v, x));
        Vec s3a = a.multiply(a.multiply(x, u), vb), s3b = a.multiply(a.multiply(x, v), ub);
        for (std::size_t r = 0; r < n; ++r) {
            t1(r, j) = qu * v[r] - qv * u[r];
            t2(r, j) = (s2a[r] - s2b[r]) / 2;
            t3(r, j) = (s3a[r] - s3b[r]) / 2;
        }
    }
    return sigma({t1, t2, t3}, i - 1);
}

PsiSum psi_sum(const AlgPtr& a) {
    const auto& t = triality_algebra(a);
    std::size_t n = a->dim();
    PsiSum ps;
    for (std::size_t s = 0; s < 3; ++s)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) ps.gens.push_back({s, u, v});
    ps.map = Matrix(t.dim(), ps.gens.size());
    for (std::size_t g = 0; g < ps.gens.size(); ++g) {
        auto [s, u, v] = ps.gens[g];
        auto c = t.coords(psi(*a, static_cast<int>(s) + 1, a->e(u), a->e(v)));
        if (!c) throw AlgebraError("psi image outside the triality algebra");
        for (std::size_t r = 0; r < t.dim(); ++r) ps.map(r, g) = (*c)[r];
    }
    ps.kernel = solve_kernel(ps.map);
    return ps;
}

namespace {

Vec embed_vec(const Vec& x, std::size_t n) {
    Vec r(n);
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
    return r;
}

}  // namespace

bool kernel_containment(const AlgPtr& b, const AlgPtr& bp) {
    auto ps = psi_sum(b);
    std::size_t N = bp->dim();
    for (auto& k : ps.kernel) {
        TrialityTriple acc(3, Matrix(N, N));
        for (std::size_t g = 0; g < ps.gens.size(); ++g) {
            if (sgn(k[g]) == 0) continue;
            auto [s, u, v] = ps.gens[g];
            acc = tuple_add(acc, tuple_scale(psi(*bp, static_cast<int>(s) + 1, embed_vec(b->e(u), N),
                                                 embed_vec(b->e(v), N)),
                                             k[g]));
        }
        for (auto& m : acc)
            if (!m.is_zero()) return false;
    }
    return true;
}

Subspace stabilizer_of_subalgebra(const AlgPtr& bp, std::size_t m) {
    const auto& t = triality_algebra(bp);
    std::size_t N = bp->dim();
    std::vector<MatTuple> els;
    for (std::size_t j = 0; j < t.dim(); ++j) els.push_back(t.element(j));
    std::vector<Vec> rows;
    for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t r = m; r < N; ++r)
            for (std::size_t s = 0; s < m; ++s) {
                Vec row(t.dim());
                for (std::size_t j = 0; j < t.dim(); ++j) row[j] = els[j][c](r, s);
                rows.push_back(std::move(row));
            }
    if (rows.empty()) return Subspace::full(t.dim());
    return Subspace::span(t.dim(), solve_kernel(Matrix::from_rows(rows, t.dim())));
}

Inclusion inclusion_embedding(const AlgPtr& b, const AlgPtr& bp) {
    if (bp->dim() != 2 * b->dim()) throw AlgebraError("inclusion: target must be the double");
    for (std::size_t i = 0; i < b->dim(); ++i)
        for (std::size_t j = 0; j < b->dim(); ++j) {
            auto x = b->mul(i, j), y = bp->mul(i, j);
            if (x.k != y.k || x.sign != y.sign) throw AlgebraError("inclusion: not a subalgebra on leading coordinates");
        }
    const auto& tb = triality_algebra(b);
    const auto& tbp = triality_algebra(bp);
    std::size_t n = b->dim(), N = bp->dim();
    auto ps = psi_sum(b);
    Matrix dst(tbp.dim(), ps.gens.size());
    for (std::size_t g = 0; g < ps.gens.size(); ++g) {
        auto [s, u, v] = ps.gens[g];
        auto c = tbp.coords(psi(*bp, static_cast<int>(s) + 1, embed_vec(b->e(u), N), embed_vec(b->e(v), N)));
        if (!c) throw AlgebraError("psi image outside the triality algebra");
        for (std::size_t r = 0; r < tbp.dim(); ++r) dst(r, g) = (*c)[r];
    }
    Inclusion inc;
    inc.map = Matrix(tbp.dim(), tb.dim());
    if (tb.dim() > 0) {
        // phi * src = dst, solved on a column basis of src
        auto rr = rref(ps.map.transpose());
        std::vector<std::size_t> cols;
        {
            auto r2 = rref(ps.map);
            cols = r2.pivots;
        }
        Matrix s(tb.dim(), cols.size()), d(tbp.dim(), cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            for (std::size_t r = 0; r < tb.dim(); ++r) s(r, c) = ps.map(r, cols[c]);
            for (std::size_t r = 0; r < tbp.dim(); ++r) d(r, c) = dst(r, cols[c]);
        }
        auto si = inverse(s);
        if (!si) throw AlgebraError("psi sum is not surjective");
        inc.map = d * (*si);
        (void)rr;
    }
    inc.kernel_contained = (inc.map * ps.map) == dst;
    // morphism
    LieAlgebra gb = tb.structure(), gbp = tbp.structure();
    inc.lie_morphism = gb.is_homomorphism_to(gbp, inc.map);
    inc.restriction_is_identity = true;
    for (std::size_t j = 0; j < tb.dim(); ++j) {
        auto img = tbp.combine(inc.map.col(j));
        auto src = tb.element(j);
        for (std::size_t c = 0; c < 3; ++c)
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    if (img[c](r, s) != src[c](r, s)) inc.restriction_is_identity = false;
    }
    Subspace stab = stabilizer_of_subalgebra(bp, n);
    inc.stabilizer_dim = stab.dim();
    inc.image_in_stabilizer = true;
    for (std::size_t j = 0; j < tb.dim(); ++j)
        if (!stab.contains(inc.map.col(j))) inc.image_in_stabilizer = false;
    return inc;
}

TrialityTriple outer_s(const CompositionAlgebra& a, const TrialityTriple& t) {
    Matrix c = a.conj_matrix();
    auto u = untwist(a, t);
    return twist(a, {u[1], u[0], c * u[2] * c});
}

TrialityTriple outer_t(const CompositionAlgebra& a, const TrialityTriple& t) {
    Matrix c = a.conj_matrix();
    auto u = untwist(a, t);
    return twist(a, {c * u[0] * c, c * u[2] * c, c * u[1] * c});
}

Matrix triality_endomorphism(const AlgPtr& a, TrialityTriple (*f)(const CompositionAlgebra&, const TrialityTriple&)) {
    const auto& t = triality_algebra(a);
    Matrix m(t.dim(), t.dim());
    for (std::size_t j = 0; j < t.dim(); ++j) {
        auto c = t.coords(f(*a, t.element(j)));
        if (!c) throw AlgebraError("endomorphism leaves the triality algebra");
        for (std::size_t i = 0; i < t.dim(); ++i) m(i, j) = (*c)[i];
    }
    return m;
}

// ---- g2 ----

namespace {

// entry (r,c) as list of (param index, coefficient)
using Lin = std::vector<std::pair<int, int>>;

}  // namespace

std::vector<Matrix> g2_parametrized_family() {
    // parameter indices: a2..a7 -> 0..5, b3..b7 -> 6..10, g5..g7 -> 11..13
    auto A = [](int k) { return k - 2; };
    auto B = [](int k) { return 6 + k - 3; };
    auto G = [](int k) { return 11 + k - 5; };
    std::vector<std::vector<Lin>> m(8, std::vector<Lin>(8));
    for (int k = 2; k <= 7; ++k) {
        m[k][1] = {{A(k), 1}};
        m[1][k] = {{A(k), -1}};
    }
    for (int k = 3; k <= 7; ++k) {
        m[k][2] = {{B(k), 1}};
        m[2][k] = {{B(k), -1}};
    }
    for (int k = 5; k <= 7; ++k) {
        m[k][4] = {{G(k), 1}};
        m[4][k] = {{G(k), -1}};
    }
    m[3][4] = {{A(6), 1}, {B(5), 1}};
    m[3][5] = {{A(5), -1}, {B(4), -1}};
    m[3][6] = {{A(4), -1}, {B(7), 1}};
    m[3][7] = {{A(7), 1}, {B(6), -1}};
    m[4][3] = {{A(6), -1}, {B(5), -1}};
    m[5][3] = {{A(5), 1}, {B(4), 1}};
    m[6][3] = {{A(4), 1}, {B(7), -1}};
    m[7][3] = {{A(7), -1}, {B(6), 1}};
    m[5][6] = {{A(2), -1}, {G(7), 1}};
    m[5][7] = {{A(3), -1}, {G(6), -1}};
    m[6][5] = {{A(2), 1}, {G(7), -1}};
    m[6][7] = {{B(3), 1}, {G(5), 1}};
    m[7][5] = {{A(3), 1}, {G(6), 1}};
    m[7][6] = {{B(3), -1}, {G(5), -1}};
    std::vector<Matrix> fam(14, Matrix(8, 8));
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            for (auto [p, coef] : m[r][c]) fam[p](r, c) += coef;
    return fam;
}

std::vector<Matrix> g2_derived_family() {
    auto o = CompositionAlgebra::named("O");
    auto der = derivations(*o);
    // parameter positions (row, col)
    std::vector<std::pair<int, int>> pos;
    for (int k = 2; k <= 7; ++k) pos.push_back({k, 1});
    for (int k = 3; k <= 7; ++k) pos.push_back({k, 2});
    for (int k = 5; k <= 7; ++k) pos.push_back({k, 4});
    Matrix coord(pos.size(), der.dim());
    for (std::size_t j = 0; j < der.dim(); ++j) {
        auto e = der.element(j);
        for (std::size_t p = 0; p < pos.size(); ++p) coord(p, j) = e[0](pos[p].first, pos[p].second);
    }
    auto inv = inverse(coord);
    if (!inv) throw AlgebraError("parameter entries are not coordinates on Der(O)");
    std::vector<Matrix> fam;
    for (std::size_t p = 0; p < pos.size(); ++p) fam.push_back(der.combine(inv->col(p))[0]);
    return fam;
}

}  // namespace trialis
