#include "trialis/jordan.hpp"

#include <map>
#include <mutex>

namespace trialis {

namespace {

Vec vadd(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vscale(const Vec& a, const Q& s) {
    Vec r = a;
    for (auto& x : r) x *= s;
    return r;
}

Vec scalar(const CompositionAlgebra& a, const Q& r) {
    Vec v(a.dim());
    v[0] = r;
    return v;
}

using Mat3 = std::array<std::array<Vec, 3>, 3>;

Mat3 to_mat(const JordanElement& j) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) m[i][k] = j.entry(i, k);
    return m;
}

Mat3 mat_mul(const CompositionAlgebra& a, const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Vec s(a.dim());
            for (int k = 0; k < 3; ++k) s = vadd(s, a.multiply(x[i][k], y[k][j]));
            r[i][j] = s;
        }
    return r;
}

JordanElement from_mat(const AlgPtr& a, const Mat3& m) {
    JordanElement j = JordanElement::zero(a);
    for (int i = 0; i < 3; ++i) j.r[i] = m[i][i][0];
    j.x[0] = m[1][2];
    j.x[1] = m[0][2];
    j.x[2] = m[0][1];
    return j;
}

}  // namespace

JordanElement JordanElement::zero(const AlgPtr& a) {
    JordanElement j;
    j.alg = a;
    for (auto& v : j.x) v = Vec(a->dim());
    return j;
}

JordanElement JordanElement::identity(const AlgPtr& a) { return diag(a, 1, 1, 1); }

JordanElement JordanElement::diag(const AlgPtr& a, const Q& r1, const Q& r2, const Q& r3) {
    JordanElement j = zero(a);
    j.r = {r1, r2, r3};
    return j;
}

JordanElement JordanElement::from_coords(const AlgPtr& a, const Vec& c) {
    std::size_t n = a->dim();
    if (c.size() != 3 + 3 * n) throw AlgebraError("jordan coordinates: length mismatch");
    JordanElement j = zero(a);
    for (int i = 0; i < 3; ++i) j.r[i] = c[i];
    for (int k = 0; k < 3; ++k)
        for (std::size_t i = 0; i < n; ++i) j.x[k][i] = c[3 + k * n + i];
    return j;
}

Vec JordanElement::coords() const {
    Vec c(r.begin(), r.end());
    for (auto& v : x) c.insert(c.end(), v.begin(), v.end());
    return c;
}

JordanElement JordanElement::operator+(const JordanElement& o) const {
    JordanElement j = *this;
    for (int i = 0; i < 3; ++i) {
        j.r[i] += o.r[i];
        j.x[i] = vadd(j.x[i], o.x[i]);
    }
    return j;
}

JordanElement JordanElement::operator-(const JordanElement& o) const { return *this + o.scaled(-1); }

JordanElement JordanElement::scaled(const Q& s) const {
    JordanElement j = *this;
    for (int i = 0; i < 3; ++i) {
        j.r[i] *= s;
        j.x[i] = vscale(j.x[i], s);
    }
    return j;
}

bool JordanElement::operator==(const JordanElement& o) const { return r == o.r && x == o.x; }

Vec JordanElement::entry(int i, int j) const {
    const auto& a = *alg;
    if (i == j) return scalar(a, r[i]);
    // (0,1)=x3 (0,2)=x2 (1,2)=x1
    if (i == 0 && j == 1) return x[2];
    if (i == 0 && j == 2) return x[1];
    if (i == 1 && j == 2) return x[0];
    return a.conjugate(entry(j, i));
}

JordanElement jordan_product(const JordanElement& a, const JordanElement& b) {
    const auto& alg = *a.alg;
    Mat3 ma = to_mat(a), mb = to_mat(b);
    Mat3 p = mat_mul(alg, ma, mb), q = mat_mul(alg, mb, ma);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) p[i][j] = vscale(vadd(p[i][j], q[i][j]), Q(1, 2));
    return from_mat(a.alg, p);
}

Q trace(const JordanElement& a) { return a.r[0] + a.r[1] + a.r[2]; }

Q trace_form(const JordanElement& a, const JordanElement& b) {
    Q s = 0;
    for (int i = 0; i < 3; ++i) s += a.r[i] * b.r[i] + a.alg->polar(a.x[i], b.x[i]);
    return s;
}

Q determinant(const JordanElement& m) {
    const auto& a = *m.alg;
    Q d = m.r[0] * m.r[1] * m.r[2];
    for (int i = 0; i < 3; ++i) d -= m.r[i] * a.norm(m.x[i]);
    d += 2 * a.multiply(a.multiply(m.x[2], m.x[0]), a.conjugate(m.x[1]))[0];
    return d;
}

Q determinant(const JordanElement& x, const JordanElement& y, const JordanElement& z) {
    Q s = determinant(x + y + z) - determinant(x + y) - determinant(x + z) - determinant(y + z) + determinant(x) +
          determinant(y) + determinant(z);
    return s / 6;
}

Matrix trace_form_gram(const AlgPtr& a) {
    std::size_t n = JordanElement::dim_for(*a);
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ci(n), cj(n);
            ci[i] = 1;
            cj[j] = 1;
            g(i, j) = trace_form(JordanElement::from_coords(a, ci), JordanElement::from_coords(a, cj));
        }
    return g;
}

JordanElement cross_product(const JordanElement& x, const JordanElement& y) {
    const AlgPtr& a = x.alg;
    std::size_t n = JordanElement::dim_for(*a);
    static std::mutex mu;
    static std::map<const CompositionAlgebra*, std::pair<AlgPtr, Matrix>> inv_cache;
    Matrix ginv;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = inv_cache.find(a.get());
        if (it == inv_cache.end()) it = inv_cache.emplace(a.get(), std::make_pair(a, *inverse(trace_form_gram(a)))).first;
        ginv = it->second.second;
    }
    Vec rhs(n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec c(n);
        c[k] = 1;
        rhs[k] = determinant(x, y, JordanElement::from_coords(a, c));
    }
    return JordanElement::from_coords(a, ginv.apply(rhs));
}

JordanElement cyclic_relabel(const JordanElement& m) {
    const auto& a = *m.alg;
    JordanElement j = JordanElement::zero(m.alg);
    j.r = {m.r[1], m.r[2], m.r[0]};
    j.x[0] = a.conjugate(m.x[1]);
    j.x[1] = a.conjugate(m.x[2]);
    j.x[2] = m.x[0];
    return j;
}

JordanElement random_jordan(const AlgPtr& a, std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    Vec c(JordanElement::dim_for(*a));
    for (auto& v : c) v = d(rng);
    return JordanElement::from_coords(a, c);
}

std::size_t jordan_derivation_dim(const AlgPtr& b) {
    static std::mutex mu;
    static std::map<std::string, std::size_t> cache;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find(b->name());
        if (it != cache.end()) return it->second;
    }
    std::size_t n = JordanElement::dim_for(*b);
    std::vector<JordanElement> basis;
    for (std::size_t i = 0; i < n; ++i) {
        Vec c(n);
        c[i] = 1;
        basis.push_back(JordanElement::from_coords(b, c));
    }
    // c[p][q] = coords of e_p e_q
    std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q) c[p][q] = c[q][p] = jordan_product(basis[p], basis[q]).coords();
    // unknown D[i][j] at i*n+j; D(e_p e_q) = D(e_p) e_q + e_p D(e_q)
    std::vector<SparseRow> rows;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p; q < n; ++q)
            for (std::size_t out = 0; out < n; ++out) {
                std::map<std::size_t, Q> r;
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn(c[p][q][k]) != 0) r[out * n + k] += c[p][q][k];
                for (std::size_t i = 0; i < n; ++i) {
                    if (sgn(c[i][q][out]) != 0) r[i * n + p] -= c[i][q][out];
                    if (sgn(c[p][i][out]) != 0) r[i * n + q] -= c[p][i][out];
                }
                SparseRow row;
                for (auto& [k, v] : r)
                    if (sgn(v) != 0) row.emplace_back(k, v);
                if (!row.empty()) rows.push_back(std::move(row));
            }
    std::size_t d = sparse_kernel(n * n, rows).size();
    std::lock_guard<std::mutex> g(mu);
    cache[b->name()] = d;
    return d;
}

ZornElement ZornElement::unit(const AlgPtr& alg) {
    return {1, 1, JordanElement::zero(alg), JordanElement::zero(alg)};
}

ZornElement zorn_multiply(const ZornElement& m1, const ZornElement& m2) {
    ZornElement r;
    r.a = m1.a * m2.a + trace_form(m1.X, m2.Y);
    r.X = m2.X.scaled(m1.a) + m1.X.scaled(m2.b) + cross_product(m1.Y, m2.Y);
    r.Y = m1.Y.scaled(m2.a) + m2.Y.scaled(m1.b) + cross_product(m1.X, m2.X);
    r.b = m1.b * m2.b + trace_form(m2.X, m1.Y);
    return r;
}

Vec TensorAlgebra::e(std::size_t i) const {
    Vec v(dim());
    v.at(i) = 1;
    return v;
}

Vec TensorAlgebra::multiply(const Vec& x, const Vec& y) const {
    std::size_t nb = B->dim();
    Vec r(dim());
    for (std::size_t p = 0; p < dim(); ++p) {
        if (sgn(x[p]) == 0) continue;
        for (std::size_t q = 0; q < dim(); ++q) {
            if (sgn(y[q]) == 0) continue;
            auto ea = A->mul(p / nb, q / nb);
            auto eb = B->mul(p % nb, q % nb);
            Q v = x[p] * y[q];
            if (ea.sign * eb.sign < 0) v = -v;
            r[ea.k * nb + eb.k] += v;
        }
    }
    return r;
}

Vec TensorAlgebra::conjugate(const Vec& x) const {
    std::size_t nb = B->dim();
    Vec r = x;
    for (std::size_t p = 0; p < dim(); ++p)
        if (A->conj_sign(p / nb) * B->conj_sign(p % nb) < 0) r[p] = -r[p];
    return r;
}

Vec structurable_v(const TensorAlgebra& t, const Vec& x, const Vec& y, const Vec& z) {
    Vec yb = t.conjugate(y), xb = t.conjugate(x);
    Vec r = t.multiply(t.multiply(x, yb), z);
    Vec s = t.multiply(t.multiply(z, yb), x);
    Vec u = t.multiply(t.multiply(z, xb), y);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s[i] - u[i];
    return r;
}

namespace {

bool identity_on_triple(const TensorAlgebra& t, const Vec& a, const Vec& b, const Vec& c) {
    Vec one = t.one();
    Vec va1b = structurable_v(t, a, one, b);
    Vec vab1c = structurable_v(t, t.conjugate(a), one, c);
    for (std::size_t k = 0; k < t.dim(); ++k) {
        Vec d = t.e(k);
        Vec l1 = structurable_v(t, a, one, structurable_v(t, b, c, d));
        Vec l2 = structurable_v(t, b, c, structurable_v(t, a, one, d));
        Vec r1 = structurable_v(t, va1b, c, d);
        Vec r2 = structurable_v(t, b, vab1c, d);
        for (std::size_t i = 0; i < t.dim(); ++i)
            if (l1[i] - l2[i] != r1[i] - r2[i]) return false;
    }
    return true;
}

}  // namespace

StructurableReport structurable_identity_check(const TensorAlgebra& t, std::size_t samples, std::uint64_t seed) {
    StructurableReport rep;
    std::size_t n = t.dim();
    auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
        ++rep.triples;
        if (!identity_on_triple(t, t.e(i), t.e(j), t.e(k))) {
            rep.ok = false;
            rep.witness = {i, j, k};
            return false;
        }
        return true;
    };
    if (samples == 0) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!check(i, j, k)) return rep;
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        for (std::size_t s = 0; s < samples; ++s) {
            std::size_t i = d(rng), j = d(rng), k = d(rng);
            if (!check(i, j, k)) return rep;
        }
    }
    return rep;
}

}  // namespace trialis
