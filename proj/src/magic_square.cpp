#include "trialis/magic_square.hpp"
#include "trialis/jordan.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace trialis {

BracketConvention default_convention() { return BracketConvention{}; }

std::string describe(const BracketConvention& c) {
    static const char* names[] = {"ab", "conj(ab)", "conj(a)b", "a conj(b)"};
    std::ostringstream os;
    for (int i = 0; i < 3; ++i)
        os << "[U" << i + 1 << ",U" << (i + 1) % 3 + 1 << "]=" << (c.eps[i] > 0 ? "+" : "-")
           << names[static_cast<int>(c.variant[i])] << "; ";
    os << "same-slot scale " << to_string(c.c);
    return os.str();
}

Vec variant_product(const CompositionAlgebra& a, ProductVariant v, const Vec& x, const Vec& y) {
    switch (v) {
        case ProductVariant::plain: return a.multiply(x, y);
        case ProductVariant::conj_product: return a.conjugate(a.multiply(x, y));
        case ProductVariant::conj_left: return a.multiply(a.conjugate(x), y);
        case ProductVariant::conj_right: return a.multiply(x, a.conjugate(y));
    }
    return {};
}

Vec MagicSquare::embed_tA(const Vec& c) const {
    Vec v(dim());
    for (std::size_t i = 0; i < na; ++i) v[i] = c[i];
    return v;
}

Vec MagicSquare::embed_tB(const Vec& c) const {
    Vec v(dim());
    for (std::size_t i = 0; i < nb; ++i) v[na + i] = c[i];
    return v;
}

namespace {

using Acc = std::map<std::size_t, Q>;

SparseVec from_acc(const Acc& acc) {
    SparseVec s;
    for (auto& [k, c] : acc)
        if (sgn(c) != 0) s.push_back({k, c});
    return s;
}

// coords of sigma^i Psi_1(e_x ^ e_y) in t(A), for x<y
struct PsiTable {
    std::size_t n = 0;
    std::vector<Vec> tab;   // [slot][x][y]
    const Vec& at(int slot, std::size_t x, std::size_t y) const { return tab[(slot * n + x) * n + y]; }
};

PsiTable psi_table(const AlgPtr& a) {
    PsiTable p;
    p.n = a->dim();
    const auto& t = triality_algebra(a);
    p.tab.assign(3 * p.n * p.n, Vec(t.dim()));
    if (t.dim() == 0) return p;
    for (int s = 0; s < 3; ++s)
        for (std::size_t x = 0; x < p.n; ++x)
            for (std::size_t y = 0; y < p.n; ++y) {
                if (x == y) continue;
                auto c = t.coords(psi(*a, s + 1, a->e(x), a->e(y)));
                if (!c) throw AlgebraError("psi outside triality algebra");
                p.tab[(s * p.n + x) * p.n + y] = *c;
            }
    return p;
}

}  // namespace

MagicSquare build_magic_square(const AlgPtr& A, const AlgPtr& B, const BracketConvention& conv) {
    MagicSquare m;
    m.A = A;
    m.B = B;
    m.conv = conv;
    const auto& tA = triality_algebra(A);
    const auto& tB = triality_algebra(B);
    m.na = tA.dim();
    m.nb = tB.dim();
    m.a = A->dim();
    m.b = B->dim();
    std::size_t n = m.na + m.nb + 3 * m.a * m.b;
    m.L = LieAlgebra(n);
    for (std::size_t i = 0; i < m.na; ++i) m.L.set_label(i, "tA." + std::to_string(i));
    for (std::size_t i = 0; i < m.nb; ++i) m.L.set_label(m.na + i, "tB." + std::to_string(i));
    for (int s = 0; s < 3; ++s)
        for (std::size_t x = 0; x < m.a; ++x)
            for (std::size_t y = 0; y < m.b; ++y)
                m.L.set_label(m.slot_index(s, x, y),
                              "U" + std::to_string(s + 1) + "." + std::to_string(x) + "." + std::to_string(y));

    // t(A), t(B) brackets
    if (m.na) {
        LieAlgebra s = tA.structure();
        for (std::size_t i = 0; i < m.na; ++i)
            for (std::size_t j = i + 1; j < m.na; ++j) m.L.set_bracket(i, j, s.bracket(i, j));
    }
    if (m.nb) {
        LieAlgebra s = tB.structure();
        for (std::size_t i = 0; i < m.nb; ++i)
            for (std::size_t j = i + 1; j < m.nb; ++j) {
                SparseVec v = s.bracket(i, j);
                for (auto& t : v) t.k += m.na;
                m.L.set_bracket(m.na + i, m.na + j, v);
            }
    }
    // t acting on slots
    std::vector<MatTuple> ea, eb;
    for (std::size_t i = 0; i < m.na; ++i) ea.push_back(tA.element(i));
    for (std::size_t i = 0; i < m.nb; ++i) eb.push_back(tB.element(i));
    for (int s = 0; s < 3; ++s)
        for (std::size_t x = 0; x < m.a; ++x)
            for (std::size_t y = 0; y < m.b; ++y) {
                std::size_t u = m.slot_index(s, x, y);
                for (std::size_t k = 0; k < m.na; ++k) {
                    SparseVec v;
                    for (std::size_t r = 0; r < m.a; ++r)
                        if (sgn(ea[k][s](r, x)) != 0) v.push_back({m.slot_index(s, r, y), ea[k][s](r, x)});
                    m.L.set_bracket(k, u, v);
                }
                for (std::size_t k = 0; k < m.nb; ++k) {
                    SparseVec v;
                    for (std::size_t r = 0; r < m.b; ++r)
                        if (sgn(eb[k][s](r, y)) != 0) v.push_back({m.slot_index(s, x, r), eb[k][s](r, y)});
                    m.L.set_bracket(m.na + k, u, v);
                }
            }
    // same slot: c (Q_B(b,b') Psi^A(a^a') + Q_A(a,a') Psi^B(b^b'))
    PsiTable pa = psi_table(A), pb = psi_table(B);
    for (int s = 0; s < 3; ++s)
        for (std::size_t x = 0; x < m.a; ++x)
            for (std::size_t y = 0; y < m.b; ++y)
                for (std::size_t x2 = 0; x2 < m.a; ++x2)
                    for (std::size_t y2 = 0; y2 < m.b; ++y2) {
                        std::size_t i = m.slot_index(s, x, y), j = m.slot_index(s, x2, y2);
                        if (i >= j) continue;
                        Acc acc;
                        Q qb = B->polar(B->e(y), B->e(y2)), qa = A->polar(A->e(x), A->e(x2));
                        if (sgn(qb) != 0 && x != x2 && m.na) {
                            const Vec& c = pa.at(s, x, x2);
                            for (std::size_t t = 0; t < m.na; ++t) acc[t] += conv.c * qb * c[t];
                        }
                        if (sgn(qa) != 0 && y != y2 && m.nb) {
                            const Vec& c = pb.at(s, y, y2);
                            for (std::size_t t = 0; t < m.nb; ++t) acc[m.na + t] += conv.c * qa * c[t];
                        }
                        m.L.set_bracket(i, j, from_acc(acc));
                    }
    // mixed: [slot s, slot s+1] -> slot s+2
    for (int s = 0; s < 3; ++s) {
        int s1 = (s + 1) % 3, s2 = (s + 2) % 3;
        for (std::size_t x = 0; x < m.a; ++x)
            for (std::size_t x2 = 0; x2 < m.a; ++x2) {
                Vec p = variant_product(*A, conv.variant[s], A->e(x), A->e(x2));
                for (std::size_t y = 0; y < m.b; ++y)
                    for (std::size_t y2 = 0; y2 < m.b; ++y2) {
                        Vec q = variant_product(*B, conv.variant[s], B->e(y), B->e(y2));
                        SparseVec v;
                        for (std::size_t r = 0; r < m.a; ++r) {
                            if (sgn(p[r]) == 0) continue;
                            for (std::size_t u = 0; u < m.b; ++u)
                                if (sgn(q[u]) != 0) v.push_back({m.slot_index(s2, r, u), conv.eps[s] * p[r] * q[u]});
                        }
                        std::sort(v.begin(), v.end(), [](const Term& l, const Term& r) { return l.k < r.k; });
                        m.L.set_bracket(m.slot_index(s, x, y), m.slot_index(s1, x2, y2), v);
                    }
            }
    }
    return m;
}

namespace {

SparseVec jacobi_residual(const LieAlgebra& l, std::size_t i, std::size_t j, std::size_t k) {
    auto e = [](std::size_t t) { return SparseVec{{t, Q(1)}}; };
    Acc acc;
    for (auto [x, y, z] : {std::array<std::size_t, 3>{i, j, k}, {j, k, i}, {k, i, j}})
        for (auto& t : l.bracket(l.bracket(x, y), e(z))) acc[t.k] += t.c;
    return from_acc(acc);
}

// c with J0 + c (J1 - J0) = 0 on every triple, if any
std::optional<Q> solve_scale(const LieAlgebra& l0, const LieAlgebra& l1) {
    std::optional<Q> c;
    bool free_c = true;
    std::size_t n = l0.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec j0 = to_dense(jacobi_residual(l0, i, j, k), n);
                Vec j1 = to_dense(jacobi_residual(l1, i, j, k), n);
                for (std::size_t t = 0; t < n; ++t) {
                    Q d = j1[t] - j0[t];
                    if (sgn(d) == 0) {
                        if (sgn(j0[t]) != 0) return std::nullopt;
                        continue;
                    }
                    Q cc = -j0[t] / d;
                    if (free_c) {
                        c = cc;
                        free_c = false;
                    } else if (*c != cc) {
                        return std::nullopt;
                    }
                }
            }
    if (free_c) return Q(1);
    if (sgn(*c) == 0) return std::nullopt;
    return c;
}

}  // namespace

std::vector<BracketConvention> search_conventions(const std::vector<std::pair<AlgPtr, AlgPtr>>& pairs) {
    std::vector<BracketConvention> all;
    for (int e = 0; e < 8; ++e)
        for (int v = 0; v < 64; ++v) {
            BracketConvention c;
            for (int i = 0; i < 3; ++i) {
                c.eps[i] = (e >> i) & 1 ? -1 : 1;
                c.variant[i] = static_cast<ProductVariant>((v >> (2 * i)) & 3);
            }
            all.push_back(c);
        }
    std::vector<BracketConvention> surv;
    for (auto c : all) {
        bool ok = true;
        std::optional<Q> scale;
        for (auto& [A, B] : pairs) {
            BracketConvention c0 = c, c1 = c;
            c0.c = 0;
            c1.c = 1;
            auto s = solve_scale(build_magic_square(A, B, c0).L, build_magic_square(A, B, c1).L);
            if (!s || (scale && *s != *scale)) {
                ok = false;
                break;
            }
            scale = s;
        }
        if (!ok) continue;
        c.c = scale ? *scale : Q(1);
        surv.push_back(c);
    }
    return surv;
}

Matrix involution_theta(const MagicSquare& m) {
    Matrix t = Matrix::identity(m.dim());
    for (std::size_t i = m.slot_offset(1); i < m.dim(); ++i) t(i, i) = -1;
    return t;
}

namespace {

Matrix sigma_on(const AlgPtr& a) {
    return triality_endomorphism(a, [](const CompositionAlgebra&, const TrialityTriple& t) { return sigma(t, 1); });
}

}  // namespace

Matrix order3_tau(const MagicSquare& m) {
    Matrix t(m.dim(), m.dim());
    Matrix sa = sigma_on(m.A), sb = sigma_on(m.B);
    for (std::size_t i = 0; i < m.na; ++i)
        for (std::size_t j = 0; j < m.na; ++j) t(i, j) = sa(i, j);
    for (std::size_t i = 0; i < m.nb; ++i)
        for (std::size_t j = 0; j < m.nb; ++j) t(m.na + i, m.na + j) = sb(i, j);
    for (int s = 0; s < 3; ++s)
        for (std::size_t x = 0; x < m.a; ++x)
            for (std::size_t y = 0; y < m.b; ++y) t(m.slot_index((s + 1) % 3, x, y), m.slot_index(s, x, y)) = 1;
    return t;
}

Matrix octonion_order3_automorphism(const CompositionAlgebra& o) {
    if (o.dim() != 8) throw AlgebraError("order three automorphism needs an octonion algebra");
    Vec u = o.e(1), one = o.e(0);
    u[2] = 1;
    u[3] = 1;
    Vec w = u;   // omega = (-1 + u)/2
    w[0] = -1;
    for (auto& x : w) x /= 2;
    // complement of span(1,u) for the norm form
    Matrix g = o.norm_form();
    Matrix cons(2, 8);
    Vec g1 = g.apply(one), gu = g.apply(u);
    for (std::size_t j = 0; j < 8; ++j) {
        cons(0, j) = g1[j];
        cons(1, j) = gu[j];
    }
    auto comp = solve_kernel(cons);
    for (int variant = 0; variant < 4; ++variant) {
        Vec ww = (variant & 2) ? o.conjugate(w) : w;
        Matrix p(8, 8), d(8, 8);
        std::vector<Vec> cols = {one, u};
        for (auto& c : comp) cols.push_back(c);
        for (std::size_t j = 0; j < 8; ++j) {
            Vec img = j < 2 ? cols[j] : ((variant & 1) ? o.multiply(cols[j], ww) : o.multiply(ww, cols[j]));
            for (std::size_t i = 0; i < 8; ++i) {
                p(i, j) = cols[j][i];
                d(i, j) = img[i];
            }
        }
        auto pi = inverse(p);
        if (!pi) continue;
        Matrix phi = d * (*pi);
        bool aut = true;
        for (std::size_t x = 0; x < 8 && aut; ++x)
            for (std::size_t y = 0; y < 8 && aut; ++y)
                if (phi.apply(o.multiply(o.e(x), o.e(y))) != o.multiply(phi.apply(o.e(x)), phi.apply(o.e(y)))) aut = false;
        if (aut) return phi;
    }
    throw AlgebraError("no rational order three automorphism found");
}

Matrix order3_tau_twisted(const MagicSquare& m) {
    if (m.B->dim() != 8) throw AlgebraError("twisted order three automorphism needs B = O");
    Matrix t = order3_tau(m);
    Matrix phi = octonion_order3_automorphism(*m.B);
    Matrix phii = *inverse(phi);
    const auto& tB = triality_algebra(m.B);
    for (std::size_t j = 0; j < m.nb; ++j) {
        auto e = tB.element(j);
        TrialityTriple c = {phi * e[0] * phii, phi * e[1] * phii, phi * e[2] * phii};
        auto co = tB.coords(sigma(c, 1));
        if (!co) throw AlgebraError("twisted triality leaves t(O)");
        for (std::size_t i = 0; i < m.nb; ++i) t(m.na + i, m.na + j) = (*co)[i];
    }
    for (int s = 0; s < 3; ++s)
        for (std::size_t x = 0; x < m.a; ++x)
            for (std::size_t y = 0; y < m.b; ++y) {
                std::size_t src = m.slot_index(s, x, y);
                for (std::size_t r = 0; r < m.b; ++r) t(m.slot_index((s + 1) % 3, x, r), src) = phi(r, y);
            }
    return t;
}

Subspace fixed_space(const Matrix& m) {
    return Subspace::span(m.cols(), solve_kernel(m - Matrix::identity(m.rows())));
}

LieAlgebra theta_dual(const LieAlgebra& l, const Matrix& theta) {
    std::size_t n = l.dim();
    LieAlgebra d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d.set_label(i, l.labels()[i]);
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && sgn(theta(i, j)) != 0) throw LinalgError("theta_dual: theta must be diagonal");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            SparseVec v = l.bracket(i, j);
            if (sgn(theta(i, i)) < 0 && sgn(theta(j, j)) < 0)
                for (auto& t : v) t.c = -t.c;
            d.set_bracket(i, j, v);
        }
    return d;
}

std::string split_name(const std::string& c) {
    if (c == "R" || c == "Cs" || c == "Hs" || c == "Os") return c;
    if (c == "C" || c == "H" || c == "O") return c + "s";
    throw AlgebraError("unknown algebra name: " + c);
}

std::vector<Vec> triality_cartan(const AlgPtr& a) {
    const auto& t = triality_algebra(a);
    std::vector<Vec> chosen;
    std::vector<MatTuple> els;
    std::size_t n = a->dim();
    for (int s = 1; s <= 3; ++s)
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                if (a->norm(a->e(u)) != -a->norm(a->e(v))) continue;
                auto x = psi(*a, s, a->e(u), a->e(v));
                bool comm = true;
                for (auto& y : els) {
                    for (auto& c : tuple_bracket(x, y))
                        if (!c.is_zero()) comm = false;
                }
                if (!comm) continue;
                auto c = t.coords(x);
                std::vector<Vec> test = chosen;
                test.push_back(*c);
                if (rank_of(test, t.dim()) != test.size()) continue;
                chosen.push_back(*c);
                els.push_back(x);
            }
    return chosen;
}

SplitForm build_split_form(const std::string& a, const std::string& b) {
    SplitForm f;
    f.a_name = split_name(a);
    f.b_name = split_name(b);
    auto m = build_magic_square(CompositionAlgebra::named(f.a_name), CompositionAlgebra::named(f.b_name));
    if (f.a_name == "R" && f.b_name == "R") {
        f.L = theta_dual(m.L, involution_theta(m));
        Vec h(m.dim());
        h[m.slot_index(1, 0, 0)] = 1;
        f.cartan.push_back(h);
        return f;
    }
    f.L = m.L;
    for (auto& c : triality_cartan(m.A)) f.cartan.push_back(m.embed_tA(c));
    for (auto& c : triality_cartan(m.B)) f.cartan.push_back(m.embed_tB(c));
    return f;
}

Matrix triality_inclusion_chain(const std::string& b) {
    auto C = CompositionAlgebra::named("C"), H = CompositionAlgebra::named("H"), O = CompositionAlgebra::named("O");
    static std::mutex mu;
    static std::map<std::string, Matrix> cache;
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(b);
    if (it != cache.end()) return it->second;
    Matrix r;
    if (b == "R") r = Matrix(28, 0);
    else if (b == "C") r = inclusion_embedding(H, O).map * inclusion_embedding(C, H).map;
    else if (b == "H") r = inclusion_embedding(H, O).map;
    else if (b == "O") r = Matrix::identity(28);
    else throw AlgebraError("inclusion chain: B must be R, C, H or O");
    cache[b] = r;
    return r;
}

Subspace tA_subspace(const MagicSquare& m) {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < m.na; ++i) {
        Vec v(m.dim());
        v[i] = 1;
        vs.push_back(v);
    }
    return Subspace::span(m.dim(), vs);
}

Subspace subalgebra_in_octonion_row(const MagicSquare& big, const std::string& b) {
    if (big.b != 8) throw AlgebraError("subalgebra: ambient must be g(A,O)");
    Matrix inc = triality_inclusion_chain(b);
    std::size_t bd = CompositionAlgebra::named(b)->dim();
    std::vector<Vec> vs = tA_subspace(big).basis();
    for (std::size_t j = 0; j < inc.cols(); ++j) vs.push_back(big.embed_tB(inc.col(j)));
    for (int s = 0; s < 3; ++s)
        for (std::size_t x = 0; x < big.a; ++x)
            for (std::size_t y = 0; y < bd; ++y) {
                Vec v(big.dim());
                v[big.slot_index(s, x, y)] = 1;
                vs.push_back(v);
            }
    return Subspace::span(big.dim(), vs);
}

std::vector<DualPairReport> dual_pairs(const std::string& a) {
    auto big = build_magic_square(CompositionAlgebra::named(a), CompositionAlgebra::named("O"));
    std::vector<DualPairReport> out;
    auto run = [&](const std::string& label, const Subspace& sub) {
        DualPairReport r;
        r.sub = label;
        r.sub_dim = sub.dim();
        Subspace c = big.L.centralizer(sub);
        r.centralizer_dim = c.dim();
        Subspace cc = big.L.centralizer(c);
        r.double_centralizer_dim = cc.dim();
        r.closed = cc == sub;
        out.push_back(r);
    };
    for (std::string b : {"H", "C", "R"}) run("g(" + a + "," + b + ")", subalgebra_in_octonion_row(big, b));
    run("t(" + a + ")", tA_subspace(big));
    return out;
}

std::size_t tits_rectangle_dim(const std::string& a, const std::string& b) {
    auto A = CompositionAlgebra::named(a);
    std::size_t der = derivations(*A).dim();
    std::size_t j0, derj;
    if (b == "D") {
        j0 = 0;
        derj = 0;
    } else if (b == "0") {
        j0 = 2;
        derj = 0;
    } else {
        auto B = CompositionAlgebra::named(b);
        j0 = 2 + 3 * B->dim();
        derj = jordan_derivation_dim(B);
    }
    return der + (A->dim() - 1) * j0 + derj;
}

// ---- 4-ality ----

namespace {

Matrix sl2_basis(int p) {
    Matrix m(2, 2);
    if (p == 0) {
        m(0, 0) = 1;
        m(1, 1) = -1;
    } else if (p == 1) {
        m(0, 1) = 1;
    } else {
        m(1, 0) = 1;
    }
    return m;
}

Vec sl2_coords(const Matrix& m) { return {m(0, 0), m(0, 1), m(1, 0)}; }

Q omega(int x, int y) { return x == y ? Q(0) : (x == 0 ? Q(1) : Q(-1)); }

// x x' in S^2 -> v -> (w(x,v) x' + w(x',v) x)/2
Matrix sym_square(int x, int x2) {
    Matrix m(2, 2);
    for (int v = 0; v < 2; ++v) {
        m(x2, v) += omega(x, v) / 2;
        m(x, v) += omega(x2, v) / 2;
    }
    return m;
}

constexpr std::array<std::array<std::array<int, 2>, 2>, 3> kPairs = {{{{{0, 1}, {2, 3}}}, {{{0, 2}, {1, 3}}}, {{{0, 3}, {1, 2}}}}};

}  // namespace

bool is_representation(const LieAlgebra& l, const std::vector<Matrix>& rho) {
    for (std::size_t i = 0; i < l.dim(); ++i)
        for (std::size_t j = i + 1; j < l.dim(); ++j) {
            Matrix lhs(rho[0].rows(), rho[0].cols());
            for (auto& t : l.bracket(i, j)) lhs = lhs + rho[t.k].scaled(t.c);
            if (!(lhs == commutator(rho[i], rho[j]))) return false;
        }
    return true;
}

FourAlity build_4ality() {
    FourAlity f;
    f.L = LieAlgebra(28);
    static const char* fac = "ABCD";
    static const char* sl = "hef";
    for (int X = 0; X < 4; ++X)
        for (int p = 0; p < 3; ++p) f.L.set_label(3 * X + p, std::string("sl") + fac[X] + "." + sl[p]);
    auto tix = [](const std::array<int, 4>& v) { return FourAlity::tensor_index(v[0], v[1], v[2], v[3]); };
    std::vector<std::array<int, 4>> tens;
    for (int t = 0; t < 16; ++t) tens.push_back({(t >> 3) & 1, (t >> 2) & 1, (t >> 1) & 1, t & 1});
    for (auto& v : tens)
        f.L.set_label(tix(v), "t." + std::to_string(v[0]) + std::to_string(v[1]) + std::to_string(v[2]) +
                                  std::to_string(v[3]));
    // sl x sl
    for (int X = 0; X < 4; ++X)
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                Vec c = sl2_coords(commutator(sl2_basis(p), sl2_basis(q)));
                SparseVec v;
                for (int r = 0; r < 3; ++r)
                    if (sgn(c[r]) != 0) v.push_back({static_cast<std::size_t>(3 * X + r), c[r]});
                f.L.set_bracket(3 * X + p, 3 * X + q, v);
            }
    // sl x tensor
    for (int X = 0; X < 4; ++X)
        for (int p = 0; p < 3; ++p) {
            Matrix M = sl2_basis(p);
            for (auto& v : tens) {
                SparseVec out;
                for (int r = 0; r < 2; ++r) {
                    if (sgn(M(r, v[X])) == 0) continue;
                    auto w = v;
                    w[X] = r;
                    out.push_back({tix(w), M(r, v[X])});
                }
                std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
                f.L.set_bracket(3 * X + p, tix(v), out);
            }
        }
    // tensor x tensor
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = i + 1; j < 16; ++j) {
            auto& v = tens[i];
            auto& w = tens[j];
            Acc acc;
            for (int X = 0; X < 4; ++X) {
                Q coef = 1;
                for (int Y = 0; Y < 4; ++Y)
                    if (Y != X) coef *= omega(v[Y], w[Y]);
                if (sgn(coef) == 0) continue;
                Vec c = sl2_coords(sym_square(v[X], w[X]));
                for (int r = 0; r < 3; ++r) acc[3 * X + r] += coef * c[r];
            }
            f.L.set_bracket(tix(v), tix(w), from_acc(acc));
        }
    // modules
    for (int k = 0; k < 3; ++k) {
        auto P = kPairs[k];
        std::vector<Matrix> rho(28, Matrix(8, 8));
        // module basis: part p, (x, y) -> 4p + 2x + y
        for (int X = 0; X < 4; ++X)
            for (int p = 0; p < 3; ++p) {
                Matrix M = sl2_basis(p);
                Matrix& R = rho[3 * X + p];
                for (int part = 0; part < 2; ++part)
                    for (int slot = 0; slot < 2; ++slot) {
                        if (P[part][slot] != X) continue;
                        for (int x = 0; x < 2; ++x)
                            for (int y = 0; y < 2; ++y) {
                                int src = 4 * part + 2 * x + y;
                                int cur = slot == 0 ? x : y;
                                for (int r = 0; r < 2; ++r) {
                                    int dst = slot == 0 ? 4 * part + 2 * r + y : 4 * part + 2 * x + r;
                                    R(dst, src) += M(r, cur);
                                }
                            }
                    }
            }
        for (auto& v : tens) {
            Matrix& R = rho[tix(v)];
            for (int part = 0; part < 2; ++part) {
                int other = 1 - part;
                for (int x = 0; x < 2; ++x)
                    for (int y = 0; y < 2; ++y) {
                        Q c = omega(v[P[part][0]], x) * omega(v[P[part][1]], y);
                        if (sgn(c) == 0) continue;
                        int dst = 4 * other + 2 * v[P[other][0]] + v[P[other][1]];
                        // the return map carries a sign
                        R(dst, 4 * part + 2 * x + y) += part == 0 ? c : Q(-c);
                    }
            }
        }
        f.modules[k] = rho;
    }
    // tau: (M,N,P,Q) -> (P,M,N,Q), a b c d -> c a b d
    Matrix T(2, 2);
    T(0, 1) = -1;
    T(1, 0) = 1;
    T(1, 1) = -1;
    Matrix Ti = *inverse(T);
    for (int twisted = 0; twisted < 2; ++twisted) {
        Matrix t(28, 28);
        for (int p = 0; p < 3; ++p) {
            t(3 * 0 + p, 3 * 2 + p) = 1;
            t(3 * 1 + p, 3 * 0 + p) = 1;
            t(3 * 2 + p, 3 * 1 + p) = 1;
            if (!twisted) {
                t(9 + p, 9 + p) = 1;
            } else {
                Vec c = sl2_coords(T * sl2_basis(p) * Ti);
                for (int r = 0; r < 3; ++r) t(9 + r, 9 + p) = c[r];
            }
        }
        for (auto& v : tens) {
            if (!twisted) {
                t(tix({v[2], v[0], v[1], v[3]}), tix(v)) = 1;
            } else {
                for (int r = 0; r < 2; ++r)
                    if (sgn(T(r, v[3])) != 0) t(tix({v[2], v[0], v[1], r}), tix(v)) = T(r, v[3]);
            }
        }
        (twisted ? f.tau_prime : f.tau) = t;
    }
    for (int X = 0; X < 4; ++X) {
        Vec h(28);
        h[3 * X] = 1;
        f.cartan.push_back(h);
    }
    return f;
}

}  // namespace trialis
