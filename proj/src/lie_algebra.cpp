#include "trialis/lie_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace trialis {

SparseVec to_sparse(const Vec& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0) s.push_back({i, v[i]});
    return s;
}

Vec to_dense(const SparseVec& s, std::size_t n) {
    Vec v(n);
    for (auto& t : s) v[t.k] += t.c;
    return v;
}

unsigned worker_count() {
    if (const char* e = std::getenv("TRIALIS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end != e && v > 0) return static_cast<unsigned>(std::min(v, 256L));
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
    unsigned w = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> ts;
    std::exception_ptr err;
    std::mutex em;
    for (unsigned t = 0; t < w; ++t)
        ts.emplace_back([&] {
            try {
                for (std::size_t i; (i = next.fetch_add(1)) < n;) f(i);
            } catch (...) {
                std::lock_guard<std::mutex> g(em);
                if (!err) err = std::current_exception();
                next = n;
            }
        });
    for (auto& t : ts) t.join();
    if (err) std::rethrow_exception(err);
}

LieAlgebra::LieAlgebra(std::size_t dim) : n_(dim), labels_(dim), br_(dim * dim) {
    for (std::size_t i = 0; i < dim; ++i) labels_[i] = "x" + std::to_string(i);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const SparseVec& v) {
    if (i >= n_ || j >= n_) throw LinalgError("set_bracket: index out of range");
    SparseVec s;
    for (auto& t : v)
        if (sgn(t.c) != 0) s.push_back(t);
    std::sort(s.begin(), s.end(), [](const Term& a, const Term& b) { return a.k < b.k; });
    if (i == j) {
        if (!s.empty()) throw LinalgError("set_bracket: [x,x] must vanish");
        return;
    }
    SparseVec neg = s;
    for (auto& t : neg) t.c = -t.c;
    br_[i * n_ + j] = std::move(s);
    br_[j * n_ + i] = std::move(neg);
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    std::map<std::size_t, Q> acc;
    for (auto& a : x)
        for (auto& b : y)
            for (auto& t : bracket(a.k, b.k)) acc[t.k] += a.c * b.c * t.c;
    SparseVec r;
    for (auto& [k, c] : acc)
        if (sgn(c) != 0) r.push_back({k, c});
    return r;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    return to_dense(bracket(to_sparse(x), to_sparse(y)), n_);
}

SparseMatrix LieAlgebra::ad_sparse(std::size_t i) const {
    SparseMatrix m(n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (auto& t : bracket(i, j)) m.rows[t.k].emplace_back(j, t.c);
    return m;
}

SparseMatrix LieAlgebra::ad_sparse(const Vec& x) const {
    std::vector<std::map<std::size_t, Q>> acc(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < n_; ++j)
            for (auto& t : bracket(i, j)) acc[t.k][j] += x[i] * t.c;
    }
    SparseMatrix m(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (auto& [c, v] : acc[r])
            if (sgn(v) != 0) m.rows[r].emplace_back(c, v);
    return m;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    Matrix m(n_, n_);
    auto s = ad_sparse(x);
    for (std::size_t r = 0; r < n_; ++r)
        for (auto& [c, v] : s.rows[r]) m(r, c) = v;
    return m;
}

bool LieAlgebra::antisymmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            const auto& a = bracket(i, j);
            const auto& b = bracket(j, i);
            if (a.size() != b.size()) return false;
            for (std::size_t t = 0; t < a.size(); ++t)
                if (a[t].k != b[t].k || a[t].c != -b[t].c) return false;
        }
    return true;
}

Q LieAlgebra::scale_lcm() const {
    Z l = 1;
    for (auto& v : br_)
        for (auto& t : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
    return Q(l);
}

namespace {

struct IntTensor {
    std::size_t n;
    std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> br;
};

// structure constants times L, as int64; nullopt if too large
std::optional<IntTensor> integer_tensor(const LieAlgebra& g, const std::vector<SparseVec>& br, std::size_t n) {
    Z l = g.scale_lcm().get_num();
    IntTensor t{n, std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>(n * n)};
    const Z lim = Z(1) << 40;
    for (std::size_t p = 0; p < br.size(); ++p)
        for (auto& term : br[p]) {
            Q s = term.c * Q(l);
            Z v = s.get_num();
            if (abs(v) > lim) return std::nullopt;
            t.br[p].emplace_back(static_cast<std::uint32_t>(term.k), v.get_si());
        }
    return t;
}

}  // namespace

JacobiReport LieAlgebra::verify_jacobi() const {
    JacobiReport rep;
    if (!antisymmetric()) {
        rep.ok = false;
        return rep;
    }
    auto it = integer_tensor(*this, br_, n_);
    std::mutex m;
    std::atomic<std::size_t> count{0};
    std::atomic<bool> failed{false};
    std::size_t best_i = n_, best_j = 0, best_k = 0;
    parallel_for(n_, [&](std::size_t i) {
        if (failed.load()) return;
        std::vector<__int128> acc(n_, 0);
        std::vector<Q> qacc(it ? 0 : n_);
        std::vector<std::size_t> touched;
        std::vector<char> mark(n_, 0);
        std::size_t local = 0;
        for (std::size_t j = i + 1; j < n_; ++j)
            for (std::size_t k = j + 1; k < n_; ++k) {
                ++local;
                const std::size_t trip[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
                for (auto& tr : trip) {
                    if (it) {
                        for (auto& [l, c1] : it->br[tr[0] * n_ + tr[1]])
                            for (auto& [mm, c2] : it->br[static_cast<std::size_t>(l) * n_ + tr[2]]) {
                                if (!mark[mm]) {
                                    mark[mm] = 1;
                                    touched.push_back(mm);
                                }
                                acc[mm] += static_cast<__int128>(c1) * c2;
                            }
                    } else {
                        for (auto& t1 : br_[tr[0] * n_ + tr[1]])
                            for (auto& t2 : br_[t1.k * n_ + tr[2]]) {
                                if (!mark[t2.k]) {
                                    mark[t2.k] = 1;
                                    touched.push_back(t2.k);
                                }
                                qacc[t2.k] += t1.c * t2.c;
                            }
                    }
                }
                bool bad = false;
                for (auto mm : touched) {
                    if (it ? acc[mm] != 0 : sgn(qacc[mm]) != 0) bad = true;
                    if (it) acc[mm] = 0;
                    else qacc[mm] = 0;
                    mark[mm] = 0;
                }
                touched.clear();
                if (bad) {
                    std::lock_guard<std::mutex> g(m);
                    if (i < best_i) {
                        best_i = i;
                        best_j = j;
                        best_k = k;
                    }
                    failed = true;
                    count += local;
                    return;
                }
            }
        count += local;
    });
    rep.triples_checked = count;
    if (failed) {
        rep.ok = false;
        rep.i = best_i;
        rep.j = best_j;
        rep.k = best_k;
    }
    return rep;
}

Matrix LieAlgebra::killing_form() const {
    // K(i,j) = sum_{k,l} c_{ik}^l c_{jl}^k
    // rev[l*n+k] = list of (j, c_{jl}^k)
    std::vector<std::vector<std::pair<std::size_t, Q>>> rev(n_ * n_);
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t l = 0; l < n_; ++l)
            for (auto& t : bracket(j, l)) rev[l * n_ + t.k].emplace_back(j, t.c);
    Matrix kf(n_, n_);
    std::vector<Vec> rows(n_, Vec(n_));
    parallel_for(n_, [&](std::size_t i) {
        Vec& row = rows[i];
        for (std::size_t k = 0; k < n_; ++k)
            for (auto& t : bracket(i, k))
                for (auto& [j, c2] : rev[t.k * n_ + k]) row[j] += t.c * c2;
    });
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) kf(i, j) = rows[i][j];
    return kf;
}

bool LieAlgebra::is_homomorphism_to(const LieAlgebra& target, const Matrix& map) const {
    if (map.cols() != n_ || map.rows() != target.dim()) throw LinalgError("homomorphism: shape mismatch");
    std::vector<SparseVec> img(n_);
    for (std::size_t i = 0; i < n_; ++i) img[i] = to_sparse(map.col(i));
    std::atomic<bool> ok{true};
    parallel_for(n_, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n_ && ok; ++j) {
            SparseVec lhs;
            std::map<std::size_t, Q> acc;
            for (auto& t : bracket(i, j))
                for (auto& u : img[t.k]) acc[u.k] += t.c * u.c;
            SparseVec rhs = target.bracket(img[i], img[j]);
            SparseVec l2;
            for (auto& [k, c] : acc)
                if (sgn(c) != 0) l2.push_back({k, c});
            if (l2.size() != rhs.size()) {
                ok = false;
                return;
            }
            for (std::size_t t = 0; t < l2.size(); ++t)
                if (l2[t].k != rhs[t].k || l2[t].c != rhs[t].c) {
                    ok = false;
                    return;
                }
        }
    });
    return ok;
}

Subspace LieAlgebra::centralizer(const std::vector<Vec>& gens) const {
    Subspace k = Subspace::full(n_);
    for (const auto& g : gens) {
        if (k.dim() == 0) break;
        SparseVec gs = to_sparse(g);
        Matrix m(n_, k.dim());
        for (std::size_t c = 0; c < k.dim(); ++c) {
            Vec b = to_dense(bracket(to_sparse(k.basis()[c]), gs), n_);
            for (std::size_t r = 0; r < n_; ++r) m(r, c) = b[r];
        }
        std::vector<Vec> nb;
        for (auto& v : solve_kernel(m)) nb.push_back(k.combine(v));
        k = Subspace::span(n_, nb);
    }
    return k;
}

Subspace LieAlgebra::centralizer(const Subspace& s) const { return centralizer(s.basis()); }

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!s.contains(bracket(b[i], b[j]))) return false;
    return true;
}

Subspace LieAlgebra::derived() const {
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (!bracket(i, j).empty()) vs.push_back(to_dense(bracket(i, j), n_));
    return Subspace::span(n_, vs);
}

Subspace LieAlgebra::center() const {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n_; ++i) {
        Vec e(n_);
        e[i] = 1;
        gens.push_back(e);
    }
    return centralizer(gens);
}

LieAlgebra LieAlgebra::restrict_to(const Subspace& s) const {
    LieAlgebra r(s.dim());
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            auto c = s.coords(bracket(b[i], b[j]));
            if (!c) throw LinalgError("restrict_to: subspace is not a subalgebra");
            r.set_bracket(i, j, to_sparse(*c));
        }
    return r;
}

Subspace LieAlgebra::killing_radical() const { return Subspace::span(n_, solve_kernel(killing_form())); }

void LieAlgebra::write(std::ostream& os) const {
    os << "# dim " << n_ << "\n";
    for (std::size_t i = 0; i < n_; ++i) os << "# label " << i << " " << labels_[i] << "\n";
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            for (auto& t : bracket(i, j)) os << i << " " << j << " " << t.k << " " << to_string(t.c) << "\n";
}

LieAlgebra LieAlgebra::read(std::istream& is) {
    std::string line;
    LieAlgebra g;
    bool have_dim = false;
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> acc;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string hash, key;
            ls >> hash >> key;
            if (key == "dim") {
                std::size_t n;
                if (!(ls >> n)) throw LinalgError("bad dim line " + std::to_string(lineno));
                g = LieAlgebra(n);
                have_dim = true;
            } else if (key == "label") {
                std::size_t i;
                std::string tag;
                if (!have_dim || !(ls >> i >> tag) || i >= g.n_)
                    throw LinalgError("bad label line " + std::to_string(lineno));
                g.labels_[i] = tag;
            }
            continue;
        }
        if (!have_dim) throw LinalgError("structure constants before '# dim'");
        std::size_t i, j, k;
        std::string c;
        if (!(ls >> i >> j >> k >> c) || i >= g.n_ || j >= g.n_ || k >= g.n_ || i >= j)
            throw LinalgError("bad structure constant line " + std::to_string(lineno));
        acc[{i, j}].push_back({k, parse_rational(c)});
    }
    if (!have_dim) throw LinalgError("missing '# dim' header");
    for (auto& [ij, v] : acc) g.set_bracket(ij.first, ij.second, v);
    return g;
}

bool LieAlgebra::operator==(const LieAlgebra& o) const {
    if (n_ != o.n_ || labels_ != o.labels_) return false;
    for (std::size_t p = 0; p < br_.size(); ++p) {
        if (br_[p].size() != o.br_[p].size()) return false;
        for (std::size_t t = 0; t < br_[p].size(); ++t)
            if (br_[p][t].k != o.br_[p][t].k || br_[p][t].c != o.br_[p][t].c) return false;
    }
    return true;
}

}  // namespace trialis
