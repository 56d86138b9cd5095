#include "trialis/roots.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

namespace trialis {

namespace {

std::size_t height(const RootCoords& c) {
    long h = 0;
    for (long x : c) h += x;
    return static_cast<std::size_t>(h);
}

struct WeightHash {
    std::size_t operator()(const Weight& w) const {
        std::size_t h = 1469598103934665603ull;
        for (long x : w) h = (h ^ static_cast<std::size_t>(x + 1000003)) * 1099511628211ull;
        return h;
    }
};
using WeightMap = std::unordered_map<Weight, long long, WeightHash>;

Weight add(const Weight& a, const Weight& b, long s = 1) {
    Weight r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

long to_long(const Q& x, const char* what) {
    if (!is_integer(x)) throw RootError(std::string(what) + ": expected an integer, got " + to_string(x));
    return x.get_num().get_si();
}

}  // namespace

// ---------------------------------------------------------------- RootSystem

RootSystem RootSystem::from_cartan(const std::vector<std::vector<long>>& a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw RootError("cartan matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && a[i][j] != 2) throw RootError("cartan diagonal must be 2");
            if (i != j && (a[i][j] > 0 || a[i][j] < -3)) throw RootError("cartan off-diagonal out of range");
            if (i != j && (a[i][j] == 0) != (a[j][i] == 0)) throw RootError("cartan pattern not symmetric");
        }
    RootSystem rs;
    rs.a_ = a;
    rs.finish();
    return rs;
}

void RootSystem::finish() {
    const std::size_t n = a_.size();
    // components and symmetrizing lengths
    comps_.clear();
    d_.assign(n, Q(0));
    std::vector<bool> seen(n, false);
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        d_[s] = 1;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            std::size_t i = comp[k];
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || a_[i][j] == 0) continue;
                Q dj = d_[i] * Q(a_[i][j]) / Q(a_[j][i]);
                if (!seen[j]) {
                    seen[j] = true;
                    d_[j] = dj;
                    comp.push_back(j);
                } else if (d_[j] != dj) {
                    throw RootError("cartan matrix is not symmetrizable");
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        Q mx = 0;
        for (auto i : comp) mx = std::max(mx, d_[i]);
        for (auto i : comp) d_[i] = d_[i] * 2 / mx;
        comps_.push_back(comp);
    }
    Matrix am(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) am(i, j) = a_[i][j];
    auto inv = inverse(am);
    if (!inv) throw RootError("cartan matrix is singular");
    ainv_ = *inv;
    f_ = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) f_(i, j) = ainv_(j, i) * d_[j] / 2;
    if (!f_.is_symmetric()) throw RootError("weight form is not symmetric");

    // positive roots, level by level
    pos_.clear();
    std::set<RootCoords> all;
    std::vector<RootCoords> level;
    for (std::size_t i = 0; i < n; ++i) {
        RootCoords e(n, 0);
        e[i] = 1;
        level.push_back(e);
        all.insert(e);
    }
    while (!level.empty()) {
        std::vector<RootCoords> next;
        std::set<RootCoords> nextset;
        for (const auto& b : level) {
            pos_.push_back(b);
            for (std::size_t i = 0; i < n; ++i) {
                long q = 0;
                for (;;) {
                    RootCoords c = b;
                    c[i] -= q + 1;
                    if (c[i] < 0 || !all.count(c)) break;
                    ++q;
                }
                long pair = 0;   // (b, alpha_i^vee)
                for (std::size_t j = 0; j < n; ++j) pair += b[j] * a_[i][j];
                long p = q - pair;
                if (p > 0) {
                    RootCoords c = b;
                    c[i] += 1;
                    if (!all.count(c) && nextset.insert(c).second) next.push_back(c);
                }
            }
        }
        for (const auto& c : next) all.insert(c);
        level = std::move(next);
        if (pos_.size() > 10000) throw RootError("cartan matrix is not of finite type");
    }
    len_.assign(pos_.size(), Q(0));
    cor_.assign(pos_.size(), {});
    for (std::size_t r = 0; r < pos_.size(); ++r) {
        const auto& c = pos_[r];
        Q l = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (c[i] && c[j]) l += Q(c[i] * c[j]) * d_[i] * Q(a_[i][j]) / 2;
        if (sgn(l) <= 0) throw RootError("cartan matrix is not of finite type");
        len_[r] = l;
        cor_[r].resize(n);
        for (std::size_t i = 0; i < n; ++i) cor_[r][i] = to_long(Q(c[i]) * d_[i] / l, "coroot");
    }
}

RootSystem RootSystem::standard(char letter, int rank) {
    const std::size_t n = static_cast<std::size_t>(rank);
    Vec d(n, Q(2));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    auto chain = [&](std::size_t upto) {
        for (std::size_t i = 0; i + 1 < upto; ++i) edges.push_back({i, i + 1});
    };
    switch (letter) {
    case 'A':
        if (rank < 1) throw RootError("A needs rank >= 1");
        chain(n);
        break;
    case 'B':
        if (rank < 2) throw RootError("B needs rank >= 2");
        chain(n);
        d[n - 1] = 1;
        break;
    case 'C':
        if (rank < 2) throw RootError("C needs rank >= 2");
        chain(n);
        for (std::size_t i = 0; i + 1 < n; ++i) d[i] = 1;
        break;
    case 'D':
        if (rank < 3) throw RootError("D needs rank >= 3");
        chain(n - 1);
        edges.push_back({n - 3, n - 1});
        break;
    case 'E':
        if (rank < 6 || rank > 8) throw RootError("E needs rank 6..8");
        edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
        for (std::size_t i = 4; i + 1 < n; ++i) edges.push_back({i, i + 1});
        break;
    case 'F':
        if (rank != 4) throw RootError("F needs rank 4");
        chain(4);
        d[2] = d[3] = 1;
        break;
    case 'G':
        if (rank != 2) throw RootError("G needs rank 2");
        chain(2);
        d[0] = qfrac(2, 3);
        break;
    default:
        throw RootError(std::string("unknown Cartan letter ") + letter);
    }
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    for (auto [i, j] : edges) {
        Q b = -std::max(d[i], d[j]) / 2;
        a[i][j] = to_long(2 * b / d[i], "standard cartan");
        a[j][i] = to_long(2 * b / d[j], "standard cartan");
    }
    return from_cartan(a);
}

RootSystem RootSystem::product(const RootSystem& x, const RootSystem& y) {
    const std::size_t n = x.rank() + y.rank();
    std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < x.rank(); ++i)
        for (std::size_t j = 0; j < x.rank(); ++j) a[i][j] = x.a_[i][j];
    for (std::size_t i = 0; i < y.rank(); ++i)
        for (std::size_t j = 0; j < y.rank(); ++j) a[x.rank() + i][x.rank() + j] = y.a_[i][j];
    return from_cartan(a);
}

RootSystem RootSystem::parse(const std::string& label) {
    RootSystem out;
    bool first = true;
    std::stringstream ss(label);
    std::string part;
    while (std::getline(ss, part, 'x')) {
        if (part.size() < 2 || !std::isupper(static_cast<unsigned char>(part[0])))
            throw RootError("bad Cartan label: " + label);
        int r = 0;
        try {
            std::size_t used = 0;
            r = std::stoi(part.substr(1), &used);
            if (used + 1 != part.size()) throw RootError("bad Cartan label: " + label);
        } catch (const std::logic_error&) {
            throw RootError("bad Cartan label: " + label);
        }
        RootSystem c = standard(part[0], r);
        out = first ? c : product(out, c);
        first = false;
    }
    if (first) throw RootError("empty Cartan label");
    return out;
}

std::size_t RootSystem::long_root_count() const {
    std::size_t c = 0;
    for (const auto& l : len_)
        if (l == 2) ++c;
    return 2 * c;
}

Weight RootSystem::root_weight(const RootCoords& c) const {
    Weight w(rank(), 0);
    for (std::size_t j = 0; j < rank(); ++j)
        for (std::size_t i = 0; i < rank(); ++i) w[j] += c[i] * a_[j][i];
    return w;
}

Vec RootSystem::to_root_coords(const Weight& w) const {
    Vec v(rank());
    for (std::size_t i = 0; i < rank(); ++i) v[i] = w[i];
    return ainv_.apply(v);
}

Q RootSystem::inner(const Weight& x, const Weight& y) const {
    Q s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        if (x[i])
            for (std::size_t j = 0; j < rank(); ++j)
                if (y[j]) s += f_(i, j) * Q(x[i] * y[j]);
    return s;
}

Q RootSystem::inner_root(const Weight& w, const RootCoords& alpha) const {
    Q s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        if (alpha[i] && w[i]) s += Q(alpha[i] * w[i]) * d_[i] / 2;
    return s;
}

long RootSystem::pairing(const Weight& w, std::size_t k) const {
    long s = 0;
    for (std::size_t i = 0; i < rank(); ++i) s += w[i] * cor_[k][i];
    return s;
}

RootCoords RootSystem::highest_root() const {
    if (comps_.size() != 1) throw RootError("highest root needs an irreducible system");
    return *std::max_element(pos_.begin(), pos_.end(),
                             [](const RootCoords& x, const RootCoords& y) { return height(x) < height(y); });
}

bool RootSystem::dominant(const Weight& w) const {
    return std::all_of(w.begin(), w.end(), [](long x) { return x >= 0; });
}

Weight RootSystem::reflect(const Weight& w, std::size_t i) const {
    Weight r = w;
    const long wi = w[i];
    for (std::size_t j = 0; j < rank(); ++j) r[j] -= wi * a_[j][i];
    return r;
}

Weight RootSystem::dominant_conjugate(const Weight& w) const {
    Weight r = w;
    for (;;) {
        std::size_t i = 0;
        while (i < rank() && r[i] >= 0) ++i;
        if (i == rank()) return r;
        r = reflect(r, i);
    }
}

// ---------------------------------------------------------------- identification

std::size_t standard_root_count(char letter, int n) {
    const std::size_t r = static_cast<std::size_t>(n);
    switch (letter) {
    case 'A': return r * (r + 1);
    case 'B':
    case 'C': return 2 * r * r;
    case 'D': return 2 * r * (r - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    }
    return 0;
}

std::string Identification::label() const {
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (i) s += "x";
        s += components[i].str();
    }
    return s;
}

namespace {

std::vector<CartanType> candidates(int r) {
    std::vector<CartanType> c{{'A', r}};
    if (r >= 2) c.push_back({'B', r});
    if (r >= 3) c.push_back({'C', r});
    if (r >= 4) c.push_back({'D', r});
    if (r >= 6 && r <= 8) c.push_back({'E', r});
    if (r == 4) c.push_back({'F', 4});
    if (r == 2) c.push_back({'G', 2});
    return c;
}

// perm[k] = standard node for component node k
bool match(const std::vector<std::vector<long>>& a, const std::vector<std::size_t>& nodes,
           const std::vector<std::vector<long>>& s, std::vector<std::size_t>& perm, std::vector<bool>& used,
           std::size_t k) {
    if (k == nodes.size()) return true;
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (used[t]) continue;
        bool ok = true;
        for (std::size_t m = 0; m < k && ok; ++m)
            ok = a[nodes[k]][nodes[m]] == s[t][perm[m]] && a[nodes[m]][nodes[k]] == s[perm[m]][t];
        if (!ok) continue;
        used[t] = true;
        perm[k] = t;
        if (match(a, nodes, s, perm, used, k + 1)) return true;
        used[t] = false;
    }
    return false;
}

}  // namespace

Identification identify_type(const RootSystem& rs) {
    struct Found {
        CartanType t;
        std::vector<std::size_t> nodes, perm;
    };
    std::vector<Found> found;
    for (const auto& comp : rs.components()) {
        const int r = static_cast<int>(comp.size());
        std::vector<std::vector<long>> sub(comp.size(), std::vector<long>(comp.size()));
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j) sub[i][j] = rs.cartan()[comp[i]][comp[j]];
        RootSystem local = RootSystem::from_cartan(sub);
        bool done = false;
        for (const auto& c : candidates(r)) {
            if (standard_root_count(c.letter, c.rank) != local.root_count()) continue;
            RootSystem s = RootSystem::standard(c.letter, c.rank);
            if (s.long_root_count() != local.long_root_count()) continue;
            std::vector<std::size_t> perm(comp.size());
            std::vector<bool> used(comp.size(), false);
            std::vector<std::size_t> idx(comp.size());
            std::iota(idx.begin(), idx.end(), 0);
            if (match(sub, idx, s.cartan(), perm, used, 0)) {
                found.push_back({c, comp, perm});
                done = true;
                break;
            }
        }
        if (!done) throw RootError("unknown Cartan type for a component of rank " + std::to_string(r));
    }
    std::stable_sort(found.begin(), found.end(), [](const Found& x, const Found& y) {
        if (x.t.letter != y.t.letter) return x.t.letter < y.t.letter;
        return x.t.rank > y.t.rank;
    });
    Identification id;
    id.to_standard.assign(rs.rank(), 0);
    std::size_t off = 0;
    for (const auto& f : found) {
        id.components.push_back(f.t);
        for (std::size_t k = 0; k < f.nodes.size(); ++k) id.to_standard[f.nodes[k]] = off + f.perm[k];
        off += f.nodes.size();
    }
    return id;
}

// ---------------------------------------------------------------- Weyl, Casimir

Z weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    if (lambda.size() != rs.rank()) throw RootError("weight has wrong length");
    if (!rs.dominant(lambda)) throw RootError("weyl_dimension needs a dominant weight");
    Z num = 1, den = 1;
    const Weight lr = add(lambda, rs.rho());
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
        num *= rs.pairing(lr, k);
        den *= rs.pairing(rs.rho(), k);
    }
    Z q = num / den;
    if (q * den != num) throw RootError("weyl_dimension: non-integral product");
    return q;
}

Q casimir_value(const RootSystem& rs, const Weight& lambda) {
    Weight l2 = lambda;
    for (auto& x : l2) x += 2;
    return rs.inner(lambda, l2);
}

// ---------------------------------------------------------------- Freudenthal

Character::Character(const RootSystem& rs, const Weight& lambda) : rs_(&rs), lambda_(lambda) {
    if (lambda.size() != rs.rank() || !rs.dominant(lambda)) throw RootError("character needs a dominant weight");
    const std::size_t n = rs.rank();
    const auto& pos = rs.positive_roots();
    std::vector<Weight> rw;
    for (const auto& a : pos) rw.push_back(rs.root_weight(a));

    // depth vectors: lambda - mu in simple-root coordinates
    std::map<Weight, RootCoords> depth;
    std::vector<Weight> order{lambda};
    depth[lambda] = RootCoords(n, 0);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Weight mu = order[k];
        const RootCoords dm = depth[mu];
        for (std::size_t r = 0; r < pos.size(); ++r) {
            Weight nu = add(mu, rw[r], -1);
            if (!rs.dominant(nu) || depth.count(nu)) continue;
            RootCoords dn = dm;
            for (std::size_t i = 0; i < n; ++i) dn[i] += pos[r][i];
            depth[nu] = dn;
            order.push_back(nu);
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](const Weight& x, const Weight& y) { return height(depth[x]) < height(depth[y]); });

    const Weight lr = add(lambda, rs.rho());
    const Q top = rs.inner(lr, lr);
    mult_[lambda] = 1;
    for (std::size_t k = 1; k < order.size(); ++k) {
        const Weight& mu = order[k];
        const RootCoords& dm = depth[mu];
        Q sum = 0;
        for (std::size_t r = 0; r < pos.size(); ++r) {
            Weight nu = mu;
            RootCoords dn = dm;
            for (;;) {
                bool inside = true;
                for (std::size_t i = 0; i < n; ++i) {
                    dn[i] -= pos[r][i];
                    if (dn[i] < 0) inside = false;
                }
                if (!inside) break;
                nu = add(nu, rw[r]);
                auto it = mult_.find(rs.dominant_conjugate(nu));
                if (it != mult_.end() && it->second) sum += Q(static_cast<long>(it->second)) * rs.inner_root(nu, pos[r]);
            }
        }
        const Weight mr = add(mu, rs.rho());
        Q m = 2 * sum / (top - rs.inner(mr, mr));
        mult_[mu] = to_long(m, "freudenthal multiplicity");
    }
}

long long Character::multiplicity(const Weight& mu) const {
    auto it = mult_.find(rs_->dominant_conjugate(mu));
    return it == mult_.end() ? 0 : it->second;
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant) {
    std::set<Weight> seen{dominant};
    std::vector<Weight> out{dominant};
    for (std::size_t k = 0; k < out.size(); ++k)
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            if (out[k][i] == 0) continue;
            Weight r = rs.reflect(out[k], i);
            if (seen.insert(r).second) out.push_back(r);
        }
    return out;
}

std::vector<std::pair<Weight, long long>> Character::all_weights() const {
    std::vector<std::pair<Weight, long long>> out;
    for (const auto& [w, m] : mult_)
        if (m)
            for (auto& x : weyl_orbit(*rs_, w)) out.push_back({x, m});
    return out;
}

long long Character::total() const {
    long long t = 0;
    for (const auto& [w, m] : mult_) t += m * static_cast<long long>(weyl_orbit(*rs_, w).size());
    return t;
}

long long weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    return Character(rs, lambda).multiplicity(mu);
}

// ---------------------------------------------------------------- peeling

std::vector<Constituent> peel(const RootSystem& rs, std::map<Weight, long long> ch) {
    std::vector<Constituent> out;
    for (auto it = ch.begin(); it != ch.end();) it = it->second == 0 ? ch.erase(it) : std::next(it);
    while (!ch.empty()) {
        auto best = ch.begin();
        Vec bc = rs.to_root_coords(best->first);
        for (auto it = std::next(ch.begin()); it != ch.end(); ++it) {
            Vec c = rs.to_root_coords(it->first);
            if (c > bc) {
                bc = std::move(c);
                best = it;
            }
        }
        const Weight top = best->first;
        const long long m = best->second;
        if (m < 0) throw RootError("peeling met a negative multiplicity");
        Character c(rs, top);
        for (const auto& [w, k] : c.dominant()) {
            auto& slot = ch[w];
            slot -= m * k;
            if (slot < 0) throw RootError("peeling met a negative multiplicity");
            if (slot == 0) ch.erase(w);
        }
        out.push_back({top, m, weyl_dimension(rs, top)});
    }
    return out;
}

std::vector<Constituent> power_decompose(const RootSystem& rs, const Weight& lambda, int k, Parity p) {
    if (k != 2 && k != 3) throw RootError("power_decompose handles k = 2, 3");
    Character c(rs, lambda);
    const auto ws = c.all_weights();
    auto scale = [](const Weight& w, long s) {
        Weight r = w;
        for (auto& x : r) x *= s;
        return r;
    };
    std::map<Weight, long long> acc;
    const long long sign = p == Parity::sym ? 1 : -1;
    if (k == 2) {
        for (const auto& [x, mx] : ws)
            for (const auto& [y, my] : ws) {
                Weight w = add(x, y);
                if (rs.dominant(w)) acc[w] += mx * my;
            }
        for (const auto& [x, mx] : ws) {
            Weight w = scale(x, 2);
            if (rs.dominant(w)) acc[w] += sign * mx;
        }
        for (auto& [w, m] : acc) {
            if (m % 2) throw RootError("odd square character");
            m /= 2;
        }
    } else {
        WeightMap sq;
        for (const auto& [x, mx] : ws)
            for (const auto& [y, my] : ws) sq[add(x, y)] += mx * my;
        for (const auto& [x, mx] : ws)
            for (const auto& [y, my] : sq) {
                Weight w = add(x, y);
                if (rs.dominant(w)) acc[w] += mx * my;
            }
        for (const auto& [x, mx] : ws)
            for (const auto& [y, my] : ws) {
                Weight w = add(scale(x, 2), y);
                if (rs.dominant(w)) acc[w] += 3 * sign * mx * my;
            }
        for (const auto& [x, mx] : ws) {
            Weight w = scale(x, 3);
            if (rs.dominant(w)) acc[w] += 2 * mx;
        }
        for (auto& [w, m] : acc) {
            if (m % 6) throw RootError("non-integral cube character");
            m /= 6;
        }
    }
    return peel(rs, std::move(acc));
}

std::vector<Constituent> tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    std::map<Weight, long long> acc;
    const std::size_t n = rs.rank();
    for (const auto& [nu, m] : Character(rs, mu).all_weights()) {
        Weight w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = lambda[i] + nu[i] + 1;
        long sign = 1;
        bool wall = false;
        for (;;) {
            std::size_t i = 0;
            while (i < n && w[i] > 0) ++i;
            if (i == n) break;
            if (w[i] == 0) {
                wall = true;
                break;
            }
            w = rs.reflect(w, i);
            sign = -sign;
        }
        if (wall) continue;
        for (auto& x : w) --x;
        acc[w] += sign * m;
    }
    std::vector<Constituent> out;
    for (const auto& [w, m] : acc) {
        if (m < 0) throw RootError("tensor product met a negative multiplicity");
        if (m > 0) out.push_back({w, m, weyl_dimension(rs, w)});
    }
    std::sort(out.begin(), out.end(), [&](const Constituent& x, const Constituent& y) {
        return rs.to_root_coords(x.weight) > rs.to_root_coords(y.weight);
    });
    return out;
}

EigenspaceTest casimir_eigenspace_test(const RootSystem& h, const Weight& lambda) {
    EigenspaceTest t;
    t.constituents = square_decompose(h, lambda, Parity::alt);
    const Weight twice = add(lambda, lambda);
    std::vector<Q> tangent;
    for (std::size_t i = 0; i < h.rank(); ++i) {
        if (lambda[i] == 0) continue;
        RootCoords e(h.rank(), 0);
        e[i] = 1;
        tangent.push_back(casimir_value(h, add(twice, h.root_weight(e), -1)));
    }
    if (tangent.empty()) throw RootError("eigenspace test needs a nonzero weight");
    t.tangent_value = tangent.front();
    t.single = std::all_of(tangent.begin(), tangent.end(), [&](const Q& x) { return x == t.tangent_value; });
    Z total = 0, shared = 0;
    for (const auto& c : t.constituents) {
        Z d = c.dim * static_cast<long>(c.multiplicity);
        total += d;
        if (casimir_value(h, c.weight) == t.tangent_value)
            shared += d;
        else
            t.single = false;
    }
    t.codim = total - shared;
    return t;
}

// ---------------------------------------------------------------- extraction

namespace {

bool positive(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x)) return sgn(x) > 0;
    return false;
}

Q form_apply(const Matrix& f, const Vec& x, const Vec& y) {
    Q s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]))
            for (std::size_t j = 0; j < y.size(); ++j)
                if (sgn(y[j])) s += x[i] * f(i, j) * y[j];
    return s;
}

}  // namespace

Weight ExtractedRoots::dynkin_labels(const Vec& w) const {
    Weight out;
    for (auto s : simple) {
        const Vec& a = roots[s];
        out.push_back(to_long(2 * form_apply(form, w, a) / form_apply(form, a, a), "dynkin label"));
    }
    return out;
}

Vec ExtractedRoots::highest_coroot(std::size_t dim) const {
    std::size_t best = roots.size();
    long bh = -1;
    for (std::size_t r = 0; r < roots.size(); ++r) {
        long h = 0;
        for (long x : coords[r]) h += x;
        if (h > bh) {
            bh = h;
            best = r;
        }
    }
    const Vec& th = roots[best];
    const Q tt = form_apply(form, th, th);
    Vec x = form.apply(th);
    Vec el(dim, Q(0));
    for (std::size_t k = 0; k < cartan.size(); ++k) {
        Q c = 2 * x[k] / tt;
        if (sgn(c))
            for (std::size_t i = 0; i < dim; ++i) el[i] += c * cartan[k][i];
    }
    return el;
}

ExtractedRoots extract_root_system(const LieAlgebra& l, const std::vector<Vec>& cartan) {
    ExtractedRoots r;
    r.cartan = cartan;
    const std::size_t rk = cartan.size();
    std::vector<SparseMatrix> ops;
    for (const auto& h : cartan) ops.push_back(l.ad_sparse(h));
    auto spaces = simultaneous_eigenspaces(ops, l.dim());
    for (auto& e : spaces) {
        bool zero = std::all_of(e.label.begin(), e.label.end(), [](const Q& x) { return sgn(x) == 0; });
        if (zero) {
            r.zero_dim = e.space.dim();
            continue;
        }
        if (e.space.dim() != 1) throw RootError("root space of dimension " + std::to_string(e.space.dim()));
        r.roots.push_back(e.label);
        r.root_vectors.push_back(e.space.basis()[0]);
    }
    if (r.zero_dim != rk)
        throw RootError("cartan is not maximal: zero eigenspace has dimension " + std::to_string(r.zero_dim) +
                        ", expected " + std::to_string(rk));
    Matrix k(rk, rk);
    for (const auto& a : r.roots)
        for (std::size_t i = 0; i < rk; ++i)
            for (std::size_t j = 0; j < rk; ++j) k(i, j) += a[i] * a[j];
    auto kinv = inverse(k);
    if (!kinv) throw RootError("roots do not span the dual of the cartan");
    r.form = *kinv;

    std::set<Vec> pos;
    for (const auto& a : r.roots)
        if (positive(a)) pos.insert(a);
    std::map<Vec, std::size_t> index;
    for (std::size_t i = 0; i < r.roots.size(); ++i) index[r.roots[i]] = i;
    for (const auto& a : pos) {
        bool decomposable = false;
        for (const auto& b : pos) {
            Vec c(rk);
            for (std::size_t i = 0; i < rk; ++i) c[i] = a[i] - b[i];
            if (pos.count(c)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) r.simple.push_back(index[a]);
    }
    if (r.simple.size() != rk)
        throw RootError("found " + std::to_string(r.simple.size()) + " simple roots for rank " + std::to_string(rk));
    std::vector<std::vector<long>> a(rk, std::vector<long>(rk));
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < rk; ++j) {
            const Vec& x = r.roots[r.simple[i]];
            const Vec& y = r.roots[r.simple[j]];
            a[i][j] = to_long(2 * form_apply(r.form, x, y) / form_apply(r.form, x, x), "cartan integer");
        }
    r.system = RootSystem::from_cartan(a);
    if (r.system.root_count() != r.roots.size())
        throw RootError("root count " + std::to_string(r.roots.size()) + " does not match the Cartan matrix");
    r.type = identify_type(r.system);
    Matrix s(rk, rk);
    for (std::size_t i = 0; i < rk; ++i)
        for (std::size_t j = 0; j < rk; ++j) s(j, i) = r.roots[r.simple[i]][j];
    auto sinv = inverse(s);
    for (const auto& root : r.roots) {
        Vec c = sinv->apply(root);
        RootCoords rc;
        for (const auto& x : c) rc.push_back(to_long(x, "root coordinate"));
        r.coords.push_back(rc);
    }
    return r;
}

Grading highest_root_grading(const LieAlgebra& l, const ExtractedRoots& r) {
    Grading g;
    g.element = r.highest_coroot(l.dim());
    auto spaces = simultaneous_eigenspaces(std::vector<SparseMatrix>{l.ad_sparse(g.element)}, l.dim());
    for (auto& e : spaces) {
        const Q& v = e.label[0];
        if (!is_integer(v) || abs(v) > 2) throw RootError("grading spectrum leaves {0,+-1,+-2}");
        long k = v.get_num().get_si();
        g.dims[k] = e.space.dim();
        g.pieces[k] = e.space;
    }
    if (g.dims[2] != 1) throw RootError("top graded piece is not one-dimensional");
    return g;
}

std::map<long, std::size_t> highest_root_grading_dims(const RootSystem& rs) {
    std::map<long, std::size_t> dims;
    const Weight th = rs.adjoint_weight();
    dims[0] = rs.rank();
    for (const auto& a : rs.positive_roots()) {
        long k = to_long(rs.inner_root(th, a), "grade");
        dims[k] += 1;
        dims[-k] += 1;
    }
    return dims;
}

std::vector<Weight> module_highest_weights(const ExtractedRoots& r, const std::vector<Matrix>& action) {
    auto spaces = simultaneous_eigenspaces(action);
    std::set<Vec> weights;
    for (const auto& e : spaces) weights.insert(e.label);
    std::vector<Weight> out;
    for (const auto& w : weights) {
        bool top = true;
        for (const auto& a : r.roots) {
            if (!positive(a)) continue;
            Vec s(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) s[i] = w[i] + a[i];
            if (weights.count(s)) {
                top = false;
                break;
            }
        }
        if (top) out.push_back(r.dynkin_labels(w));
    }
    return out;
}

}  // namespace trialis
