#include "trialis/dynkin.hpp"

#include "trialis/series.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace trialis {

namespace {

RootSystem single(const CartanType& t) { return RootSystem::standard(t.letter, t.rank); }

bool valid_type(char l, int r) {
    switch (l) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    }
    return false;
}

std::string comp_str(const DiagramComponent& c) {
    std::string s = c.type.str();
    if (c.marks.empty()) return s;
    s += "[";
    for (std::size_t i = 0; i < c.marks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.marks[i]);
        if (c.degrees[i] != 1) s += "^" + std::to_string(c.degrees[i]);
    }
    return s + "]";
}

// marks sorted by node with degrees carried along
DiagramComponent normalized(DiagramComponent c) {
    std::vector<std::pair<int, int>> md;
    for (std::size_t i = 0; i < c.marks.size(); ++i) md.emplace_back(c.marks[i], c.degrees[i]);
    std::sort(md.begin(), md.end());
    c.marks.clear();
    c.degrees.clear();
    for (auto [m, d] : md) {
        c.marks.push_back(m);
        c.degrees.push_back(d);
    }
    return c;
}

DiagramComponent canonical_comp(const DiagramComponent& c) {
    std::optional<DiagramComponent> best;
    std::string best_s;
    for (const auto& p : diagram_automorphisms(c.type)) {
        DiagramComponent x = c;
        for (auto& m : x.marks) m = static_cast<int>(p[static_cast<std::size_t>(m - 1)]) + 1;
        x = normalized(x);
        // prefer the smallest node list, compared numerically
        std::ostringstream key;
        for (std::size_t i = 0; i < x.marks.size(); ++i) {
            key << static_cast<char>('0' + x.marks[i]) << static_cast<char>('0' + x.degrees[i]);
        }
        if (!best || key.str() < best_s) {
            best = x;
            best_s = key.str();
        }
    }
    return *best;
}

std::vector<std::vector<long>> standard_cartan(const CartanType& t) { return single(t).cartan(); }

std::vector<int> marks_of(const MarkedDiagram& d) {
    if (d.comps.size() != 1) throw RootError("expected a single-component diagram");
    return d.comps[0].marks;
}

}  // namespace

// ---------------------------------------------------------------- parsing

MarkedDiagram MarkedDiagram::parse(const std::string& text) {
    MarkedDiagram d;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) { throw RootError("bad diagram '" + text + "': " + why); };
    auto number = [&]() {
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
        long v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i++] - '0');
            if (v > 1000) fail("number too large");
        }
        return static_cast<int>(v);
    };
    if (text.empty()) fail("empty");
    for (;;) {
        DiagramComponent c;
        if (i >= text.size()) fail("expected a type letter");
        c.type.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
        c.type.rank = number();
        if (!valid_type(c.type.letter, c.type.rank)) fail("not a finite-type diagram");
        if (i < text.size() && text[i] == '[') {
            ++i;
            for (;;) {
                const int m = number();
                if (m < 1 || m > c.type.rank) fail("mark out of range");
                int deg = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    deg = number();
                    if (deg < 1) fail("degree must be positive");
                }
                if (std::find(c.marks.begin(), c.marks.end(), m) != c.marks.end()) fail("repeated mark");
                c.marks.push_back(m);
                c.degrees.push_back(deg);
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                if (i < text.size() && text[i] == ']') {
                    ++i;
                    break;
                }
                fail("expected ',' or ']'");
            }
        }
        d.comps.push_back(normalized(c));
        if (i == text.size()) break;
        if (text[i] != 'x' && text[i] != '*') fail("expected 'x' between components");
        ++i;
    }
    return d;
}

std::string MarkedDiagram::str() const {
    std::string s;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) s += "x";
        s += comp_str(comps[i]);
    }
    return s;
}

RootSystem MarkedDiagram::system() const {
    if (comps.empty()) throw RootError("empty diagram");
    RootSystem rs = single(comps[0].type);
    for (std::size_t i = 1; i < comps.size(); ++i) rs = RootSystem::product(rs, single(comps[i].type));
    return rs;
}

std::size_t MarkedDiagram::rank() const {
    std::size_t r = 0;
    for (const auto& c : comps) r += static_cast<std::size_t>(c.type.rank);
    return r;
}

std::pair<std::size_t, int> MarkedDiagram::locate(std::size_t node) const {
    for (std::size_t k = 0; k < comps.size(); ++k) {
        const auto r = static_cast<std::size_t>(comps[k].type.rank);
        if (node < r) return {k, static_cast<int>(node) + 1};
        node -= r;
    }
    throw RootError("node out of range");
}

Weight MarkedDiagram::weight() const {
    Weight w(rank(), 0);
    std::size_t off = 0;
    for (const auto& c : comps) {
        for (std::size_t i = 0; i < c.marks.size(); ++i) w[off + static_cast<std::size_t>(c.marks[i] - 1)] += c.degrees[i];
        off += static_cast<std::size_t>(c.type.rank);
    }
    return w;
}

std::string MarkedDiagram::canonical() const {
    std::vector<std::string> parts;
    for (const auto& c : comps) parts.push_back(comp_str(canonical_comp(c)));
    std::sort(parts.begin(), parts.end());
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "x" : "") + parts[i];
    return s;
}

bool MarkedDiagram::equivalent(const MarkedDiagram& o) const { return canonical() == o.canonical(); }

// ---------------------------------------------------------------- dimensions

std::size_t variety_dim(const MarkedDiagram& d) {
    std::size_t dim = 0;
    for (const auto& c : d.comps) {
        if (c.marks.empty()) continue;
        RootSystem rs = single(c.type);
        for (const auto& r : rs.positive_roots()) {
            bool hit = false;
            for (int m : c.marks) hit = hit || r[static_cast<std::size_t>(m - 1)] != 0;
            if (hit) ++dim;
        }
    }
    return dim;
}

Z ambient_dim(const MarkedDiagram& d) {
    Z prod = 1;
    for (const auto& c : d.comps) {
        MarkedDiagram one{{c}};
        prod *= weyl_dimension(single(c.type), one.weight());
    }
    return prod - 1;
}

std::size_t algebra_dim(const MarkedDiagram& d) {
    std::size_t n = 0;
    for (const auto& c : d.comps) n += single(c.type).root_count() + static_cast<std::size_t>(c.type.rank);
    return n;
}

// ---------------------------------------------------------------- symmetries

std::vector<std::vector<std::size_t>> diagram_automorphisms(const CartanType& t) {
    const auto a = standard_cartan(t);
    const std::size_t n = a.size();
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    // rank <= 8; permutations consistent with the matrix, built node by node
    std::vector<std::size_t> cur(n);
    std::vector<bool> used(n, false);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = a[k][k] == a[v][v];
            for (std::size_t m = 0; m < k && ok; ++m) ok = a[k][m] == a[v][cur[m]] && a[m][k] == a[cur[m]][v];
            if (!ok) continue;
            used[v] = true;
            cur[k] = v;
            rec(k + 1);
            used[v] = false;
        }
    };
    rec(0);
    return out;
}

std::vector<std::size_t> default_symmetry(const CartanType& t, int order) {
    const auto n = static_cast<std::size_t>(t.rank);
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    if (order == 3) {
        if (t.letter != 'D' || t.rank != 4) throw RootError("order-3 symmetry exists only on D4");
        p[0] = 2;
        p[2] = 3;
        p[3] = 0;
        return p;
    }
    if (order != 2) throw RootError("symmetry order must be 2 or 3");
    switch (t.letter) {
    case 'A':
        if (n < 2) throw RootError("A1 has no symmetry");
        for (std::size_t i = 0; i < n; ++i) p[i] = n - 1 - i;
        return p;
    case 'D':
        std::swap(p[n - 2], p[n - 1]);
        return p;
    case 'E':
        if (n != 6) break;
        std::swap(p[0], p[5]);
        std::swap(p[2], p[4]);
        return p;
    default: break;
    }
    throw RootError(t.str() + " has no diagram symmetry");
}

MarkedDiagram fold(const MarkedDiagram& d, const std::vector<std::size_t>& perm) {
    if (d.comps.size() != 1) throw RootError("fold expects a single component");
    const auto& c = d.comps[0];
    const auto a = standard_cartan(c.type);
    const std::size_t n = a.size();
    if (perm.size() != n) throw RootError("symmetry has the wrong size");
    {
        std::vector<std::size_t> s = perm;
        std::sort(s.begin(), s.end());
        for (std::size_t i = 0; i < n; ++i)
            if (s[i] != i) throw RootError("not a permutation");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a[perm[i]][perm[j]] != a[i][j]) throw RootError("not a diagram symmetry");
    std::vector<std::size_t> orbit_of(n, n);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < n; ++i) {
        if (orbit_of[i] != n) continue;
        std::vector<std::size_t> o;
        for (std::size_t j = i; orbit_of[j] == n; j = perm[j]) {
            orbit_of[j] = orbits.size();
            o.push_back(j);
        }
        orbits.push_back(o);
    }
    std::map<std::size_t, int> deg;
    for (std::size_t k = 0; k < c.marks.size(); ++k) {
        const auto node = static_cast<std::size_t>(c.marks[k] - 1);
        for (std::size_t j : orbits[orbit_of[node]]) {
            auto it = std::find(c.marks.begin(), c.marks.end(), static_cast<int>(j) + 1);
            if (it == c.marks.end() || c.degrees[static_cast<std::size_t>(it - c.marks.begin())] != c.degrees[k])
                throw RootError("marks are not invariant under the symmetry");
        }
        deg[orbit_of[node]] = c.degrees[k];
    }
    const std::size_t m = orbits.size();
    std::vector<std::vector<long>> f(m, std::vector<long>(m, 0));
    for (std::size_t I = 0; I < m; ++I)
        for (std::size_t J = 0; J < m; ++J) {
            const std::size_t j0 = orbits[J][0];
            long s = 0;
            for (std::size_t i : orbits[I]) s += a[i][j0];
            f[I][J] = s;
        }
    RootSystem rs = RootSystem::from_cartan(f);
    Identification id = identify_type(rs);
    if (id.components.size() != 1) throw RootError("fold is disconnected");
    DiagramComponent out;
    out.type = id.components[0];
    for (auto [o, dg] : deg) {
        out.marks.push_back(static_cast<int>(id.to_standard[o]) + 1);
        out.degrees.push_back(dg);
    }
    return MarkedDiagram{{normalized(out)}};
}

// ---------------------------------------------------------------- subdiagrams

MarkedDiagram subdiagram(const CartanType& t, const std::vector<bool>& keep, const std::map<std::size_t, int>& marks) {
    const auto a = standard_cartan(t);
    const std::size_t n = a.size();
    if (keep.size() != n) throw RootError("keep mask has the wrong size");
    // connected pieces, ordered by their smallest node
    std::vector<int> piece(n, -1);
    std::vector<std::vector<std::size_t>> pieces;
    for (std::size_t s = 0; s < n; ++s) {
        if (!keep[s] || piece[s] >= 0) continue;
        std::vector<std::size_t> stack{s}, nodes;
        piece[s] = static_cast<int>(pieces.size());
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            nodes.push_back(v);
            for (std::size_t w = 0; w < n; ++w)
                if (keep[w] && piece[w] < 0 && a[v][w] != 0) {
                    piece[w] = piece[s];
                    stack.push_back(w);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        pieces.push_back(nodes);
    }
    for (const auto& [node, dg] : marks) {
        (void)dg;
        if (node >= n || !keep[node]) throw RootError("mark on a removed node");
    }
    MarkedDiagram d;
    for (const auto& nodes : pieces) {
        std::vector<std::vector<long>> sub(nodes.size(), std::vector<long>(nodes.size()));
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = 0; j < nodes.size(); ++j) sub[i][j] = a[nodes[i]][nodes[j]];
        Identification id = identify_type(RootSystem::from_cartan(sub));
        DiagramComponent c;
        c.type = id.components[0];
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            auto it = marks.find(nodes[i]);
            if (it == marks.end()) continue;
            c.marks.push_back(static_cast<int>(id.to_standard[i]) + 1);
            c.degrees.push_back(it->second);
        }
        d.comps.push_back(normalized(c));
    }
    return d;
}

bool is_short_node(const CartanType& t, int node) {
    const RootSystem rs = single(t);
    const Vec& d = rs.simple_lengths();
    const Q mx = *std::max_element(d.begin(), d.end());
    return d[static_cast<std::size_t>(node - 1)] < mx;
}

MarkedDiagram asymptotic_directions(const MarkedDiagram& d) {
    const auto marks = marks_of(d);
    if (marks.size() != 1 || d.comps[0].degrees[0] != 1)
        throw RootError("asymptotic directions need a single mark of degree 1");
    const CartanType t = d.comps[0].type;
    if (is_short_node(t, marks[0])) throw RootError("asymptotic directions are not defined at a short node");
    const auto a = standard_cartan(t);
    const auto alpha = static_cast<std::size_t>(marks[0] - 1);
    std::vector<bool> keep(a.size(), true);
    keep[alpha] = false;
    std::map<std::size_t, int> mk;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != alpha && a[alpha][j] != 0) mk[j] = static_cast<int>(a[alpha][j] * a[j][alpha]);
    return subdiagram(t, keep, mk);
}

MarkedDiagram lines_variety(const MarkedDiagram& d) {
    const auto marks = marks_of(d);
    if (marks.size() != 1) throw RootError("lines variety needs a single mark");
    const CartanType t = d.comps[0].type;
    const auto a = standard_cartan(t);
    const auto alpha = static_cast<std::size_t>(marks[0] - 1);
    DiagramComponent c;
    c.type = t;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (j != alpha && a[alpha][j] != 0) {
            c.marks.push_back(static_cast<int>(j) + 1);
            c.degrees.push_back(1);
        }
    return MarkedDiagram{{c}};
}

// ---------------------------------------------------------------- Tits transforms

namespace {

MarkedDiagram marked(const CartanType& g, const std::vector<int>& s) {
    DiagramComponent c;
    c.type = g;
    for (int m : s) {
        if (m < 1 || m > g.rank) throw RootError("node out of range");
        if (std::find(c.marks.begin(), c.marks.end(), m) != c.marks.end()) continue;
        c.marks.push_back(m);
        c.degrees.push_back(1);
    }
    return MarkedDiagram{{normalized(c)}};
}

// D(g) minus `removed`, marked at `marks`
MarkedDiagram remove_and_mark(const CartanType& g, const std::vector<int>& removed, const std::vector<int>& marks) {
    std::vector<bool> keep(static_cast<std::size_t>(g.rank), true);
    for (int r : removed) keep[static_cast<std::size_t>(r - 1)] = false;
    std::map<std::size_t, int> mk;
    for (int m : marks) mk[static_cast<std::size_t>(m - 1)] = 1;
    return subdiagram(g, keep, mk);
}

std::vector<int> minus(const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> r;
    for (int v : x)
        if (std::find(y.begin(), y.end(), v) == y.end()) r.push_back(v);
    return r;
}

}  // namespace

TitsTransform tits_transform(const CartanType& g, const std::vector<int>& s, const std::vector<int>& s2) {
    TitsTransform t;
    t.z = marked(g, s2);
    t.y = remove_and_mark(g, minus(s, s2), minus(s2, s));
    return t;
}

KempfBundle kempf_bundle(const CartanType& g, const std::vector<int>& s, const std::vector<int>& s2) {
    KempfBundle k;
    k.z = marked(g, s2);
    k.z_dim = variety_dim(k.z);
    std::vector<int> a = s, b = s2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (a == b) {
        k.tangent = true;
        k.fiber = k.z;
        k.rank = static_cast<long>(k.z_dim);
        k.pe_dim = 2 * static_cast<long>(k.z_dim) - 1;
        return k;
    }
    k.fiber = remove_and_mark(g, minus(b, a), minus(a, b));
    k.rank = ambient_dim(k.fiber) + 1;
    k.pe_dim = Z(static_cast<long>(k.z_dim)) + k.rank - 1;
    return k;
}

std::vector<int> adjoint_nodes(const CartanType& t) {
    const Weight w = single(t).adjoint_weight();
    std::vector<int> r;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) r.push_back(static_cast<int>(i) + 1);
    return r;
}

// ---------------------------------------------------------------- names

std::string variety_name(const MarkedDiagram& d) {
    std::string out;
    for (std::size_t k = 0; k < d.comps.size(); ++k) {
        const auto& c = d.comps[k];
        if (c.marks.empty()) continue;
        const int n = c.type.rank;
        std::string s;
        int deg = 1;
        if (c.marks.size() == 1) {
            const int m = c.marks[0];
            deg = c.degrees[0];
            const auto num = [](int v) { return std::to_string(v); };
            switch (c.type.letter) {
            case 'A':
                if (m == 1 || m == n) s = "P" + num(n);
                else if (n == 3) s = "Q4";
                else s = "G(" + num(std::min(m, n + 1 - m)) + "," + num(n + 1) + ")";
                break;
            case 'B':
                if (m == 1) s = "Q" + num(2 * n - 1);
                else if (n == 2) s = "P3";
                else if (m == n) s = "S" + num(n + 1);
                else s = "GQ(" + num(m) + "," + num(2 * n + 1) + ")";
                break;
            case 'C':
                if (m == 1) s = "P" + num(2 * n - 1);
                else if (n == 2) s = "Q3";
                else s = "Gw(" + num(m) + "," + num(2 * n) + ")";
                break;
            case 'D':
                if (m == 1 || (n == 4 && m != 2)) s = "Q" + num(2 * n - 2);
                else if (m >= n - 1) s = "S" + num(n);
                else s = "GQ(" + num(m) + "," + num(2 * n) + ")";
                break;
            case 'E':
                if (n == 6 && (m == 1 || m == 6)) s = "OP2";
                else if (n == 7 && m == 7) s = "Gw(O3,O6)";
                break;
            default: break;
            }
        }
        if (s.empty()) {
            s = c.type.str() + "/P";
            for (std::size_t i = 0; i < c.marks.size(); ++i) s += (i ? "," : "") + std::to_string(c.marks[i]);
            bool plain = std::all_of(c.degrees.begin(), c.degrees.end(), [](int x) { return x == 1; });
            if (!plain) s = comp_str(c);
            deg = 1;
        }
        if (deg != 1) s = "v" + std::to_string(deg) + "(" + s + ")";
        if (!out.empty()) out += "x";
        out += s;
    }
    return out.empty() ? "pt" : out;
}

// ---------------------------------------------------------------- tables

namespace {

CartanType series_cartan(int a) {
    switch (a) {
    case 1: return {'F', 4};
    case 2: return {'E', 6};
    case 4: return {'E', 7};
    case 8: return {'E', 8};
    }
    throw RootError("a must be 1, 2, 4 or 8");
}

MarkedDiagram support(const CartanType& t, const Weight& w) {
    std::vector<int> s;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return marked(t, s);
}

// mark sets that are unions of orbits of the diagram automorphism group
std::vector<MarkedDiagram> invariant_markings(const CartanType& t) {
    const auto autos = diagram_automorphisms(t);
    const auto n = static_cast<std::size_t>(t.rank);
    std::set<std::set<int>> orbits;
    for (std::size_t i = 0; i < n; ++i) {
        std::set<int> o;
        for (const auto& p : autos) o.insert(static_cast<int>(p[i]) + 1);
        orbits.insert(o);
    }
    std::vector<MarkedDiagram> out;
    for (const auto& o : orbits) out.push_back(marked(t, std::vector<int>(o.begin(), o.end())));
    return out;
}

}  // namespace

std::vector<FreudenthalRow> freudenthal_table(int a) {
    const CartanType t = series_cartan(a);
    const auto gens = cone_generator_weights(a);
    const Weight &adj = gens[0], &x2 = gens[1], &x3 = gens[2], &y2p = gens[3];

    const auto cands = invariant_markings(t);
    struct Spec {
        const char* kind;
        const char* formula;
        long expected;
        Weight w;
    };
    const std::vector<Spec> specs = {{"point", "9a+6", 9L * a + 6, y2p},
                                     {"line", "11a+9", 11L * a + 9, x3},
                                     {"plane", "9a+11", 9L * a + 11, x2},
                                     {"symplecta", "6a+9", 6L * a + 9, adj}};
    std::vector<FreudenthalRow> rows;
    for (const auto& s : specs) {
        FreudenthalRow r;
        r.kind = s.kind;
        r.formula = s.formula;
        r.expected = s.expected;
        for (const auto& c : cands)
            if (static_cast<long>(variety_dim(c)) == s.expected) r.dim_matches.push_back(c);
        r.chosen = support(t, s.w);
        r.dim = variety_dim(*r.chosen);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::array<std::array<MagicCell, 4>, 4> geometric_magic_square() {
    std::array<std::array<MagicCell, 4>, 4> sq;
    const int as[4] = {1, 2, 4, 8};
    static const char* row1[4] = {"v2(Q1)", "P(TP2)", "Gw(2,6)", "OP2_0"};
    for (int col = 0; col < 4; ++col) {
        const CartanType t = series_cartan(as[col]);
        MarkedDiagram r4 = marked(t, adjoint_nodes(t));
        MarkedDiagram r3 = asymptotic_directions(r4);
        // row 3 is a single marked component for every a
        MarkedDiagram r2 = asymptotic_directions(r3);
        const MarkedDiagram* ds[3] = {&r2, &r3, &r4};
        for (int row = 1; row < 4; ++row) {
            MagicCell& c = sq[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            c.diagram = *ds[row - 1];
            c.dim = variety_dim(*c.diagram);
            c.ambient = ambient_dim(*c.diagram);
            c.name = row == 3 ? t.str() + "ad" : variety_name(*c.diagram);
        }
        MagicCell& c1 = sq[0][static_cast<std::size_t>(col)];
        c1.name = row1[col];
        c1.dim = sq[1][static_cast<std::size_t>(col)].dim - 1;
        c1.ambient = sq[1][static_cast<std::size_t>(col)].ambient - 1;
    }
    return sq;
}

}  // namespace trialis
