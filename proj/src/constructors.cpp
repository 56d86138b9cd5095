#include "trialis/constructors.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace trialis {

namespace {

bool valid_type(char l, int r) {
    switch (l) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 3;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    }
    return false;
}

Weight add(const Weight& x, const Weight& y, long s = 1) {
    Weight r = x;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * y[i];
    return r;
}

// Casimir with the form scaled by 1/d on a component of Veronese degree d
struct ScaledCasimir {
    const MarkedDiagram& y;
    const RootSystem& rs;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::vector<Q> scale;

    ScaledCasimir(const MarkedDiagram& d, const RootSystem& r) : y(d), rs(r) {
        std::size_t off = 0;
        for (const auto& c : d.comps) {
            if (c.degrees.size() > 1) throw RootError("each factor carries a single mark");
            const auto n = static_cast<std::size_t>(c.type.rank);
            ranges.emplace_back(off, off + n);
            scale.push_back(c.degrees.empty() ? Q(1) : Q(1, c.degrees[0]));
            off += n;
        }
    }
    Q operator()(const Weight& mu) const {
        Q s = 0;
        for (std::size_t k = 0; k < ranges.size(); ++k) {
            Weight part(mu.size(), 0);
            for (std::size_t i = ranges[k].first; i < ranges[k].second; ++i) part[i] = mu[i];
            s += scale[k] * casimir_value(rs, part);
        }
        return s;
    }
};

RoundRow make_row(int round, const MarkedDiagram& y, const Identification2& id) {
    RoundRow r;
    r.round = round;
    r.y = y;
    r.x = id.x;
    r.y_name = variety_name(y);
    r.x_name = variety_name(id.x);
    r.algebra = id.algebra;
    r.y_ambient = ambient_dim(y);
    r.x_ambient = ambient_dim(id.x);
    r.bookkeeping = id.bookkeeping;
    r.round_trip = asymptotic_directions(id.x).canonical() == y.canonical();
    return r;
}

MarkedDiagram single_marked(const CartanType& t, int node, int degree = 1) {
    return MarkedDiagram{{DiagramComponent{t, {node}, {degree}}}};
}

// canonical single-component reservoir entry
MarkedDiagram canon(const MarkedDiagram& d) { return MarkedDiagram::parse(d.canonical()); }

struct Factor {
    std::size_t entry;
    int degree;
};

// multisets of factors of size 1..r, indices nondecreasing
void enumerate(const std::vector<MarkedDiagram>& res, int r, int dmax, const std::function<void(const std::vector<Factor>&)>& f) {
    std::vector<Factor> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t start, int dstart) {
        if (!cur.empty()) f(cur);
        if (static_cast<int>(cur.size()) == r) return;
        for (std::size_t e = start; e < res.size(); ++e)
            for (int d = (e == start ? dstart : 1); d <= dmax; ++d) {
                cur.push_back({e, d});
                rec(e, d);
                cur.pop_back();
            }
    };
    rec(0, 1);
}

MarkedDiagram build(const std::vector<MarkedDiagram>& res, const std::vector<Factor>& fs) {
    MarkedDiagram y;
    for (const auto& f : fs) {
        DiagramComponent c = res[f.entry].comps[0];
        c.degrees[0] = f.degree;
        y.comps.push_back(c);
    }
    return y;
}

std::string pstr(const Z& n) { return "P" + n.get_str(); }

Z binom_z(long n, long k) {
    if (k < 0 || k > n) return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool single_comp(const MarkedDiagram& d, char letter, int mark, int degree) {
    if (d.comps.size() != 1) return false;
    const auto& c = d.comps[0];
    return c.type.letter == letter && c.marks.size() == 1 && c.marks[0] == mark && c.degrees[0] == degree;
}

}  // namespace

// ---------------------------------------------------------------- admissibility

EigenspaceTest tangent_test(const MarkedDiagram& y) {
    const RootSystem rs = y.system();
    const Weight lambda = y.weight();
    const ScaledCasimir cas(y, rs);
    EigenspaceTest t;
    t.constituents = square_decompose(rs, lambda, Parity::alt);
    std::vector<Q> tangent;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (lambda[i] == 0) continue;
        RootCoords e(rs.rank(), 0);
        e[i] = 1;
        tangent.push_back(cas(add(add(lambda, lambda), rs.root_weight(e), -1)));
    }
    if (tangent.empty()) throw RootError("tangent test needs a nonzero weight");
    t.tangent_value = tangent.front();
    t.single = std::all_of(tangent.begin(), tangent.end(), [&](const Q& x) { return x == t.tangent_value; });
    const bool tangent_equal = t.single;
    Z total = 0, shared = 0;
    for (const auto& c : t.constituents) {
        Z d = c.dim * static_cast<long>(c.multiplicity);
        total += d;
        if (cas(c.weight) == t.tangent_value)
            shared += d;
        else
            t.single = false;
    }
    t.codim = tangent_equal ? Z(total - shared) : Z(total);
    return t;
}

bool minuscule_admissible(const MarkedDiagram& y) { return tangent_test(y).single; }

bool adjoint_admissible(const MarkedDiagram& y) {
    const EigenspaceTest t = tangent_test(y);
    if (t.codim != 1) return false;
    const RootSystem rs = y.system();
    const ScaledCasimir cas(y, rs);
    for (const auto& c : t.constituents)
        if (cas(c.weight) != t.tangent_value)
            return std::all_of(c.weight.begin(), c.weight.end(), [](long x) { return x == 0; });
    return false;
}

// ---------------------------------------------------------------- identification

std::string algebra_label(const CartanType& t) {
    const int n = t.rank;
    switch (t.letter) {
    case 'A': return "sl" + std::to_string(n + 1);
    case 'B': return "so" + std::to_string(2 * n + 1);
    case 'C': return "sp" + std::to_string(2 * n);
    case 'D': return "so" + std::to_string(2 * n);
    case 'E': return "e" + std::to_string(n);
    case 'F': return "f4";
    case 'G': return "g2";
    }
    return t.str();
}

Identification2 identify_output(const MarkedDiagram& y, Mode mode) {
    const std::string target = y.canonical();
    const int r = static_cast<int>(y.rank()) + 1;
    std::vector<MarkedDiagram> found;
    std::set<std::string> seen;
    for (char l : std::string("ABCDEFG")) {
        if (!valid_type(l, r)) continue;
        const CartanType t{l, r};
        const RootSystem rs = RootSystem::standard(l, r);
        const RootCoords top = rs.highest_root();
        const auto adj = adjoint_nodes(t);
        for (int a = 1; a <= r; ++a) {
            if (is_short_node(t, a)) continue;
            if (mode == Mode::minuscule && top[static_cast<std::size_t>(a - 1)] != 1) continue;
            if (mode == Mode::adjoint && !(adj.size() == 1 && adj[0] == a)) continue;
            const MarkedDiagram x = single_marked(t, a);
            if (asymptotic_directions(x).canonical() != target) continue;
            if (seen.insert(x.canonical()).second) found.push_back(canon(x));
        }
    }
    if (found.empty()) throw RootError("no diagram has asymptotic directions " + target);
    if (found.size() > 1) throw RootError("several diagrams have asymptotic directions " + target);
    Identification2 id;
    id.x = found.front();
    id.matches = found;
    id.algebra = algebra_label(id.x.comps[0].type);
    id.g_dim = algebra_dim(id.x);
    id.h_dim = algebra_dim(y);
    id.t_dim = ambient_dim(y) + 1;
    const long extra = mode == Mode::minuscule ? 1 : 3;
    id.bookkeeping = Z(static_cast<long>(id.g_dim)) == Z(static_cast<long>(id.h_dim)) + extra + 2 * id.t_dim;
    return id;
}

// ---------------------------------------------------------------- rounds

RoundsResult run_rounds(Mode mode, int n_rounds, const RoundOptions& opt) {
    RoundsResult out;
    std::vector<MarkedDiagram> res{MarkedDiagram::parse("A1[1]")};
    std::set<std::string> in_res{res[0].canonical()};
    std::set<std::string> tested;
    std::size_t new_from = 0;
    const long tmax = opt.max_t ? opt.max_t : (mode == Mode::adjoint ? 64 : 512);
    const int rmax = opt.max_factors ? opt.max_factors : 2;
    const int dmax = opt.max_degree ? opt.max_degree : 2;

    for (int round = 1; round <= n_rounds; ++round) {
        std::vector<RoundRow> rows;
        std::vector<MarkedDiagram> added;
        const std::size_t res_size = res.size();
        enumerate(res, rmax, dmax, [&](const std::vector<Factor>& fs) {
            if (std::none_of(fs.begin(), fs.end(), [&](const Factor& f) { return f.entry >= new_from; })) return;
            MarkedDiagram y = build(res, fs);
            if (static_cast<int>(y.rank()) > opt.max_rank) return;
            if (ambient_dim(y) + 1 > tmax) return;
            if (!tested.insert(y.canonical()).second) return;
            ++out.tested;
            if (!minuscule_admissible(y)) {
                out.trash.push_back(y);
                return;
            }
            const Identification2 id = identify_output(y, Mode::minuscule);
            rows.push_back(make_row(round, y, id));
            if (in_res.insert(id.x.canonical()).second) added.push_back(id.x);
        });
        new_from = res_size;
        for (auto& a : added) res.push_back(a);
        out.rounds.push_back(std::move(rows));
    }

    if (mode == Mode::adjoint) {
        std::vector<RoundRow> rows;
        std::set<std::string> adj_tested;
        const int ra = opt.max_factors ? opt.max_factors : 3;
        const int da = opt.max_degree ? opt.max_degree : 3;
        enumerate(res, ra, da, [&](const std::vector<Factor>& fs) {
            MarkedDiagram y = build(res, fs);
            if (static_cast<int>(y.rank()) > opt.max_rank) return;
            if (ambient_dim(y) + 1 > tmax) return;
            if (!adj_tested.insert(y.canonical()).second) return;
            ++out.tested;
            if (!adjoint_admissible(y)) return;
            rows.push_back(make_row(n_rounds + 1, y, identify_output(y, Mode::adjoint)));
        });
        out.rounds.push_back(std::move(rows));
    }
    out.reservoir = res;
    return out;
}

// ---------------------------------------------------------------- rendering

std::string render_table(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> w;
    for (const auto& row : cells)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (w.size() <= j) w.push_back(0);
            w[j] = std::max(w[j], row[j].size());
        }
    std::string out;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            line += row[j];
            if (j + 1 < row.size()) line += std::string(w[j] - row[j].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_round_table(const std::vector<RoundRow>& rows) {
    std::vector<const RoundRow*> sorted;
    for (const auto& r : rows) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const RoundRow* a, const RoundRow* b) {
        if (a->y_ambient != b->y_ambient) return a->y_ambient < b->y_ambient;
        return a->y_name < b->y_name;
    });
    std::vector<std::vector<std::string>> cells{{"Y", "P^{n-1}", "X", "P^N"}};
    for (const auto* r : sorted) cells.push_back({r->y_name, pstr(r->y_ambient), r->x_name, pstr(r->x_ambient)});
    return render_table(cells);
}

std::string family_name(StableFamily f) {
    switch (f) {
    case StableFamily::projective: return "projective";
    case StableFamily::veronese: return "veronese";
    case StableFamily::segre: return "segre";
    case StableFamily::quadric_even: return "quadric_even";
    case StableFamily::quadric_odd: return "quadric_odd";
    case StableFamily::grassmann_2: return "grassmann_2";
    case StableFamily::none: return "none";
    }
    return "none";
}

StableFamily stable_family(const RoundRow& row, bool* formulas_hold) {
    const MarkedDiagram y = canon(row.y);
    const MarkedDiagram x = canon(row.x);
    const long ry = static_cast<long>(y.rank());
    const auto& xc = x.comps[0];
    const char xl = xc.type.letter;
    const int xm = xc.marks[0];
    const Z ya = row.y_ambient, xa = row.x_ambient;
    auto hold = [&](bool ok) {
        if (formulas_hold) *formulas_hold = ok;
    };
    // P^{n-1} -> P^n
    if (single_comp(y, 'A', 1, 1) && xl == 'A' && xm == 1) {
        const long n = ry + 1;
        hold(ya == n - 1 && xa == n);
        return StableFamily::projective;
    }
    // v2(P^{m-1}) -> Gw(m,2m)
    if (single_comp(y, 'A', 1, 2)) {
        const long m = ry + 1;
        const bool xok = (xl == 'C' && xm == xc.type.rank && xc.type.rank == m) || (m == 2 && xl == 'B' && xm == 1);
        // Catalan number C_{m+1}
        const Z catalan = binom_z(2 * m + 2, m + 1) / (m + 2);
        hold(xok && ya == binom_z(m + 1, 2) - 1 && xa == catalan - 1);
        return StableFamily::veronese;
    }
    // P^{k-1} x P^{l-1} -> G(k, k+l)
    if (y.comps.size() == 2 && std::all_of(y.comps.begin(), y.comps.end(), [](const DiagramComponent& c) {
            return c.type.letter == 'A' && c.marks.size() == 1 && c.marks[0] == 1 && c.degrees[0] == 1;
        })) {
        const long k = y.comps[0].type.rank + 1, l = y.comps[1].type.rank + 1;
        const bool xok = xl == 'A' && xc.type.rank == k + l - 1 && (xm == k || xm == l);
        hold(xok && ya == Z(k * l - 1) && xa == binom_z(k + l, k) - 1);
        return StableFamily::segre;
    }
    // Q^{2m-2} -> Q^{2m}
    if (single_comp(y, 'D', 1, 1) || (single_comp(y, 'A', 2, 1) && ry == 3)) {
        const long m = y.comps[0].type.letter == 'D' ? ry : 3;
        hold(xl == 'D' && xm == 1 && ya == 2 * m - 1 && xa == 2 * m + 1);
        return StableFamily::quadric_even;
    }
    // Q^{2m-1} -> Q^{2m+1}
    if (single_comp(y, 'B', 1, 1)) {
        const long m = ry;
        hold(xl == 'B' && xm == 1 && ya == 2 * m && xa == 2 * m + 2);
        return StableFamily::quadric_odd;
    }
    // G(2,m) -> S_m
    if (single_comp(y, 'A', 2, 1)) {
        const long m = ry + 1;
        Z spin;
        mpz_ui_pow_ui(spin.get_mpz_t(), 2, static_cast<unsigned long>(m - 1));
        hold(xl == 'D' && xc.type.rank == m && xm >= m - 1 && ya == binom_z(m, 2) - 1 && xa == spin - 1);
        return StableFamily::grassmann_2;
    }
    hold(true);
    return StableFamily::none;
}

std::string render_stable_table(const std::vector<RoundRow>& rows) {
    static const std::vector<std::pair<StableFamily, std::vector<std::string>>> templates{
        {StableFamily::projective, {"P^{n-1}", "P^{n-1}", "P^n", "P^n"}},
        {StableFamily::veronese, {"v2(P^{m-1})", "P^{binom(m+1,2)-1}", "Gw(m,2m)", "P^{C_{m+1}-1}"}},
        {StableFamily::segre, {"P^{k-1}xP^{l-1}", "P^{kl-1}", "G(k,k+l)", "P^{binom(k+l,k)-1}"}},
        {StableFamily::quadric_even, {"Q^{2m-2}", "P^{2m-1}", "Q^{2m}", "P^{2m+1}"}},
        {StableFamily::quadric_odd, {"Q^{2m-1}", "P^{2m}", "Q^{2m+1}", "P^{2m+2}"}},
        {StableFamily::grassmann_2, {"G(2,m)", "P^{binom(m,2)-1}", "S_m", "P^{2^{m-1}-1}"}},
    };
    std::set<StableFamily> present;
    for (const auto& r : rows) {
        bool ok = false;
        const StableFamily f = stable_family(r, &ok);
        if (f != StableFamily::none && ok) present.insert(f);
    }
    std::vector<std::vector<std::string>> cells{{"Y", "P^{n-1}", "X", "P^N"}};
    for (const auto& [f, t] : templates)
        if (present.count(f)) cells.push_back(t);
    return render_table(cells);
}

std::string render_terminal_path(const std::vector<RoundRow>& rows, const std::string& start) {
    std::string cur = start, out = start;
    std::set<std::string> visited{start};
    for (;;) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const RoundRow& r) { return r.y_name == cur; });
        if (it == rows.end() || !visited.insert(it->x_name).second) break;
        cur = it->x_name;
        out += " -> " + cur;
    }
    return out + "\n";
}

Z nonfundamental_ambient(char letter, int rank) {
    const auto dims = highest_root_grading_dims(RootSystem::standard(letter, rank));
    auto it = dims.find(1);
    return Z(static_cast<long>(it == dims.end() ? 0 : it->second)) - 1;
}

std::vector<AdjointRow> adjoint_table_rows(const std::vector<RoundRow>& rows) {
    // fixed family order: g2, so, f4, e6, e7, e8
    const std::vector<std::string> order{"G2", "so", "F4", "E6", "E7", "E8"};
    std::map<std::string, AdjointRow> found;
    bool so_ok = true, so_seen = false;
    for (const auto& r : rows) {
        const CartanType t = r.x.comps[0].type;
        if (t.letter == 'B' || t.letter == 'D') {
            // P1 x Q^{m-4} in P^{2m-5}, g = so_{m+2}
            const long dimv = t.letter == 'B' ? 2 * t.rank + 1 : 2 * t.rank;
            const long m = dimv - 2;
            so_seen = true;
            so_ok = so_ok && r.y_ambient == 2 * m - 5 && r.bookkeeping;
            continue;
        }
        found[t.str()] = AdjointRow{r.y_name, pstr(r.y_ambient), r.algebra, ""};
    }
    std::vector<AdjointRow> out;
    for (const auto& key : order) {
        if (key == "so") {
            if (so_seen && so_ok) out.push_back({"P1xQ^{m-4}", "P^{2m-5}", "so_{m+2}", ""});
            continue;
        }
        auto it = found.find(key);
        if (it != found.end()) out.push_back(it->second);
    }
    bool sl_ok = true, sp_ok = true;
    for (int k = 3; k <= 9; ++k) sl_ok = sl_ok && nonfundamental_ambient('A', k - 1) == 2 * k - 5;
    for (int m = 2; m <= 8; ++m) sp_ok = sp_ok && nonfundamental_ambient('C', m) == 2 * m - 3;
    if (sl_ok) out.push_back({"P^{k-3}uP^{k-3}", "P^{2k-5}", "sl_k", "not in reservoir"});
    if (sp_ok) out.push_back({"empty", "P^{2m-3}", "sp_{2m}", "not in reservoir"});
    return out;
}

std::string render_adjoint_table(const std::vector<RoundRow>& rows) {
    std::vector<std::vector<std::string>> cells{{"Y", "P^{n-2}", "g", ""}};
    for (const auto& r : adjoint_table_rows(rows)) cells.push_back({r.y, r.ambient, r.algebra, r.note});
    return render_table(cells);
}

}  // namespace trialis
