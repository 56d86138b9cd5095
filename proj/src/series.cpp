#include "trialis/series.hpp"

#include "trialis/magic_square.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>

namespace trialis {

namespace {

Q checked_div(const Q& n, const Q& d, const char* what) {
    if (is_zero(d)) throw PoleError(std::string("pole in the formula for ") + what);
    return n / d;
}

Q qabs(const Q& x) { return sgn(x) < 0 ? Q(-x) : x; }

Weight scaled(const Weight& w, long k) {
    Weight r = w;
    for (auto& x : r) x *= k;
    return r;
}

Weight plus(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

bool is_zero_weight(const Weight& w) {
    return std::all_of(w.begin(), w.end(), [](long x) { return x == 0; });
}

}  // namespace

// ---------------------------------------------------------------- Vogel

bool VogelPoint::projectively_equal(const VogelPoint& o) const {
    const std::array<Q, 3> x{alpha, beta, gamma};
    std::array<Q, 3> y{o.alpha, o.beta, o.gamma};
    std::array<int, 3> p{0, 1, 2};
    do {
        // y[p] = c x for some nonzero c
        std::optional<Q> c;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            const Q& a = x[static_cast<std::size_t>(i)];
            const Q& b = y[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
            if (is_zero(a) || is_zero(b)) {
                ok = is_zero(a) && is_zero(b);
                continue;
            }
            Q r = b / a;
            if (c && *c != r) ok = false;
            c = r;
        }
        if (ok && c) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

std::vector<VogelRow> vogel_table() {
    auto exc = [](const char* alg, long a, long b, long c) {
        return VogelRow{"EXC", alg, std::to_string(a), std::to_string(b), std::to_string(c),
                        VogelPoint{Q(a), Q(b), Q(c)}};
    };
    return {
        {"SL", "sl_n", "-2", "2", "n", std::nullopt},
        {"OSP", "so_n, sp_-n", "-2", "4", "n-4", std::nullopt},
        exc("sl_3", -2, 3, 2),
        exc("g_2", -3, 5, 4),
        exc("so_8", -2, 6, 4),
        exc("f_4", -2, 5, 6),
        exc("e_6", -2, 6, 8),
        exc("e_7", -2, 8, 12),
        exc("e_8", -2, 12, 20),
    };
}

VogelPoint vogel_exc_point(const std::string& algebra) {
    std::string key;
    for (char ch : algebra)
        if (ch != '_') key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const auto& r : vogel_table()) {
        std::string k;
        for (char ch : r.algebra)
            if (ch != '_') k += ch;
        if (r.point && k == key) return *r.point;
    }
    throw RootError("no EXC row for " + algebra);
}

namespace {

Q vogel_y2(const Q& a, const Q& b, const Q& c) {
    const Q t = a + b + c;
    const Q num = -t * (b - 2 * t) * (c - 2 * t) * (b + t) * (c + t) * (3 * a - 2 * t);
    const Q den = a * a * b * c * (a - b) * (a - c);
    return checked_div(num, den, "Y2");
}

}  // namespace

Q vogel_dim(VogelModule m, const VogelPoint& p) {
    const Q &a = p.alpha, &b = p.beta, &c = p.gamma;
    const Q t = p.t();
    switch (m) {
    case VogelModule::g: return checked_div((a - 2 * t) * (b - 2 * t) * (c - 2 * t), a * b * c, "g");
    case VogelModule::X2:
        return checked_div(-(a - 2 * t) * (b - 2 * t) * (c - 2 * t) * (a + t) * (b + t) * (c + t),
                           a * a * b * b * c * c, "X2");
    case VogelModule::Y2: return vogel_y2(a, b, c);
    case VogelModule::Y2p: return vogel_y2(b, c, a);
    case VogelModule::Y2pp: return vogel_y2(c, a, b);
    }
    return 0;
}

std::string module_name(VogelModule m) {
    switch (m) {
    case VogelModule::g: return "g";
    case VogelModule::X2: return "X2";
    case VogelModule::Y2: return "Y2";
    case VogelModule::Y2p: return "Y2'";
    case VogelModule::Y2pp: return "Y2''";
    }
    return "?";
}

// ---------------------------------------------------------------- Deligne

namespace {

Q deligne_raw(DeligneModule m, const Q& l) {
    switch (m) {
    case DeligneModule::g: return checked_div(-2 * (l + 5) * (l - 6), l * (l - 1), "g");
    case DeligneModule::X2:
        return checked_div(5 * (l + 3) * (l + 5) * (l - 4) * (l - 6), l * l * (l - 1) * (l - 1), "X2");
    case DeligneModule::Y2: return checked_div(-90 * (l + 5) * (l - 4), l * l * (l - 1) * (2 * l - 1), "Y2");
    case DeligneModule::Y3:
        return checked_div(-10 * (l + 5) * (5 * l - 6) * (l - 4) * (l - 5) * (l - 6),
                           l * l * l * (l - 1) * (l - 1) * (2 * l - 1) * (3 * l - 1), "Y3");
    default: break;
    }
    return 0;
}

}  // namespace

Q deligne_dim(DeligneModule m, const Q& lambda) {
    switch (m) {
    case DeligneModule::Y2p: return deligne_raw(DeligneModule::Y2, 1 - lambda);
    case DeligneModule::Y3p: return deligne_raw(DeligneModule::Y3, 1 - lambda);
    default: return deligne_raw(m, lambda);
    }
}

std::string module_name(DeligneModule m) {
    switch (m) {
    case DeligneModule::g: return "g";
    case DeligneModule::X2: return "X2";
    case DeligneModule::Y2: return "Y2";
    case DeligneModule::Y3: return "Y3";
    case DeligneModule::Y2p: return "Y2'";
    case DeligneModule::Y3p: return "Y3'";
    }
    return "?";
}

VogelPoint deligne_vogel_point(const Q& lambda) { return {lambda, 1 - lambda, Q(2)}; }

const std::vector<ExceptionalAlgebra>& exceptional_algebras() {
    static const std::vector<ExceptionalAlgebra> v = {
        {"sl2", qfrac(-3), "A1"},    {"sl3", qfrac(-2), "A2"},    {"so8", qfrac(-1), "D4"},
        {"g2", qfrac(-3, 2), "G2"},  {"f4", qfrac(-2, 3), "F4"},  {"e6", qfrac(-1, 2), "E6"},
        {"e7", qfrac(-1, 3), "E7"},  {"e8", qfrac(-1, 5), "E8"},
    };
    return v;
}

const ExceptionalAlgebra& exceptional_algebra(const std::string& name) {
    std::string key;
    for (char ch : name)
        if (ch != '_') key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    for (const auto& e : exceptional_algebras())
        if (e.name == key) return e;
    throw RootError("unknown exceptional algebra " + name);
}

Q deligne_yk_printed(int k, const Q& l) {
    if (k < 1) throw RootError("k must be positive");
    Q num = (2 * k - 1) * l - 6;
    Q den = l + 6;
    for (int i = 1; i <= k; ++i) den *= i;
    for (int i = 0; i < k; ++i) den *= l;
    for (int j = 1; j <= k; ++j) {
        num *= ((j - 1) * l - 4) * ((j - 2) * l - 5) * ((j - 2) * l - 6);
        den *= (j * l - 1) * ((j - 1) * l - 2);
    }
    return checked_div(num, den, "Y_k");
}

YkReport deligne_yk(int k, const Q& lambda) {
    YkReport r;
    r.k = k;
    r.lambda = lambda;
    r.printed = deligne_yk_printed(k, lambda);
    r.magnitude = qabs(r.printed);
    for (const auto& e : exceptional_algebras()) {
        if (e.lambda != lambda) continue;
        RootSystem rs = RootSystem::parse(e.type);
        r.weyl = weyl_dimension(rs, scaled(rs.adjoint_weight(), k));
    }
    return r;
}

namespace {

Q ratio_to_adjoint(const RootSystem& rs, const Weight& w) {
    return casimir_value(rs, w) / casimir_value(rs, rs.adjoint_weight());
}

}  // namespace

DualityReport duality_check(const std::string& algebra) {
    const auto& e = exceptional_algebra(algebra);
    DualityReport r;
    r.algebra = e.name;
    r.lambda = e.lambda;
    const Q l = e.lambda, d = 1 - l;
    r.g_invariant = deligne_dim(DeligneModule::g, l) == deligne_dim(DeligneModule::g, d);
    r.x2_invariant = deligne_dim(DeligneModule::X2, l) == deligne_dim(DeligneModule::X2, d);
    RootSystem rs = RootSystem::parse(e.type);
    const Weight adj = rs.adjoint_weight();
    r.y2_dual = deligne_dim(DeligneModule::Y2p, l);
    r.y2p_weyl = 0;
    for (const auto& c : power_decompose(rs, adj, 2, Parity::sym)) {
        if (c.weight == scaled(adj, 2) || is_zero_weight(c.weight)) continue;
        r.y2p_weyl += c.dim * static_cast<long>(c.multiplicity);
    }
    r.y2_matches = r.y2_dual == Q(r.y2p_weyl);
    // Y3' carries the Casimir ratio 2(alpha+gamma)/gamma = lambda + 2 at (lambda, 1-lambda, 2)
    r.y3_dual = deligne_dim(DeligneModule::Y3p, l);
    Z s = 0;
    for (const auto& c : power_decompose(rs, adj, 3, Parity::sym))
        if (ratio_to_adjoint(rs, c.weight) == l + 2) s += c.dim * static_cast<long>(c.multiplicity);
    r.y3p_weyl = s;
    r.y3_matches = r.y3_dual == Q(s);
    return r;
}

// ---------------------------------------------------------------- subexceptional

Q binomial(const Q& top, long k) { return binom_poly(top - k, k); }

Q subexceptional_vk_printed(const Q& a, long k) {
    const Q kk(k);
    const Q pre = checked_div(2 * a + 2 * kk + 2, a + 1, "V^(k)");
    const Q x1 = 2 * a + 1, x2 = 3 * a / 2 + 1, x3 = a / 2 + 1;
    return checked_div(pre * binom_poly(x1, k) * binom_poly(x2, k), binom_poly(x3, k), "V^(k)");
}

Q subexceptional_vk_corrected(const Q& a, long k) {
    const Q kk(k);
    const Q pre = checked_div(2 * a + 2 * kk + 2, 2 * a + 2, "V^(k)");
    const Q x1 = 2 * a + 1, x2 = 3 * a / 2 + 1, x3 = a / 2;
    return checked_div(pre * binom_poly(x1, k) * binom_poly(x2, k), binom_poly(x3, k), "V^(k)");
}

SubexceptionalDims subexceptional_dims(const Q& a, long k) {
    SubexceptionalDims d;
    d.g = checked_div(3 * (2 * a + 3) * (3 * a + 4), a + 4, "g(a)");
    d.V = 6 * a + 8;
    d.V2 = 9 * (a + 1) * (2 * a + 3);
    d.Vk_printed = subexceptional_vk_printed(a, k);
    d.Vk_corrected = subexceptional_vk_corrected(a, k);
    return d;
}

SubexceptionalAlgebra subexceptional_algebra(int a) {
    SubexceptionalAlgebra s;
    s.a = a;
    switch (a) {
    case 1: s.type = "C3"; s.v = {0, 0, 1}; break;
    case 2: s.type = "A5"; s.v = {0, 0, 1, 0, 0}; break;
    case 4: s.type = "D6"; s.v = {0, 0, 0, 0, 0, 1}; break;
    case 8: s.type = "E7"; s.v = {0, 0, 0, 0, 0, 0, 1}; break;
    default: throw RootError("a must be 1, 2, 4 or 8");
    }
    RootSystem rs = RootSystem::parse(s.type);
    for (const auto& c : power_decompose(rs, s.v, 2, Parity::sym))
        if (c.weight != scaled(s.v, 2)) s.g = c.weight;
    for (const auto& c : power_decompose(rs, s.v, 2, Parity::alt))
        if (!is_zero_weight(c.weight)) s.v2 = c.weight;
    return s;
}

std::vector<SeriesTerm> symmetric_power_series_check(int a, int kmax) {
    const SubexceptionalAlgebra s = subexceptional_algebra(a);
    RootSystem rs = RootSystem::parse(s.type);
    const long dv = weyl_dimension(rs, s.v).get_si();
    std::vector<SeriesTerm> out;
    for (int k = 1; k <= kmax; ++k) {
        SeriesTerm t;
        t.k = k;
        t.lhs = binom(dv + k - 1, k);
        t.rhs = 0;
        // t^i V, t^2j g, t^3l V, t^4m 1, t^4n V2
        for (int i = 0; i <= k; ++i)
            for (int j = 0; i + 2 * j <= k; ++j)
                for (int l = 0; i + 2 * j + 3 * l <= k; ++l)
                    for (int m = 0; i + 2 * j + 3 * l + 4 * m <= k; ++m) {
                        const int rest = k - i - 2 * j - 3 * l - 4 * m;
                        if (rest % 4) continue;
                        const int n = rest / 4;
                        Weight w = plus(plus(scaled(s.v, i + l), scaled(s.g, j)), scaled(s.v2, n));
                        t.rhs += weyl_dimension(rs, w);
                        ++t.terms;
                    }
        out.push_back(t);
    }
    return out;
}

// ---------------------------------------------------------------- triality model

Q TrialityModel::inner(const Vec& x, const Vec& y) const {
    Q s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * form(i, j) * y[j];
    return s;
}

Q TrialityModel::heart_pairing(const Vec& x, const Vec& alpha) const {
    return 2 * inner(x, alpha) / inner(alpha, alpha);
}

Q TrialityModel::sigma_pairing(const Vec& x, const Vec& mu) const {
    // mu + nu is long for a >= 2 with (mu, mu) half a heart length
    return inner(x, mu) / inner(mu, mu);
}

Vec TrialityModel::weight(const std::array<long, 4>& pqrs) const {
    Vec w(form.rows(), Q(0));
    for (std::size_t g = 0; g < 4; ++g)
        for (std::size_t i = 0; i < w.size(); ++i) w[i] += pqrs[g] * generators[g][i];
    return w;
}

namespace {

Vec vadd(const Vec& a, const Vec& b, const Q& s = 1) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += s * b[i];
    return r;
}

bool lex_positive(const std::vector<Q>& key) {
    for (const auto& x : key)
        if (sgn(x)) return sgn(x) > 0;
    return false;
}

TrialityModel derive_model() {
    SplitForm f = build_split_form("R", "O");
    ExtractedRoots ex = extract_root_system(f.L, f.cartan);
    const std::size_t rk = ex.cartan.size();
    const std::size_t nt = 28, slot = 8;
    TrialityModel m;
    m.form = ex.form;

    std::vector<Vec> heart;
    std::array<std::vector<Vec>, 3> linear;
    for (std::size_t r = 0; r < ex.roots.size(); ++r) {
        const Vec& v = ex.root_vectors[r];
        int where = -2;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (is_zero(v[i])) continue;
            int w = i < nt ? -1 : static_cast<int>((i - nt) / slot);
            if (where != -2 && where != w) throw RootError("root vector spans several summands");
            where = w;
        }
        if (where == -1) heart.push_back(ex.roots[r]);
        else linear[static_cast<std::size_t>(where)].push_back(ex.roots[r]);
    }
    if (heart.size() != 24) throw RootError("heart is not of type D4");

    auto lexpos = [](const Vec& v) { return lex_positive(std::vector<Q>(v.begin(), v.end())); };
    for (const auto& h : heart)
        if (lexpos(h)) m.heart_positive.push_back(h);
    std::set<Vec> pos(m.heart_positive.begin(), m.heart_positive.end());
    std::vector<Vec> simple;
    for (const auto& a : m.heart_positive) {
        bool dec = false;
        for (const auto& b : m.heart_positive)
            if (pos.count(vadd(a, b, -1))) dec = true;
        if (!dec) simple.push_back(a);
    }
    if (simple.size() != 4) throw RootError("heart simple roots not found");
    std::size_t centre = 4;
    for (std::size_t i = 0; i < 4; ++i) {
        int nb = 0;
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j && sgn(m.inner(simple[i], simple[j]))) ++nb;
        if (nb == 3) centre = i;
    }
    if (centre == 4) throw RootError("heart has no trivalent node");

    // fundamental weights dual to the simple coroots
    auto fundamental_of = [&](std::size_t i) {
        Matrix a(rk, rk);
        Vec b(rk, Q(0));
        for (std::size_t j = 0; j < rk; ++j) {
            Vec fa = m.form.apply(simple[j]);
            const Q len = m.inner(simple[j], simple[j]);
            for (std::size_t c = 0; c < rk; ++c) a(j, c) = 2 * fa[c] / len;
        }
        b[i] = 1;
        auto s = solve(a, b);
        if (!s) throw RootError("fundamental weight");
        return *s;
    };
    // leg of each O_i: its highest weight is a fundamental weight
    std::vector<std::size_t> leg_of_slot(3, 4);
    for (std::size_t s = 0; s < 3; ++s) {
        std::set<Vec> ws(linear[s].begin(), linear[s].end());
        for (const auto& w : linear[s]) {
            bool top = true;
            for (const auto& a : simple)
                if (ws.count(vadd(w, a))) top = false;
            if (!top) continue;
            for (std::size_t i = 0; i < 4; ++i)
                if (i != centre && sgn(m.heart_pairing(w, simple[i])) > 0) leg_of_slot[s] = i;
        }
        if (leg_of_slot[s] == 4) throw RootError("no leg for a linear summand");
    }

    std::vector<int> perm{0, 1, 2};
    std::string failure;
    do {
        // node 1, 3, 4 <- O_{perm[0]+1}, O_{perm[1]+1}, O_{perm[2]+1}
        std::array<std::size_t, 4> node{leg_of_slot[static_cast<std::size_t>(perm[0])], centre,
                                        leg_of_slot[static_cast<std::size_t>(perm[1])],
                                        leg_of_slot[static_cast<std::size_t>(perm[2])]};
        std::vector<Vec> fund;
        for (std::size_t i = 0; i < 4; ++i) fund.push_back(fundamental_of(node[i]));
        auto comb = [&](std::array<long, 4> c) {
            Vec w(rk, Q(0));
            for (std::size_t i = 0; i < 4; ++i) w = vadd(w, fund[i], Q(c[i]));
            return w;
        };
        std::array<Vec, 4> gens{comb({0, 1, 0, 0}), comb({1, 0, 1, 1}), comb({2, 0, 2, 0}), comb({2, 0, 0, 0})};
        Vec rho(rk, Q(0));
        for (const auto& h : m.heart_positive) rho = vadd(rho, h, qfrac(1, 2));
        Vec tie(rk, Q(0));
        for (const auto& g : gens) tie = vadd(tie, g);
        std::vector<Vec> sigma;
        for (const auto& part : linear)
            for (const auto& w : part) {
                std::vector<Q> key{m.inner(w, rho), m.inner(w, tie)};
                key.insert(key.end(), w.begin(), w.end());
                if (lex_positive(key)) sigma.push_back(w);
            }
        bool dominant = sigma.size() == 12;
        for (const auto& g : gens) {
            for (const auto& h : m.heart_positive) dominant = dominant && sgn(m.inner(g, h)) >= 0;
            for (const auto& s : sigma) dominant = dominant && sgn(m.inner(g, s)) >= 0;
        }
        if (!dominant) continue;
        m.sigma = sigma;
        m.fundamental = fund;
        m.generators = gens;
        m.rho_heart = rho;
        m.gamma = Vec(rk, Q(0));
        for (const auto& s : sigma) m.gamma = vadd(m.gamma, s, qfrac(1, 2));
        m.leg_order = {0, 0, 0};
        const int nodes[3] = {1, 3, 4};
        for (int i = 0; i < 3; ++i) m.leg_order[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = nodes[i];
        return m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw RootError("no leg labelling makes the cone generators dominant");
}

}  // namespace

const TrialityModel& triality_model() {
    static std::once_flag once;
    static TrialityModel model;
    std::call_once(once, [] { model = derive_model(); });
    return model;
}

Q exceptional_series_dim(const std::array<long, 4>& pqrs, const Q& a) {
    for (long x : pqrs)
        if (x < 0) throw RootError("cone coordinates must be nonnegative");
    const TrialityModel& m = triality_model();
    const Vec w = m.weight(pqrs);
    Vec p = m.rho_heart;
    for (std::size_t i = 0; i < p.size(); ++i) p[i] += a * m.gamma[i];
    Vec pw = vadd(p, w);
    Q dim = 1;
    for (const auto& h : m.heart_positive)
        dim *= checked_div(m.heart_pairing(pw, h), m.heart_pairing(p, h), "V_omega");
    for (const auto& s : m.sigma) {
        const Q x = m.sigma_pairing(pw, s);
        const Q wk = m.sigma_pairing(w, s);
        dim *= checked_div(x, m.sigma_pairing(p, s), "V_omega");
        if (!is_integer(wk) || sgn(wk) < 0) throw RootError("weight is not in the cone");
        const long k = wk.get_num().get_si();
        dim *= checked_div(binomial(x + a / 2 - 1, k), binomial(x - a / 2, k), "V_omega");
    }
    return dim;
}

std::string series_type(int a) {
    switch (a) {
    case 1: return "F4";
    case 2: return "E6";
    case 4: return "E7";
    case 8: return "E8";
    }
    throw RootError("a must be 1, 2, 4 or 8");
}

std::array<Weight, 4> cone_generator_weights(int a) {
    static std::mutex mu;
    static std::map<int, std::array<Weight, 4>> cache;
    {
        std::lock_guard<std::mutex> g(mu);
        auto it = cache.find(a);
        if (it != cache.end()) return it->second;
    }
    RootSystem rs = RootSystem::parse(series_type(a));
    const Weight adj = rs.adjoint_weight();
    const Q c1 = casimir_value(rs, adj);
    Weight x2, x3, y2p;
    for (const auto& c : power_decompose(rs, adj, 2, Parity::alt))
        if (c.weight != adj) x2 = c.weight;
    Z best = 0;
    for (const auto& c : power_decompose(rs, adj, 2, Parity::sym)) {
        if (c.weight == scaled(adj, 2) || is_zero_weight(c.weight)) continue;
        if (c.dim > best) {
            best = c.dim;
            y2p = c.weight;
        }
    }
    // the summand of g (x) X2 with three times the Casimir of g
    for (const auto& c : tensor_decompose(rs, x2, adj))
        if (casimir_value(rs, c.weight) == 3 * c1) x3 = c.weight;
    if (x2.empty() || x3.empty() || y2p.empty()) throw RootError("cone generator modules not found");
    std::array<Weight, 4> r{adj, x2, x3, y2p};
    std::lock_guard<std::mutex> g(mu);
    cache[a] = r;
    return r;
}

Weight cone_weight(const std::array<long, 4>& pqrs, int a) {
    const auto gens = cone_generator_weights(a);
    Weight w(gens[0].size(), 0);
    for (std::size_t i = 0; i < 4; ++i) w = plus(w, scaled(gens[i], pqrs[i]));
    return w;
}

// ---------------------------------------------------------------- Casimir ratios

std::vector<CasimirRow> casimir_ratio_table(const std::string& algebra) {
    const auto& e = exceptional_algebra(algebra);
    const VogelPoint vp = vogel_exc_point(e.name);
    const Q &al = vp.alpha, &be = vp.beta, &ga = vp.gamma;
    RootSystem rs = RootSystem::parse(e.type);
    const Weight adj = rs.adjoint_weight();

    using Char = std::map<Weight, long long>;
    auto to_char = [](const std::vector<Constituent>& cs) {
        Char c;
        for (const auto& x : cs) c[x.weight] += x.multiplicity;
        return c;
    };
    Char s3 = to_char(power_decompose(rs, adj, 3, Parity::sym));
    Char l3 = to_char(power_decompose(rs, adj, 3, Parity::alt));
    // g (x) Lambda^2 g = Lambda^3 g + S21 g, Lambda^2 g = g + X2
    Char s21 = to_char(tensor_decompose(rs, adj, adj));
    for (const auto& c : power_decompose(rs, adj, 2, Parity::alt))
        if (c.weight != adj)
            for (const auto& t : tensor_decompose(rs, c.weight, adj)) s21[t.weight] += t.multiplicity * c.multiplicity;
    for (const auto& [w, k] : l3) s21[w] -= k;
    for (auto it = s21.begin(); it != s21.end();) it = it->second == 0 ? s21.erase(it) : std::next(it);

    struct Printed {
        const char* module;
        const char* formula;
        Q value;
    };
    const std::vector<Printed> printed = {
        {"X2", "2", Q(2)},
        {"X3", "3", Q(3)},
        {"A", "8/3", qfrac(8, 3)},
        {"Y2", "(2b+5c)/3c", (2 * be + 5 * ga) / (3 * ga)},
        {"Y2'", "(2a+5c)/3c", (2 * al + 5 * ga) / (3 * ga)},
        {"Y3", "2(b+c)/c", 2 * (be + ga) / ga},
        {"Y3'", "2(a+c)/c", 2 * (al + ga) / ga},
        {"C", "(2b+5c)/2c", (2 * be + 5 * ga) / (2 * ga)},
        {"C'", "(2a+5c)/2c", (2 * al + 5 * ga) / (2 * ga)},
    };
    auto value_of = [&](const std::string& name) -> Q {
        if (name == "1") return 0;
        if (name == "g") return 1;
        for (const auto& p : printed)
            if (name == p.module) return p.value;
        return -1;
    };
    struct Space {
        const char* name;
        const Char* ch;
        std::vector<std::string> modules;
    };
    const std::vector<Space> spaces = {
        {"S3", &s3, {"g", "X2", "A", "Y3", "Y3'"}},
        {"L3", &l3, {"1", "X2", "Y2", "Y2'", "X3"}},
        {"S21", &s21, {"g", "g", "X2", "Y2", "Y2'", "A", "C", "C'"}},
    };
    // modules whose Deligne dimension vanishes at this lambda
    auto vanishing = [&](const std::string& name) {
        if (name == "Y2'") return is_zero(deligne_dim(DeligneModule::Y2p, e.lambda));
        if (name == "Y3'") return is_zero(deligne_dim(DeligneModule::Y3p, e.lambda));
        return false;
    };
    std::vector<CasimirRow> rows;
    for (const auto& sp : spaces) {
        std::set<Q> seen, want;
        for (const auto& [w, k] : *sp.ch) seen.insert(ratio_to_adjoint(rs, w));
        for (const auto& mname : sp.modules)
            if (!vanishing(mname)) want.insert(value_of(mname));
        for (const auto& mname : sp.modules) {
            if (mname == "1" || mname == "g") continue;
            const Printed* p = nullptr;
            for (const auto& x : printed)
                if (mname == x.module) p = &x;
            CasimirRow r;
            r.space = sp.name;
            r.module = mname;
            r.printed = p->formula;
            r.expected = p->value;
            r.ratio = p->value;
            for (const auto& [w, k] : *sp.ch) {
                if (ratio_to_adjoint(rs, w) != p->value) continue;
                if (!r.weight) r.weight = w;
                r.parts += static_cast<int>(k);
                r.dim += weyl_dimension(rs, w) * static_cast<long>(k);
            }
            r.vanishes = r.parts == 0 && vanishing(mname);
            r.ok = r.parts >= 1 || r.vanishes;
            rows.push_back(r);
        }
        CasimirRow all;
        all.space = sp.name;
        all.module = "(all)";
        all.printed = "decomposition";
        all.ok = seen == want;
        for (const auto& [w, k] : *sp.ch) {
            all.dim += weyl_dimension(rs, w) * static_cast<long>(k);
            all.parts += static_cast<int>(k);
        }
        rows.push_back(all);
    }
    return rows;
}

}  // namespace trialis
