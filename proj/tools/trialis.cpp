// trialis: command-line front end.
#include "trialis/constructors.hpp"
#include "trialis/jordan.hpp"
#include "trialis/magic_square.hpp"
#include "trialis/series.hpp"
#include "trialis/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#ifndef TRIALIS_GOLDEN_DIR
#define TRIALIS_GOLDEN_DIR "tests/golden"
#endif

using namespace trialis;

namespace {

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool machine = false;

// key=value in machine mode, "key: value" otherwise
void kv(const std::string& k, const std::string& v) {
    if (machine)
        std::cout << k << "=" << v << "\n";
    else
        std::cout << k << ": " << v << "\n";
}
void kv(const std::string& k, const Q& v) { kv(k, to_string(v)); }
void kv(const std::string& k, std::size_t v) { kv(k, std::to_string(v)); }
void kv(const std::string& k, bool v) { kv(k, std::string(v ? "yes" : "no")); }

// plain value in human mode
void value(const std::string& k, const std::string& v) {
    if (machine)
        std::cout << k << "=" << v << "\n";
    else
        std::cout << v << "\n";
}

void require(bool ok, const std::string& what) {
    if (!ok) throw VerificationFailed(what);
}

std::string vec_str(const Vec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
    return s;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

Weight parse_weight(const std::string& text) {
    Weight w;
    std::string t;
    for (char c : text) t += (c == ',' || c == '(' || c == ')') ? ' ' : c;
    std::istringstream is(t);
    long x;
    while (is >> x) w.push_back(x);
    if (!is.eof()) throw std::invalid_argument("bad weight '" + text + "'");
    return w;
}

// ---- structure-constant files with "# cartan" lines ----

void write_sc(std::ostream& os, const LieAlgebra& l, const std::vector<Vec>& cartan) {
    l.write(os);
    for (const auto& h : cartan) os << "# cartan " << vec_str(h) << "\n";
}

struct ScFile {
    LieAlgebra l;
    std::vector<Vec> cartan;
};

ScFile read_sc(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    ScFile f;
    std::istringstream body(buf.str());
    f.l = LieAlgebra::read(body);
    std::istringstream lines(buf.str());
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream ls(line);
        std::string hash, key, c;
        ls >> hash >> key;
        if (hash != "#" || key != "cartan") continue;
        Vec h;
        while (ls >> c) h.push_back(parse_rational(c));
        if (h.size() != f.l.dim()) throw std::invalid_argument("cartan line of wrong length in " + path);
        f.cartan.push_back(std::move(h));
    }
    return f;
}

AlgPtr algebra_arg(const std::string& name) { return CompositionAlgebra::named(name); }

// ---- verbs ----

void cmd_alg_info(const std::string& name) {
    const auto a = algebra_arg(name);
    kv("name", a->name());
    kv("dim", a->dim());
    kv("split", a->is_split());
    const Inertia in = inertia(a->norm_form());
    kv("norm_inertia", std::to_string(in.pos) + "," + std::to_string(in.neg) + "," + std::to_string(in.zero));
    kv("der_dim", derivations(*a).dim());
    kv("triality_dim", triality_algebra(a).dim());
}

void cmd_alg_table(const std::string& name) {
    const auto a = algebra_arg(name);
    const std::size_t n = a->dim();
    std::vector<std::vector<std::string>> cells(1, std::vector<std::string>{""});
    for (std::size_t j = 0; j < n; ++j) cells[0].push_back("e" + std::to_string(j));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> row{"e" + std::to_string(i)};
        for (std::size_t j = 0; j < n; ++j) {
            const auto e = a->mul(i, j);
            row.push_back((e.sign < 0 ? "-e" : "e") + std::to_string(e.k));
        }
        cells.push_back(row);
    }
    if (machine) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) kv("e" + std::to_string(i) + "*e" + std::to_string(j), cells[i + 1][j + 1]);
    } else {
        std::cout << render_table(cells);
    }
}

void cmd_alg_norm(const std::string& name, const std::string& coords) {
    const auto a = algebra_arg(name);
    Vec x;
    std::istringstream is(coords);
    std::string c;
    while (std::getline(is, c, ',')) x.push_back(parse_rational(c));
    if (x.size() != a->dim()) throw std::invalid_argument("expected " + std::to_string(a->dim()) + " coordinates");
    value("norm", to_string(a->norm(x)));
}

void cmd_triality_dims() {
    for (const std::string n : {"R", "C", "H", "O"}) {
        const auto a = algebra_arg(n);
        kv("t(" + n + ")", triality_algebra(a).dim());
        kv("Der(" + n + ")", derivations(*a).dim());
    }
}

void cmd_triality_g2() {
    const auto o = algebra_arg("O");
    std::size_t ders = 0;
    std::vector<Vec> flat;
    for (const auto& m : g2_parametrized_family()) {
        ders += is_derivation(*o, m);
        flat.push_back(flatten({m}));
    }
    kv("family_size", g2_parametrized_family().size());
    kv("derivations", ders);
    kv("span_rank", rank_of(flat, 64));
    kv("der_dim", derivations(*o).dim());
    std::size_t dders = 0;
    for (const auto& m : g2_derived_family()) dders += is_derivation(*o, m);
    kv("derived_family_derivations", dders);
}

void cmd_triality_inclusion(const std::string& b) {
    const std::string next = b == "R" ? "C" : b == "C" ? "H" : b == "H" ? "O" : "";
    if (next.empty()) throw std::invalid_argument("inclusion source must be R, C or H");
    const Inclusion inc = inclusion_embedding(algebra_arg(b), algebra_arg(next));
    kv("from", b);
    kv("to", next);
    kv("lie_morphism", inc.lie_morphism);
    kv("image_in_stabilizer", inc.image_in_stabilizer);
    kv("stabilizer_dim", inc.stabilizer_dim);
    kv("kernel_contained", inc.kernel_contained);
    require(inc.lie_morphism && inc.image_in_stabilizer && inc.kernel_contained, "inclusion " + b + " -> " + next);
}

void cmd_jordan_check(const std::string& name, int samples, unsigned long seed) {
    const auto a = algebra_arg(name);
    std::mt19937_64 rng(seed);
    int bad = 0;
    for (int i = 0; i < samples; ++i) {
        const JordanElement x = random_jordan(a, rng), y = random_jordan(a, rng);
        const JordanElement x2 = jordan_product(x, x);
        if (!(jordan_product(x2, jordan_product(x, y)) == jordan_product(x, jordan_product(x2, y)))) ++bad;
    }
    kv("algebra", name);
    kv("dim", JordanElement::dim_for(*a));
    kv("samples", static_cast<std::size_t>(samples));
    kv("failures", static_cast<std::size_t>(bad));
    require(bad == 0, "Jordan identity");
}

void cmd_jordan_det(const std::string& name, const std::string& coords) {
    const auto a = algebra_arg(name);
    Vec c;
    std::istringstream is(coords);
    std::string t;
    while (std::getline(is, t, ',')) c.push_back(parse_rational(t));
    if (c.size() != JordanElement::dim_for(*a))
        throw std::invalid_argument("expected " + std::to_string(JordanElement::dim_for(*a)) + " coordinates");
    value("det", to_string(determinant(JordanElement::from_coords(a, c))));
}

void cmd_jordan_structurable(const std::string& an, const std::string& bn, std::size_t samples, unsigned long seed) {
    const TensorAlgebra t{algebra_arg(an), algebra_arg(bn)};
    const auto r = structurable_identity_check(t, samples, seed);
    kv("dim", t.dim());
    kv("triples", r.triples);
    kv("ok", r.ok);
    require(r.ok, "structurable identity");
}

void cmd_magic_build(const std::string& an, const std::string& bn, const std::string& form, const std::string& out,
                     bool check_jacobi) {
    LieAlgebra l;
    std::vector<Vec> cartan;
    if (form == "split") {
        auto s = build_split_form(an, bn);
        l = std::move(s.L);
        cartan = std::move(s.cartan);
    } else if (form == "compact") {
        l = build_magic_square(algebra_arg(an), algebra_arg(bn)).L;
    } else {
        throw std::invalid_argument("--form must be compact or split");
    }
    kv("dim", l.dim());
    if (check_jacobi) {
        const auto j = l.verify_jacobi();
        kv("jacobi", j.ok);
        require(j.ok, "Jacobi identity at (" + std::to_string(j.i) + "," + std::to_string(j.j) + "," +
                          std::to_string(j.k) + ")");
    }
    if (form == "compact" || !cartan.empty()) {
        const Inertia in = inertia(l.killing_form());
        kv("killing_inertia",
           std::to_string(in.pos) + "," + std::to_string(in.neg) + "," + std::to_string(in.zero));
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::invalid_argument("cannot write " + out);
        write_sc(f, l, cartan);
        kv("written", out);
    }
}

void cmd_roots_identify(const std::string& arg) {
    std::ifstream probe(arg);
    if (!probe) {
        // a type label
        const auto id = identify_type(RootSystem::parse(arg));
        value("type", id.label());
        return;
    }
    const ScFile f = read_sc(arg);
    if (f.cartan.empty()) throw std::invalid_argument(arg + " has no '# cartan' lines");
    const auto r = extract_root_system(f.l, f.cartan);
    if (machine) {
        kv("type", r.type.label());
        kv("roots", r.roots.size());
        kv("rank", r.cartan.size());
    } else {
        std::cout << r.type.label() << "\n";
    }
}

void cmd_roots_weyl(const std::string& type, const std::string& w) {
    const auto rs = RootSystem::parse(type);
    const Weight lambda = parse_weight(w);
    if (lambda.size() != rs.rank()) throw std::invalid_argument("weight of wrong length");
    value("dim", weyl_dimension(rs, lambda).get_str());
}

void cmd_roots_decompose(const std::string& type, const std::string& w, const std::string& how) {
    const auto rs = RootSystem::parse(type);
    Weight lambda = w == "adjoint" ? rs.adjoint_weight() : parse_weight(w);
    if (lambda.size() != rs.rank()) throw std::invalid_argument("weight of wrong length");
    std::vector<Constituent> cs;
    if (how == "S2" || how == "S3")
        cs = power_decompose(rs, lambda, how[1] - '0', Parity::sym);
    else if (how == "L2" || how == "L3")
        cs = power_decompose(rs, lambda, how[1] - '0', Parity::alt);
    else
        throw std::invalid_argument("--power must be S2, S3, L2 or L3");
    for (const auto& c : cs) {
        if (machine)
            std::cout << "weight=" << weight_str(c.weight) << " mult=" << c.multiplicity << " dim=" << c.dim.get_str()
                      << "\n";
        else
            std::cout << weight_str(c.weight) << "  x" << c.multiplicity << "  dim " << c.dim.get_str() << "\n";
    }
}

void cmd_diagram_info(const std::string& text) {
    const auto d = MarkedDiagram::parse(text);
    kv("diagram", d.str());
    kv("canonical", d.canonical());
    kv("name", variety_name(d));
    kv("dim", variety_dim(d));
    kv("ambient", ambient_dim(d).get_str());
    kv("algebra_dim", algebra_dim(d));
}

void cmd_diagram_asym(const std::string& text) {
    const auto y = asymptotic_directions(MarkedDiagram::parse(text));
    if (machine) {
        kv("diagram", y.str());
        kv("name", variety_name(y));
    } else {
        std::cout << y.str() << "  " << variety_name(y) << "\n";
    }
}

std::vector<int> parse_nodes(const std::string& s) {
    std::vector<int> out;
    for (long x : parse_weight(s)) out.push_back(static_cast<int>(x));
    return out;
}

void cmd_diagram_tits(const std::string& g, const std::string& s, const std::string& s2) {
    const auto rs = RootSystem::parse(g);
    const auto id = identify_type(rs);
    if (id.components.size() != 1) throw std::invalid_argument("tits needs a simple type");
    const auto t = tits_transform(id.components[0], parse_nodes(s), parse_nodes(s2));
    kv("z", t.z.str());
    kv("y", t.y.str());
    kv("y_name", variety_name(t.y));
}

void cmd_diagram_identify(const std::string& text, const std::string& mode) {
    const auto m = mode == "adjoint" ? Mode::adjoint : Mode::minuscule;
    const auto y = MarkedDiagram::parse(text);
    const auto test = tangent_test(y);
    const bool adm = m == Mode::minuscule ? minuscule_admissible(y) : adjoint_admissible(y);
    kv("admissible", adm);
    kv("codim", test.codim.get_str());
    if (!adm) return;
    const auto id = identify_output(y, m);
    kv("x", id.x.str());
    kv("x_name", variety_name(id.x));
    kv("algebra", id.algebra);
    kv("bookkeeping", id.bookkeeping);
}

VogelModule vogel_module(const std::string& m) {
    for (auto v : {VogelModule::g, VogelModule::X2, VogelModule::Y2, VogelModule::Y2p, VogelModule::Y2pp})
        if (module_name(v) == m) return v;
    throw std::invalid_argument("unknown module '" + m + "'");
}

DeligneModule deligne_module(const std::string& m) {
    for (auto v : {DeligneModule::g, DeligneModule::X2, DeligneModule::Y2, DeligneModule::Y3, DeligneModule::Y2p,
                   DeligneModule::Y3p})
        if (module_name(v) == m) return v;
    throw std::invalid_argument("unknown module '" + m + "'");
}

void cmd_dims_vogel(const std::string& alg, const std::string& point, const std::string& module) {
    VogelPoint p;
    if (!point.empty()) {
        std::vector<Q> xs;
        std::istringstream is(point);
        std::string c;
        while (std::getline(is, c, ',')) xs.push_back(parse_rational(c));
        if (xs.size() != 3) throw std::invalid_argument("--point takes alpha,beta,gamma");
        p = {xs[0], xs[1], xs[2]};
    } else {
        p = vogel_exc_point(alg);
    }
    value(module, to_string(vogel_dim(vogel_module(module), p)));
}

void cmd_dims_deligne(const std::string& lambda, const std::string& module, int k) {
    const Q l = parse_rational(lambda);
    if (module == "Yk") {
        value("Y" + std::to_string(k), to_string(deligne_yk_printed(k, l)));
        return;
    }
    value(module, to_string(deligne_dim(deligne_module(module), l)));
}

void cmd_dims_subexceptional(const std::string& a, long k) {
    const auto d = subexceptional_dims(parse_rational(a), k);
    kv("g", d.g);
    kv("V", d.V);
    kv("V2", d.V2);
    kv("Vk_printed", d.Vk_printed);
    kv("Vk", d.Vk_corrected);
}

void cmd_dims_series(const std::string& pqrs, const std::string& a) {
    const Weight w = parse_weight(pqrs);
    if (w.size() != 4) throw std::invalid_argument("--weight takes p,q,r,s");
    value("dim", to_string(exceptional_series_dim({w[0], w[1], w[2], w[3]}, parse_rational(a))));
}

void cmd_series_check(int a, int kmax) {
    bool ok = true;
    for (const auto& t : symmetric_power_series_check(a, kmax)) {
        if (machine)
            std::cout << "k=" << t.k << " lhs=" << t.lhs.get_str() << " rhs=" << t.rhs.get_str() << "\n";
        else
            std::cout << "t^" << t.k << "  " << t.lhs.get_str() << "  " << t.rhs.get_str() << (t.ok() ? "" : "  MISMATCH")
                      << "\n";
        ok = ok && t.ok();
    }
    require(ok, "symmetric power series");
}

void cmd_series_casimir(const std::string& alg) {
    std::vector<std::vector<std::string>> cells{{"space", "module", "printed", "expected", "ratio", "dim", "ok"}};
    bool ok = true;
    for (const auto& r : casimir_ratio_table(alg)) {
        cells.push_back({r.space, r.module, r.printed, to_string(r.expected), r.vanishes ? "-" : to_string(r.ratio),
                         r.dim.get_str(), r.ok ? "yes" : "no"});
        ok = ok && r.ok;
    }
    if (machine) {
        for (std::size_t i = 1; i < cells.size(); ++i)
            std::cout << cells[i][0] << "." << cells[i][1] << "=" << cells[i][4] << "\n";
    } else {
        std::cout << render_table(cells);
    }
    require(ok, "Casimir ratios on " + alg);
}

void cmd_construct(const std::string& mode, int rounds, int max_rank, long max_t, const std::string& start) {
    RoundOptions opt;
    opt.max_rank = max_rank;
    opt.max_t = max_t;
    if (mode == "adjoint") {
        const auto res = run_rounds(Mode::adjoint, rounds, opt);
        std::cout << render_adjoint_table(res.rounds.back());
        return;
    }
    if (mode != "minuscule") throw std::invalid_argument("mode must be minuscule or adjoint");
    const auto res = run_rounds(Mode::minuscule, rounds, opt);
    if (!start.empty()) {
        std::vector<RoundRow> all;
        for (const auto& v : res.rounds) all.insert(all.end(), v.begin(), v.end());
        std::cout << render_terminal_path(all, start);
        return;
    }
    for (std::size_t i = 0; i < res.rounds.size(); ++i) {
        if (machine) {
            for (const auto& r : res.rounds[i])
                std::cout << "round=" << i + 1 << " y=" << r.y_name << " x=" << r.x_name << " algebra=" << r.algebra
                          << " ambient=" << r.x_ambient.get_str() << "\n";
        } else {
            std::cout << "round " << i + 1 << "\n" << render_round_table(res.rounds[i]);
        }
    }
}

void cmd_magic_dims() {
    if (!machine) {
        std::cout << render_named_table("magic-dims");
        return;
    }
    const auto names = algebra_names();
    for (const std::string a : {"R", "C", "H", "O"})
        for (const std::string b : {"R", "C", "H", "O"})
            std::cout << a << "," << b << "=" << build_magic_square(algebra_arg(a), algebra_arg(b)).dim() << "\n";
}

void cmd_table(const std::string& name) {
    if (machine && name == "geometric") {
        const auto sq = geometric_magic_square();
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                std::cout << i + 1 << " " << j + 1 << " " << sq[i][j].name << " " << sq[i][j].dim << " "
                          << sq[i][j].ambient.get_str() << "\n";
        return;
    }
    std::cout << render_named_table(name);
}

int cmd_verify_all(const std::string& golden, int only) {
    int failed = 0;
    for (int id = 1; id <= criterion_count; ++id) {
        if (only && id != only) continue;
        const auto r = run_criterion(id, golden);
        char t[32];
        std::snprintf(t, sizeof t, "%.2fs", r.seconds);
        if (machine) {
            std::cout << "criterion" << id << "=" << (r.pass ? "pass" : "fail") << "\n";
        } else {
            std::cout << "criterion " << id << ": " << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  (" << t
                      << ")\n";
            for (const auto& f : r.failures) std::cout << "    failed: " << f << "\n";
            for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
        }
        std::cout.flush();
        if (!r.pass) ++failed;
    }
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trialis: composition algebras, triality, magic squares and the exceptional series"};
    app.require_subcommand(1);
    app.add_flag("--machine", machine, "key=value output with exact rationals");

    std::function<int()> action;
    auto run = [&](std::function<void()> f) {
        action = [f] {
            f();
            return 0;
        };
    };

    auto* alg = app.add_subcommand("alg", "composition algebras R C H O Cs Hs Os");
    alg->require_subcommand(1);
    std::string alg_name, alg_coords;
    auto* alg_info = alg->add_subcommand("info", "dimension, norm inertia, Der and triality dims");
    alg_info->add_option("name", alg_name)->required();
    alg_info->callback([&] { run([&] { cmd_alg_info(alg_name); }); });
    auto* alg_table = alg->add_subcommand("table", "multiplication table of basis elements");
    alg_table->add_option("name", alg_name)->required();
    alg_table->callback([&] { run([&] { cmd_alg_table(alg_name); }); });
    auto* alg_norm = alg->add_subcommand("norm", "norm of an element");
    alg_norm->add_option("name", alg_name)->required();
    alg_norm->add_option("coords", alg_coords, "comma separated p/q coordinates")->required();
    alg_norm->callback([&] { run([&] { cmd_alg_norm(alg_name, alg_coords); }); });

    auto* tri = app.add_subcommand("triality", "triality and derivation algebras");
    tri->require_subcommand(1);
    tri->add_subcommand("dims", "dim t(A) and dim Der(A)")->callback([&] { run(cmd_triality_dims); });
    tri->add_subcommand("g2", "the 14-parameter derivation family of O")->callback([&] { run(cmd_triality_g2); });
    std::string tri_from;
    auto* tri_inc = tri->add_subcommand("inclusion", "t(B) -> t(B') along R < C < H < O");
    tri_inc->add_option("from", tri_from)->required()->check(CLI::IsMember({"R", "C", "H"}));
    tri_inc->callback([&] { run([&] { cmd_triality_inclusion(tri_from); }); });

    auto* jor = app.add_subcommand("jordan", "J3(A), structurable algebras");
    jor->require_subcommand(1);
    std::string jor_alg = "O", jor_coords, str_a, str_b;
    int jor_samples = 200, str_samples = 0;
    unsigned long jor_seed = 20240611;
    auto* jor_check = jor->add_subcommand("check", "Jordan identity on random pairs");
    jor_check->add_option("--alg", jor_alg);
    jor_check->add_option("--samples", jor_samples);
    jor_check->add_option("--seed", jor_seed);
    jor_check->callback([&] { run([&] { cmd_jordan_check(jor_alg, jor_samples, jor_seed); }); });
    auto* jor_det = jor->add_subcommand("det", "cubic norm of an element");
    jor_det->add_option("alg", jor_alg)->required();
    jor_det->add_option("coords", jor_coords, "r1,r2,r3,x1..,x2..,x3..")->required();
    jor_det->callback([&] { run([&] { cmd_jordan_det(jor_alg, jor_coords); }); });
    auto* jor_str = jor->add_subcommand("structurable", "structurable identity on A (x) B");
    jor_str->add_option("A", str_a)->required();
    jor_str->add_option("B", str_b)->required();
    jor_str->add_option("--samples", str_samples, "0: exhaustive");
    jor_str->callback([&] { run([&] { cmd_jordan_structurable(str_a, str_b, static_cast<std::size_t>(str_samples), 1); }); });

    auto* mag = app.add_subcommand("magic", "Lie algebras g(A,B)");
    mag->require_subcommand(1);
    std::string mag_a, mag_b, mag_form = "compact", mag_out;
    bool mag_jacobi = false;
    auto* mag_build = mag->add_subcommand("build", "build g(A,B), optionally write structure constants");
    mag_build->add_option("A", mag_a)->required()->check(CLI::IsMember({"R", "C", "H", "O"}));
    mag_build->add_option("B", mag_b)->required()->check(CLI::IsMember({"R", "C", "H", "O"}));
    mag_build->add_option("--form", mag_form)->check(CLI::IsMember({"compact", "split"}));
    mag_build->add_option("--out", mag_out, "structure-constant file");
    mag_build->add_flag("--jacobi", mag_jacobi, "verify the Jacobi identity");
    mag_build->callback([&] { run([&] { cmd_magic_build(mag_a, mag_b, mag_form, mag_out, mag_jacobi); }); });
    mag->add_subcommand("dims", "the 4x4 dimension table")->callback([&] { run(cmd_magic_dims); });

    auto* roots = app.add_subcommand("roots", "root systems and representations");
    roots->require_subcommand(1);
    std::string r_src, r_type, r_weight, r_power = "S2";
    auto* r_id = roots->add_subcommand("identify", "type of a structure-constant file or a Cartan label");
    r_id->add_option("source", r_src)->required();
    r_id->callback([&] { run([&] { cmd_roots_identify(r_src); }); });
    auto* r_weyl = roots->add_subcommand("weyl", "Weyl dimension");
    r_weyl->add_option("type", r_type)->required();
    r_weyl->add_option("weight", r_weight, "Dynkin labels, comma separated")->required();
    r_weyl->callback([&] { run([&] { cmd_roots_weyl(r_type, r_weight); }); });
    auto* r_dec = roots->add_subcommand("decompose", "S^k or Lambda^k of an irreducible module");
    r_dec->add_option("type", r_type)->required();
    r_dec->add_option("weight", r_weight, "Dynkin labels or 'adjoint'")->required();
    r_dec->add_option("--power", r_power)->check(CLI::IsMember({"S2", "S3", "L2", "L3"}));
    r_dec->callback([&] { run([&] { cmd_roots_decompose(r_type, r_weight, r_power); }); });

    auto* dia = app.add_subcommand("diagram", "marked Dynkin diagrams");
    dia->require_subcommand(1);
    std::string d_text, d_type, d_s, d_s2, d_mode = "minuscule";
    auto* d_info = dia->add_subcommand("info", "dimension and ambient space of G/P");
    d_info->add_option("diagram", d_text)->required();
    d_info->callback([&] { run([&] { cmd_diagram_info(d_text); }); });
    auto* d_asym = dia->add_subcommand("asym", "variety of asymptotic directions");
    d_asym->add_option("diagram", d_text)->required();
    d_asym->callback([&] { run([&] { cmd_diagram_asym(d_text); }); });
    auto* d_tits = dia->add_subcommand("tits", "Tits transform");
    d_tits->add_option("type", d_type)->required();
    d_tits->add_option("S", d_s, "marked nodes, comma separated")->required();
    d_tits->add_option("S2", d_s2, "marked nodes of the target")->required();
    d_tits->callback([&] { run([&] { cmd_diagram_tits(d_type, d_s, d_s2); }); });
    auto* d_ident = dia->add_subcommand("identify", "admissibility and inverse surgery");
    d_ident->add_option("diagram", d_text)->required();
    d_ident->add_option("--mode", d_mode)->check(CLI::IsMember({"minuscule", "adjoint"}));
    d_ident->callback([&] { run([&] { cmd_diagram_identify(d_text, d_mode); }); });

    auto* dims = app.add_subcommand("dims", "universal dimension formulas");
    dims->require_subcommand(1);
    std::string v_alg, v_point, v_module = "g";
    auto* dv = dims->add_subcommand("vogel", "Vogel-plane dimension");
    dv->add_option("--algebra", v_alg, "exceptional algebra name");
    dv->add_option("--point", v_point, "alpha,beta,gamma");
    dv->add_option("--module", v_module, "g X2 Y2 Y2' Y2''");
    dv->callback([&] {
        if (v_alg.empty() == v_point.empty()) throw CLI::ValidationError("vogel", "give exactly one of --algebra, --point");
        run([&] { cmd_dims_vogel(v_alg, v_point, v_module); });
    });
    std::string dl_lambda, dl_module = "g";
    int dl_k = 2;
    auto* dd = dims->add_subcommand("deligne", "Deligne exceptional-series dimension");
    dd->add_option("--lambda", dl_lambda)->required();
    dd->add_option("--module", dl_module, "g X2 Y2 Y3 Y2' Y3' Yk");
    dd->add_option("-k", dl_k, "order for Yk");
    dd->callback([&] { run([&] { cmd_dims_deligne(dl_lambda, dl_module, dl_k); }); });
    std::string sx_a;
    long sx_k = 1;
    auto* ds = dims->add_subcommand("subexceptional", "subexceptional series dimensions");
    ds->add_option("--a", sx_a)->required();
    ds->add_option("-k", sx_k);
    ds->callback([&] { run([&] { cmd_dims_subexceptional(sx_a, sx_k); }); });
    std::string es_weight, es_a;
    auto* de = dims->add_subcommand("series", "parametrized Weyl formula on the exceptional series");
    de->add_option("--weight", es_weight, "p,q,r,s")->required();
    de->add_option("--a", es_a)->required();
    de->callback([&] { run([&] { cmd_dims_series(es_weight, es_a); }); });

    auto* ser = app.add_subcommand("series", "decomposition checks");
    ser->require_subcommand(1);
    int sc_a = 8, sc_k = 3;
    auto* sc = ser->add_subcommand("check", "symmetric powers of the plane representation");
    sc->add_option("--a", sc_a)->required()->check(CLI::IsMember({1, 2, 4, 8}));
    sc->add_option("-k", sc_k);
    sc->callback([&] { run([&] { cmd_series_check(sc_a, sc_k); }); });
    std::string cas_alg;
    auto* scas = ser->add_subcommand("casimir", "Casimir ratios on S3, L3, S21");
    scas->add_option("algebra", cas_alg)->required()->check(CLI::IsMember({"f4", "e6", "e7", "e8"}));
    scas->callback([&] { run([&] { cmd_series_casimir(cas_alg); }); });

    std::string con_mode, con_path;
    int con_rounds = 6, con_rank = 7;
    long con_t = 0;
    auto* con = app.add_subcommand("construct", "replay the construction games");
    con->add_option("mode", con_mode)->required()->check(CLI::IsMember({"minuscule", "adjoint"}));
    con->add_option("--rounds", con_rounds);
    con->add_option("--max-rank", con_rank);
    con->add_option("--max-t", con_t, "0: default bound");
    con->add_option("--path", con_path, "print the terminal path from this variety");
    con->callback([&] { run([&] { cmd_construct(con_mode, con_rounds, con_rank, con_t, con_path); }); });

    std::string table_name;
    auto* tab = app.add_subcommand("table", "reproduce a table");
    tab->add_option("name", table_name)->required()->check(CLI::IsMember(table_names()));
    tab->callback([&] { run([&] { cmd_table(table_name); }); });

    std::string golden = TRIALIS_GOLDEN_DIR;
    int only = 0;
    auto* ver = app.add_subcommand("verify-all", "run the acceptance criteria");
    ver->add_option("--golden", golden, "golden directory");
    ver->add_option("--only", only, "run a single criterion")->check(CLI::Range(0, criterion_count));
    ver->callback([&] { action = [&] { return cmd_verify_all(golden, only); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
