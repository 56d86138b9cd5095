// Diagram-level replay of the two construction games: admissibility through
// the Casimir test on Lambda^2 T, outputs by inverse diagram surgery.
#pragma once

#include "trialis/dynkin.hpp"

namespace trialis {

enum class Mode { minuscule, adjoint };

// Y = Seg(v_d1(X1) x ... x v_dr(Xr)) as one diagram, each component carrying
// a single mark whose degree is the Veronese degree
struct ReservoirEntry {
    MarkedDiagram y;
    std::string name() const { return variety_name(y); }
    Z t_dim() const { return ambient_dim(y) + 1; }
};

bool minuscule_admissible(const MarkedDiagram& y);
bool adjoint_admissible(const MarkedDiagram& y);
EigenspaceTest tangent_test(const MarkedDiagram& y);

struct Identification2 {
    MarkedDiagram x;                        // G marked at alpha
    std::string algebra;                    // "so10", "e8", ...
    std::vector<MarkedDiagram> matches;     // all (G, alpha) found, canonical
    std::size_t g_dim = 0, h_dim = 0;
    Z t_dim = 0;
    bool bookkeeping = false;   // dim g = dim h + 1 + 2T, or dim h + 3 + 2T (adjoint)
};
// throws RootError when no diagram or several inequivalent ones are found
Identification2 identify_output(const MarkedDiagram& y, Mode mode);

std::string algebra_label(const CartanType& t);

struct RoundRow {
    int round = 0;
    MarkedDiagram y;
    MarkedDiagram x;
    std::string y_name, x_name, algebra;
    Z y_ambient = 0, x_ambient = 0;   // projective dimensions
    bool bookkeeping = false;
    bool round_trip = false;          // asymptotic_directions(x) == y
};

struct RoundOptions {
    int max_rank = 7;        // rank of the algebra of Y
    long max_t = 0;          // dim T; 0: 512 minuscule, 64 adjoint
    int max_factors = 0;     // 0: 2 for minuscule, 3 for adjoint
    int max_degree = 0;      // same
};

struct RoundsResult {
    std::vector<std::vector<RoundRow>> rounds;   // admissible rows per round
    std::vector<MarkedDiagram> reservoir;        // after the last round
    std::vector<MarkedDiagram> trash;            // candidates failing the test
    std::size_t tested = 0;
};
// minuscule: reservoir starts at P1, each round uses candidates containing a
// new entry. adjoint: one round over the minuscule reservoir after `rounds`
// minuscule rounds.
RoundsResult run_rounds(Mode mode, int n_rounds, const RoundOptions& opt = {});

// ---- rendering ----
// rows sorted by dim T then name; columns Y, P^{n-1}, X, P^N
std::string render_round_table(const std::vector<RoundRow>& rows);

enum class StableFamily { projective, veronese, segre, quadric_even, quadric_odd, grassmann_2, none };
std::string family_name(StableFamily f);
// family of a minuscule row, checked against the parametrized ambient formulas
StableFamily stable_family(const RoundRow& row, bool* formulas_hold = nullptr);
std::string render_stable_table(const std::vector<RoundRow>& rows);
// P1xP2 -> G(2,5) -> S5 -> OP2 -> Gw(O3,O6), following rows whose Y is the previous X
std::string render_terminal_path(const std::vector<RoundRow>& rows, const std::string& start);

struct AdjointRow {
    std::string y, ambient, algebra, note;
};
// rows of the adjoint game plus the two non-fundamental cases
std::vector<AdjointRow> adjoint_table_rows(const std::vector<RoundRow>& rows);
std::string render_adjoint_table(const std::vector<RoundRow>& rows);

// T = g_1 of the highest-root grading for sl_k and sp_2m: ambient dimension of Y
Z nonfundamental_ambient(char letter, int rank);

std::string render_table(const std::vector<std::vector<std::string>>& cells);

}  // namespace trialis
