// Closed-form dimension formulas for the Vogel plane, the Deligne exceptional
// series and the subexceptional series, checked against Weyl dimensions.
#pragma once

#include "trialis/roots.hpp"

#include <array>
#include <optional>

namespace trialis {

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VogelPoint {
    Q alpha, beta, gamma;
    Q t() const { return alpha + beta + gamma; }
    // equal up to permutation and common scaling
    bool projectively_equal(const VogelPoint& o) const;
};

struct VogelRow {
    std::string series;    // SL, OSP, EXC
    std::string algebra;   // printed label
    std::string alpha, beta, gamma;   // printed entries
    std::optional<VogelPoint> point;  // numeric rows only
};
std::vector<VogelRow> vogel_table();
// point of an EXC row by algebra name ("e8", "g2", ...)
VogelPoint vogel_exc_point(const std::string& algebra);

enum class VogelModule { g, X2, Y2, Y2p, Y2pp };
Q vogel_dim(VogelModule m, const VogelPoint& p);
std::string module_name(VogelModule m);

enum class DeligneModule { g, X2, Y2, Y3, Y2p, Y3p };
Q deligne_dim(DeligneModule m, const Q& lambda);
std::string module_name(DeligneModule m);
// (lambda, 1 - lambda, 2)
VogelPoint deligne_vogel_point(const Q& lambda);

struct ExceptionalAlgebra {
    std::string name;   // sl2, sl3, so8, g2, f4, e6, e7, e8
    Q lambda;
    std::string type;   // root system label, "A1", "D4", ...
};
const std::vector<ExceptionalAlgebra>& exceptional_algebras();
const ExceptionalAlgebra& exceptional_algebra(const std::string& name);

struct YkReport {
    int k = 0;
    Q lambda;
    Q printed;                 // the product as printed
    Q magnitude;               // |printed|
    std::optional<Z> weyl;     // weyl_dimension(k * highest root) when an algebra is known
    bool agrees() const { return weyl && magnitude == Q(*weyl); }
};
Q deligne_yk_printed(int k, const Q& lambda);
YkReport deligne_yk(int k, const Q& lambda);

struct DualityReport {
    std::string algebra;
    Q lambda;
    bool g_invariant = false, x2_invariant = false;
    Q y2_dual;              // deligne Y2 at 1 - lambda
    Z y2p_weyl;             // the S^2 g summand other than 1 and the Cartan square
    bool y2_matches = false;
    Q y3_dual;              // deligne Y3 at 1 - lambda
    std::optional<Z> y3p_weyl;
    bool y3_matches = false;
};
DualityReport duality_check(const std::string& algebra);

// ---- subexceptional series (alpha, beta, gamma) = (-2, a, a + 4) ----
// top (top-1) ... (top-k+1) / k!, i.e. (1+x)...(k+x)/k! for top = k + x
Q binomial(const Q& top, long k);

struct SubexceptionalDims {
    Q g, V, V2;
    Q Vk_printed;     // formula as printed
    Q Vk_corrected;   // fitted form, see subexceptional_vk_corrected
};
Q subexceptional_vk_printed(const Q& a, long k);
// (2a+2k+2)/(2a+2) * C(k+2a+1,2a+1) C(k+3a/2+1,3a/2+1) / C(k+a/2,a/2)
Q subexceptional_vk_corrected(const Q& a, long k);
SubexceptionalDims subexceptional_dims(const Q& a, long k);

struct SubexceptionalAlgebra {
    int a = 0;
    std::string type;
    Weight v, g, v2;   // planes, adjoint, lines
};
// a in {1, 2, 4, 8}; g and V2 located in S^2 V and Lambda^2 V
SubexceptionalAlgebra subexceptional_algebra(int a);

struct SeriesTerm {
    int k = 0;
    Z lhs;       // C(dim V + k - 1, k)
    Z rhs;       // sum of Weyl dims of the expanded Cartan products
    std::size_t terms = 0;
    bool ok() const { return lhs == rhs; }
};
std::vector<SeriesTerm> symmetric_power_series_check(int a, int kmax);

// ---- parametrized Weyl formula over C(O) ----
struct TrialityModel {
    std::vector<Vec> heart_positive;   // so8 positive roots, coordinates on h(O)
    std::vector<Vec> sigma;            // weights of the positive linear roots
    std::vector<Vec> fundamental;      // so8 fundamental weights, nodes 1..4
    Matrix form;                       // inner product on h(O)^*
    Vec rho_heart, gamma;              // gamma = half the sum over sigma
    std::array<Vec, 4> generators;     // omega(g), omega(X2), omega(X3), omega(Y2')
    std::vector<int> leg_order;        // O_1, O_2, O_3 -> so8 node
    Q inner(const Vec& x, const Vec& y) const;
    // (x, alpha^vee); weights of sigma paired as the long linear roots they
    // become for a >= 2
    Q heart_pairing(const Vec& x, const Vec& alpha) const;
    Q sigma_pairing(const Vec& x, const Vec& mu) const;
    Vec weight(const std::array<long, 4>& pqrs) const;
};
// derived from the split F4 = g(R, Os); cached
const TrialityModel& triality_model();

// p w(g) + q w(X2) + r w(X3) + s w(Y2')
Q exceptional_series_dim(const std::array<long, 4>& pqrs, const Q& a);
// the same weight as Dynkin labels of F4, E6, E7, E8 (a = 1, 2, 4, 8)
Weight cone_weight(const std::array<long, 4>& pqrs, int a);
// highest weights of g, X2, X3, Y2' on the algebra of parameter a
std::array<Weight, 4> cone_generator_weights(int a);
std::string series_type(int a);

struct CasimirRow {
    std::string space;    // S3, L3, S21
    std::string module;   // X2, X3, A, Y2, Y2', Y3, Y3', C, C'
    std::string printed;  // printed rational function
    Q expected;           // at the EXC parameters
    std::optional<Weight> weight;   // first summand with the ratio
    int parts = 0;                  // summands sharing the ratio (2 for a dual pair)
    Z dim = 0;                      // total over those summands
    Q ratio;
    bool vanishes = false;          // absent, with Deligne dimension 0
    bool ok = false;
};
// f4, e6, e7, e8
std::vector<CasimirRow> casimir_ratio_table(const std::string& algebra);

}  // namespace trialis
