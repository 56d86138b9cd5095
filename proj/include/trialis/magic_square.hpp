// g(A,B) = t(A) x t(B) + A1(x)B1 + A2(x)B2 + A3(x)B3, its automorphisms,
// subalgebras and the so(4,4) 4-ality model.
#pragma once

#include "trialis/triality.hpp"

#include <array>
#include <string>

namespace trialis {

// product used in the mixed bracket of slot i with slot i+1
enum class ProductVariant { plain = 0, conj_product = 1, conj_left = 2, conj_right = 3 };

struct BracketConvention {
    std::array<int, 3> eps{1, 1, 1};
    std::array<ProductVariant, 3> variant{ProductVariant::conj_product, ProductVariant::conj_product,
                                          ProductVariant::conj_product};
    Q c = 1;   // same-slot scale
    bool operator==(const BracketConvention& o) const {
        return eps == o.eps && variant == o.variant && c == o.c;
    }
};
BracketConvention default_convention();
std::string describe(const BracketConvention& c);

Vec variant_product(const CompositionAlgebra& a, ProductVariant v, const Vec& x, const Vec& y);

struct MagicSquare {
    AlgPtr A, B;
    BracketConvention conv;
    std::size_t na = 0, nb = 0, a = 0, b = 0;
    LieAlgebra L;

    std::size_t dim() const { return L.dim(); }
    std::size_t tb_offset() const { return na; }
    // slot 0..2
    std::size_t slot_offset(int slot) const { return na + nb + static_cast<std::size_t>(slot) * a * b; }
    std::size_t slot_index(int slot, std::size_t x, std::size_t y) const { return slot_offset(slot) + x * b + y; }
    // vectors of L for elements of t(A), t(B)
    Vec embed_tA(const Vec& coords) const;
    Vec embed_tB(const Vec& coords) const;
};

MagicSquare build_magic_square(const AlgPtr& A, const AlgPtr& B,
                               const BracketConvention& conv = default_convention());

// all sign/product assignments (c solved linearly) passing Jacobi on every pair
std::vector<BracketConvention> search_conventions(const std::vector<std::pair<AlgPtr, AlgPtr>>& pairs);

// identity on t x t + slot 1, minus identity on slots 2, 3
Matrix involution_theta(const MagicSquare& m);
// T -> sigma(T) on both triality factors, U1 -> U2 -> U3 -> U1
Matrix order3_tau(const MagicSquare& m);
// B = O only: tau composed with the automorphism phi of O of order three
// fixing span(1,u), u = e1+e2+e3, acting on the complement as a cube root of 1
Matrix order3_tau_twisted(const MagicSquare& m);
Matrix octonion_order3_automorphism(const CompositionAlgebra& o);

// fixed subalgebra of an endomorphism
Subspace fixed_space(const Matrix& m);

// h -> h, p -> -p dual for a Cartan involution given as a diagonal +-1 matrix
LieAlgebra theta_dual(const LieAlgebra& l, const Matrix& theta);

// split form used for root systems: (R,R) is taken as the theta-dual of su2
struct SplitForm {
    std::string a_name, b_name;
    LieAlgebra L;
    std::vector<Vec> cartan;     // commuting ad-diagonalizable elements
};
SplitForm build_split_form(const std::string& a, const std::string& b);
// names R,C,H,O -> R,Cs,Hs,Os
std::string split_name(const std::string& compact);

// commuting semisimple elements of t(A) built from Psi_i(u^v), u,v of opposite norm
std::vector<Vec> triality_cartan(const AlgPtr& a);

// map t(B) -> t(O) along R < C < H < O (columns = images)
Matrix triality_inclusion_chain(const std::string& b);
// image of g(A,B) inside g(A,O) (B in R,C,H)
Subspace subalgebra_in_octonion_row(const MagicSquare& big, const std::string& b);
// span of t(A) inside g(A,B)
Subspace tA_subspace(const MagicSquare& m);

struct DualPairReport {
    std::string sub;             // "g(A,H)", "g(A,C)", "g(A,R)", "t(A)"
    std::size_t sub_dim = 0, centralizer_dim = 0, double_centralizer_dim = 0;
    bool closed = false;         // double centralizer equals the subalgebra
};
std::vector<DualPairReport> dual_pairs(const std::string& a);

// dim Der A + (a-1) dim J3(B)_0 + dim Der J3(B), B in D(elta), 0, R, C, H, O
std::size_t tits_rectangle_dim(const std::string& a, const std::string& b);

// ---- so(4,4) from four planes ----
struct FourAlity {
    LieAlgebra L;                        // 12 + 16
    std::array<std::vector<Matrix>, 3> modules;   // action matrices on O1, O2, O3 (8x8), per basis element
    Matrix tau, tau_prime;               // automorphisms
    std::vector<Vec> cartan;             // h_A, h_B, h_C, h_D
    static std::size_t tensor_index(int a, int b, int c, int d) { return 12 + 8 * a + 4 * b + 2 * c + d; }
};
FourAlity build_4ality();
bool is_representation(const LieAlgebra& l, const std::vector<Matrix>& rho);

}  // namespace trialis
