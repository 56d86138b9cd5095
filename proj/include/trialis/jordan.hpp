// J3(A), Zorn matrices Z3(A) and structurable operators on A (x) B.
#pragma once

#include "trialis/composition.hpp"

#include <array>
#include <optional>
#include <random>

namespace trialis {

// [[r1, x3, x2], [conj x3, r2, x1], [conj x2, conj x1, r3]]
struct JordanElement {
    AlgPtr alg;
    std::array<Q, 3> r{};
    std::array<Vec, 3> x;

    static JordanElement zero(const AlgPtr& a);
    static JordanElement identity(const AlgPtr& a);
    static JordanElement diag(const AlgPtr& a, const Q& r1, const Q& r2, const Q& r3);
    // coordinates: r1 r2 r3 then x1, x2, x3
    static JordanElement from_coords(const AlgPtr& a, const Vec& c);
    Vec coords() const;
    static std::size_t dim_for(const CompositionAlgebra& a) { return 3 + 3 * a.dim(); }

    JordanElement operator+(const JordanElement& o) const;
    JordanElement operator-(const JordanElement& o) const;
    JordanElement scaled(const Q& s) const;
    bool operator==(const JordanElement& o) const;
    // entry (i,j) of the Hermitian matrix as an element of A
    Vec entry(int i, int j) const;
};

// (AB + BA)/2
JordanElement jordan_product(const JordanElement& a, const JordanElement& b);
Q trace(const JordanElement& a);
// trace of the Jordan product
Q trace_form(const JordanElement& a, const JordanElement& b);
// r1 r2 r3 - r1 Q(x1) - r2 Q(x2) - r3 Q(x3) + 2 Re(x3 x1 conj(x2))
Q determinant(const JordanElement& a);
// full polarization with det(X,X,X) = det X
Q determinant(const JordanElement& a, const JordanElement& b, const JordanElement& c);
// tr((X x Y) Z) = det(X, Y, Z)
JordanElement cross_product(const JordanElement& a, const JordanElement& b);
// rows/columns permuted 1 -> 2 -> 3 -> 1
JordanElement cyclic_relabel(const JordanElement& a);
// Gram matrix of trace_form on the coordinate basis
Matrix trace_form_gram(const AlgPtr& a);
JordanElement random_jordan(const AlgPtr& a, std::mt19937_64& rng, int lo = -3, int hi = 3);
// dimension of Der J3(B), by a sparse kernel solve
std::size_t jordan_derivation_dim(const AlgPtr& b);

// [[a, X], [Y, b]]
struct ZornElement {
    Q a, b;
    JordanElement X, Y;
    static ZornElement unit(const AlgPtr& alg);
    bool operator==(const ZornElement& o) const { return a == o.a && b == o.b && X == o.X && Y == o.Y; }
    static std::size_t dim_for(const CompositionAlgebra& alg) { return 2 + 2 * JordanElement::dim_for(alg); }
};
ZornElement zorn_multiply(const ZornElement& m1, const ZornElement& m2);

// A (x) B with (a b)(a' b') = aa' (x) bb' and involution conj (x) conj;
// coordinates index i * dim B + j
struct TensorAlgebra {
    AlgPtr A, B;
    std::size_t dim() const { return A->dim() * B->dim(); }
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec conjugate(const Vec& x) const;
    Vec e(std::size_t i) const;
    Vec one() const { return e(0); }
};
// V_{x,y}(z) = (x conj y) z + (z conj y) x - (z conj x) y
Vec structurable_v(const TensorAlgebra& t, const Vec& x, const Vec& y, const Vec& z);

struct StructurableReport {
    bool ok = true;
    std::size_t triples = 0;
    std::array<std::size_t, 3> witness{};
};
// [V_{a,1}, V_{b,c}] = V_{V_{a,1} b, c} - V_{b, V_{conj a,1} c}, each checked on every basis d;
// exhaustive over basis triples when samples == 0
StructurableReport structurable_identity_check(const TensorAlgebra& t, std::size_t samples = 0,
                                               std::uint64_t seed = 1);

}  // namespace trialis
