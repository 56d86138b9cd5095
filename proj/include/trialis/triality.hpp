// Derivation and triality algebras, Psi maps, inclusions.
#pragma once

#include "trialis/composition.hpp"
#include "trialis/lie_algebra.hpp"

#include <array>

namespace trialis {

using MatTuple = std::vector<Matrix>;  // k square matrices of equal size

Vec flatten(const MatTuple& t);
MatTuple unflatten(const Vec& v, std::size_t k, std::size_t n);
MatTuple tuple_bracket(const MatTuple& a, const MatTuple& b);
MatTuple tuple_add(const MatTuple& a, const MatTuple& b);
MatTuple tuple_scale(const MatTuple& a, const Q& s);

// linear Lie algebra of k-tuples of n x n matrices
class MatrixLieAlgebra {
public:
    MatrixLieAlgebra() = default;
    MatrixLieAlgebra(std::size_t k, std::size_t n, const std::vector<MatTuple>& spanning);

    std::size_t dim() const { return span_.dim(); }
    std::size_t arity() const { return k_; }
    std::size_t size() const { return n_; }
    MatTuple element(std::size_t i) const { return unflatten(span_.basis()[i], k_, n_); }
    MatTuple combine(const Vec& c) const { return unflatten(span_.combine(c), k_, n_); }
    std::optional<Vec> coords(const MatTuple& t) const { return span_.coords(flatten(t)); }
    bool contains(const MatTuple& t) const { return coords(t).has_value(); }
    const Subspace& span() const { return span_; }
    bool closed_under_bracket() const;
    LieAlgebra structure() const;

private:
    std::size_t k_ = 0, n_ = 0;
    Subspace span_;
};

using TrialityTriple = MatTuple;  // (T1, T2, T3)

// D(xy) = D(x)y + xD(y)
MatrixLieAlgebra derivations(const CompositionAlgebra& a);
bool is_derivation(const CompositionAlgebra& a, const Matrix& d);

// conj T1 conj (ab) = T2(a) b + a T3(b), each T_i skew for the norm
const MatrixLieAlgebra& triality_algebra(const AlgPtr& a);
bool is_triality_triple(const CompositionAlgebra& a, const TrialityTriple& t);
// T1(ab) = T2(a) b + a T3(b), the untwisted convention
bool is_triality_triple_untwisted(const CompositionAlgebra& a, const TrialityTriple& t);
// (T1,T2,T3) <-> (conj T1 conj, T2, T3)
TrialityTriple untwist(const CompositionAlgebra& a, const TrialityTriple& t);
inline TrialityTriple twist(const CompositionAlgebra& a, const TrialityTriple& t) { return untwist(a, t); }
bool is_skew(const CompositionAlgebra& a, const Matrix& m);

// component i (1..3) as a matrix (n^2 x dim t)
Matrix triality_project(const AlgPtr& a, int i);

// (T1,T2,T3) -> (T3,T1,T2)
TrialityTriple sigma(const TrialityTriple& t, int times = 1);

// Psi_i(u ^ v), i in 1..3; Psi_i = sigma^{i-1} Psi_1
TrialityTriple psi(const CompositionAlgebra& a, int i, const Vec& u, const Vec& v);
// u ^ v as x -> <u,x> v - <v,x> u with <,> = Q(,)/2
Matrix wedge(const CompositionAlgebra& a, const Vec& u, const Vec& v);

struct PsiSum {
    // generator order: slot i, pairs u<v of basis vectors
    std::vector<std::array<std::size_t, 3>> gens;
    Matrix map;                 // dim t x gens, coordinates in triality_algebra
    std::vector<Vec> kernel;    // in generator coordinates
};
PsiSum psi_sum(const AlgPtr& a);

struct Inclusion {
    Matrix map;                 // dim t(B') x dim t(B)
    bool kernel_contained = false;
    bool lie_morphism = false;
    bool restriction_is_identity = false;
    bool image_in_stabilizer = false;
    std::size_t stabilizer_dim = 0;
};
// B' the Cayley-Dickson double of B (B the first dim(B) coordinates)
Inclusion inclusion_embedding(const AlgPtr& b, const AlgPtr& bp);
// {U in t(B') : U_i(B) in B}
Subspace stabilizer_of_subalgebra(const AlgPtr& bp, std::size_t sub_dim);
// Ker Psi_B subset Ker Psi_B' (generators of B among those of B')
bool kernel_containment(const AlgPtr& b, const AlgPtr& bp);

// s(U) = (U2, U1, c U3 c), t(U) = (c U1 c, c U3 c, c U2 c) in the untwisted
// convention, transported to t(A)
TrialityTriple outer_s(const CompositionAlgebra& a, const TrialityTriple& u);
TrialityTriple outer_t(const CompositionAlgebra& a, const TrialityTriple& u);
// matrix of an endomorphism of t(A) in its basis
Matrix triality_endomorphism(const AlgPtr& a, TrialityTriple (*f)(const CompositionAlgebra&, const TrialityTriple&));

// literal 14-parameter octonion derivation matrix family, parameter order
// a2..a7, b3..b7, g5..g7
std::vector<Matrix> g2_parametrized_family();
// general derivation of O in the same parameters (derived by kernel solve)
std::vector<Matrix> g2_derived_family();

}  // namespace trialis
