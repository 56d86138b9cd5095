// Composition algebras by Cayley-Dickson doubling.
#pragma once

#include "trialis/linalg.hpp"

#include <memory>
#include <string>

namespace trialis {

class CompositionAlgebra;
using AlgPtr = std::shared_ptr<const CompositionAlgebra>;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(AlgPtr alg, Vec coeffs);

    const AlgPtr& algebra() const { return alg_; }
    const Vec& coeffs() const { return c_; }
    const Q& operator[](std::size_t i) const { return c_[i]; }
    std::size_t dim() const { return c_.size(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator-() const;
    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement scaled(const Q& s) const;
    bool operator==(const AlgebraElement& o) const;
    bool is_zero() const;

private:
    AlgPtr alg_;
    Vec c_;
};

class CompositionAlgebra : public std::enable_shared_from_this<CompositionAlgebra> {
public:
    struct Entry {
        std::size_t k;
        int sign;
    };

    static AlgPtr reals();
    // named: R C H O Cs Hs Os
    static AlgPtr named(const std::string& name);
    // sign -1 compact step, +1 split step
    static AlgPtr from_signs(const std::vector<int>& signs);
    static AlgPtr cayley_dickson_double(const AlgPtr& base, bool split_step);

    std::size_t dim() const { return n_; }
    const std::vector<int>& signs() const { return signs_; }
    const std::string& name() const { return name_; }
    bool is_split() const;

    // e_i e_j = sign * e_k
    Entry mul(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
    int conj_sign(std::size_t i) const { return conj_[i]; }

    AlgebraElement basis(std::size_t i) const;
    AlgebraElement element(const Vec& c) const;
    AlgebraElement one() const { return basis(0); }

    Vec multiply(const Vec& x, const Vec& y) const;
    Vec conjugate(const Vec& x) const;
    // Q(x): unit coefficient of x conj(x)
    Q norm(const Vec& x) const;
    // polar form Q(x,y) = Re(x conj(y) + y conj(x))
    Q polar(const Vec& x, const Vec& y) const;

    // Gram matrix of the norm quadratic form Q(x)
    Matrix norm_form() const;
    // -1 eigenspace of conjugation
    Subspace imaginary_part_basis() const;

    Matrix left_mult(const Vec& z) const;
    Matrix right_mult(const Vec& z) const;
    Matrix conj_matrix() const;

    Vec associator(const Vec& x, const Vec& y, const Vec& z) const;
    Vec commutator(const Vec& x, const Vec& y) const;

    Vec e(std::size_t i) const;

private:
    CompositionAlgebra() = default;
    std::size_t n_ = 1;
    std::vector<int> signs_;
    std::string name_;
    std::vector<Entry> table_;
    std::vector<int> conj_;
};

AlgebraElement conjugate(const AlgebraElement& x);
Q norm(const AlgebraElement& x);
AlgebraElement associator(const AlgebraElement& x, const AlgebraElement& y, const AlgebraElement& z);
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

// the seven named algebras in a fixed order
std::vector<std::string> algebra_names();

}  // namespace trialis
