// Lie algebras given by sparse structure constants.
#pragma once

#include "trialis/linalg.hpp"

#include <functional>
#include <iosfwd>
#include <string>

namespace trialis {

struct Term {
    std::size_t k;
    Q c;
    bool operator==(const Term&) const = default;
};
using SparseVec = std::vector<Term>;  // sorted by index, no zeros

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& s, std::size_t n);

struct JacobiReport {
    bool ok = true;
    std::size_t i = 0, j = 0, k = 0;   // first violating triple
    std::size_t triples_checked = 0;
};

class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(std::size_t dim);

    std::size_t dim() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_label(std::size_t i, std::string l) { labels_.at(i) = std::move(l); }

    // [e_i, e_j]; setting (i,j) also sets (j,i) to the negative
    const SparseVec& bracket(std::size_t i, std::size_t j) const { return br_[i * n_ + j]; }
    void set_bracket(std::size_t i, std::size_t j, const SparseVec& v);

    Vec bracket(const Vec& x, const Vec& y) const;
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
    Matrix ad(const Vec& x) const;
    SparseMatrix ad_sparse(const Vec& x) const;
    SparseMatrix ad_sparse(std::size_t i) const;

    bool antisymmetric() const;
    // exhaustive over i<j<k, parallel over TRIALIS_THREADS workers
    JacobiReport verify_jacobi() const;
    Matrix killing_form() const;

    // linear map preserving brackets (columns are images of basis vectors)
    bool is_homomorphism_to(const LieAlgebra& target, const Matrix& map) const;
    bool is_automorphism(const Matrix& map) const { return is_homomorphism_to(*this, map); }

    Subspace centralizer(const Subspace& s) const;
    Subspace centralizer(const std::vector<Vec>& gens) const;
    bool is_subalgebra(const Subspace& s) const;
    // dimension of [g, g]
    Subspace derived() const;
    Subspace center() const;
    // structure constants on a subalgebra basis
    LieAlgebra restrict_to(const Subspace& s) const;
    // nontrivial minimal ideals are not computed; this is the Killing radical
    Subspace killing_radical() const;

    // "# dim N", "# label i <tag>", then "i j k p/q" for i<j
    void write(std::ostream& os) const;
    static LieAlgebra read(std::istream& is);
    bool operator==(const LieAlgebra& o) const;

    Q scale_lcm() const;   // lcm of structure-constant denominators

private:
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> br_;
};

// worker count from TRIALIS_THREADS, else hardware concurrency
unsigned worker_count();
// run f(i) for i in [0,n) on worker_count() threads
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace trialis
