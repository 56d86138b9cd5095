// Root systems, Cartan types, Weyl/Freudenthal and tensor-power peeling.
#pragma once

#include "trialis/lie_algebra.hpp"

#include <map>
#include <string>
#include <utility>

namespace trialis {

struct RootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dynkin labels (fundamental-weight coordinates)
using Weight = std::vector<long>;
// coordinates in the simple roots
using RootCoords = std::vector<long>;

class RootSystem {
public:
    RootSystem() = default;
    // A[i][j] = <alpha_i^vee, alpha_j>; must be a finite-type Cartan matrix
    static RootSystem from_cartan(const std::vector<std::vector<long>>& a);
    // Bourbaki numbering
    static RootSystem standard(char letter, int rank);
    // "E8", "A2xA2", "A1xD4"
    static RootSystem parse(const std::string& label);
    static RootSystem product(const RootSystem& x, const RootSystem& y);

    std::size_t rank() const { return a_.size(); }
    const std::vector<std::vector<long>>& cartan() const { return a_; }
    // (alpha_i, alpha_i), long roots of each component have length 2
    const Vec& simple_lengths() const { return d_; }
    const std::vector<RootCoords>& positive_roots() const { return pos_; }
    std::size_t root_count() const { return 2 * pos_.size(); }
    Q root_length(std::size_t positive_index) const { return len_[positive_index]; }
    // coroot of a positive root in simple-coroot coordinates
    const std::vector<long>& coroot(std::size_t positive_index) const { return cor_[positive_index]; }
    std::size_t long_root_count() const;    // both signs, long within its component
    std::size_t short_root_count() const { return root_count() - long_root_count(); }
    bool simply_laced() const { return short_root_count() == 0; }
    // connected components of the diagram (node lists)
    const std::vector<std::vector<std::size_t>>& components() const { return comps_; }

    // Dynkin labels of a root given in simple-root coordinates
    Weight root_weight(const RootCoords& c) const;
    // simple-root coordinates of a weight
    Vec to_root_coords(const Weight& w) const;
    Q inner(const Weight& x, const Weight& y) const;
    // (w, alpha) for a root in simple-root coordinates
    Q inner_root(const Weight& w, const RootCoords& alpha) const;
    long pairing(const Weight& w, std::size_t positive_index) const;   // (w, alpha^vee)
    Weight rho() const { return Weight(rank(), 1); }
    // highest root of an irreducible system
    RootCoords highest_root() const;
    Weight adjoint_weight() const { return root_weight(highest_root()); }
    bool dominant(const Weight& w) const;
    Weight reflect(const Weight& w, std::size_t i) const;
    Weight dominant_conjugate(const Weight& w) const;

private:
    std::vector<std::vector<long>> a_;
    Vec d_;
    Matrix ainv_;
    Matrix f_;   // (omega_i, omega_j)
    std::vector<RootCoords> pos_;
    Vec len_;
    std::vector<std::vector<long>> cor_;
    std::vector<std::vector<std::size_t>> comps_;
    void finish();
};

struct CartanType {
    char letter = 'A';
    int rank = 1;
    std::string str() const { return std::string(1, letter) + std::to_string(rank); }
    bool operator==(const CartanType&) const = default;
};

struct Identification {
    std::vector<CartanType> components;
    // node i of the input goes to node to_standard[i] of RootSystem::parse(label())
    std::vector<std::size_t> to_standard;
    std::string label() const;
};
// throws RootError on a matrix not permutation-equivalent to a standard one
Identification identify_type(const RootSystem& rs);
std::size_t standard_root_count(char letter, int rank);

// ---- representation theory ----
Z weyl_dimension(const RootSystem& rs, const Weight& lambda);
// (lambda, lambda + 2 rho)
Q casimir_value(const RootSystem& rs, const Weight& lambda);

// dominant weights of V(lambda) with multiplicities (Freudenthal)
class Character {
public:
    Character(const RootSystem& rs, const Weight& lambda);
    const Weight& highest() const { return lambda_; }
    const std::map<Weight, long long>& dominant() const { return mult_; }
    long long multiplicity(const Weight& mu) const;    // any weight
    // every weight with multiplicity (Weyl orbits of the dominant ones)
    std::vector<std::pair<Weight, long long>> all_weights() const;
    long long total() const;

private:
    const RootSystem* rs_;
    Weight lambda_;
    std::map<Weight, long long> mult_;
};
long long weight_multiplicity(const RootSystem& rs, const Weight& lambda, const Weight& mu);
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& dominant);

enum class Parity { sym, alt };
struct Constituent {
    Weight weight;
    long long multiplicity = 0;
    Z dim;
};
// S^k V or Lambda^k V for k = 2, 3, by peeling the lexicographically largest
// dominant weight (ordered in simple-root coordinates)
std::vector<Constituent> power_decompose(const RootSystem& rs, const Weight& lambda, int k, Parity p);
inline std::vector<Constituent> square_decompose(const RootSystem& rs, const Weight& lambda, Parity p) {
    return power_decompose(rs, lambda, 2, p);
}
// peel a dominant character given as weight -> multiplicity
std::vector<Constituent> peel(const RootSystem& rs, std::map<Weight, long long> dominant_char);

// V(lambda) (x) V(mu) by Klimyk's formula over the weights of V(mu)
std::vector<Constituent> tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu);

struct EigenspaceTest {
    bool single = false;
    Z codim = 0;               // dim Lambda^2 T minus the span sharing the tangent value
    Q tangent_value;           // Casimir on the highest tangent components
    std::vector<Constituent> constituents;
};
EigenspaceTest casimir_eigenspace_test(const RootSystem& h, const Weight& lambda);

// ---- extraction from a split Lie algebra ----
struct ExtractedRoots {
    std::vector<Vec> cartan;
    std::vector<Vec> roots;            // eigenvalues on the cartan elements
    std::vector<Vec> root_vectors;     // generator of each root space
    std::vector<std::size_t> simple;   // indices into roots
    std::vector<RootCoords> coords;    // every root in the simple roots
    Matrix form;                       // inner product on eigenvalue vectors (inverse Killing)
    RootSystem system;                 // computed order of simple roots
    Identification type;
    std::size_t zero_dim = 0;

    // (w, alpha_i^vee) for each simple root, w an eigenvalue vector
    Weight dynkin_labels(const Vec& w) const;
    // coroot of the highest root as an element of L (simple systems)
    Vec highest_coroot(std::size_t dim) const;
};
// throws RootError if the zero eigenspace exceeds the cartan (not maximal toral)
ExtractedRoots extract_root_system(const LieAlgebra& l, const std::vector<Vec>& cartan);

struct Grading {
    std::map<long, std::size_t> dims;
    std::map<long, Subspace> pieces;
    Vec element;
};
// eigenspaces of ad of the highest coroot; throws RootError unless the
// spectrum is within {0,+-1,+-2} with dim g_2 = 1
Grading highest_root_grading(const LieAlgebra& l, const ExtractedRoots& r);
// same dims read off a root system
std::map<long, std::size_t> highest_root_grading_dims(const RootSystem& rs);

// maximal weights of a module given by commuting diagonalizable actions of the cartan
std::vector<Weight> module_highest_weights(const ExtractedRoots& r, const std::vector<Matrix>& cartan_action);

}  // namespace trialis
