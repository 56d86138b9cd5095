// Marked Dynkin diagrams: parsing, folding, asymptotic directions, Tits
// transforms, homogeneous-variety dimensions and the derived tables.
#pragma once

#include "trialis/roots.hpp"

#include <optional>

namespace trialis {

struct DiagramComponent {
    CartanType type;
    std::vector<int> marks;     // 1-based Bourbaki nodes, ascending
    std::vector<int> degrees;   // Veronese degree per mark
    bool operator==(const DiagramComponent&) const = default;
};

struct MarkedDiagram {
    std::vector<DiagramComponent> comps;

    // "E8[8]", "A3[3]xA3[2]", "A1[1^3]", "D4" (no marks)
    static MarkedDiagram parse(const std::string& text);
    std::string str() const;
    RootSystem system() const;
    std::size_t rank() const;
    // global 0-based node -> (component, 1-based node)
    std::pair<std::size_t, int> locate(std::size_t node) const;
    // highest weight sum of deg * omega_mark, on system()
    Weight weight() const;
    // equal up to diagram automorphisms and component order
    bool equivalent(const MarkedDiagram& o) const;
    std::string canonical() const;
    bool operator==(const MarkedDiagram&) const = default;
};

std::size_t variety_dim(const MarkedDiagram& d);
// dimension of the Segre-Veronese ambient module minus 1
Z ambient_dim(const MarkedDiagram& d);
// dim of the semisimple algebra of the diagram
std::size_t algebra_dim(const MarkedDiagram& d);

// automorphisms of a standard diagram as node permutations (0-based)
std::vector<std::vector<std::size_t>> diagram_automorphisms(const CartanType& t);
// orbit quotient along a symmetry (0-based permutation); orbit nodes short
MarkedDiagram fold(const MarkedDiagram& d, const std::vector<std::size_t>& perm);
// the nontrivial symmetry of order k (2 or 3) of a single-component diagram
std::vector<std::size_t> default_symmetry(const CartanType& t, int order = 2);

// kept nodes of a single component with given marks (0-based node -> degree);
// numbering of each piece follows the identification of its Cartan matrix
MarkedDiagram subdiagram(const CartanType& t, const std::vector<bool>& keep,
                         const std::map<std::size_t, int>& marks);

// remove the marked (long) node, mark its neighbours with the edge multiplicity
// as Veronese degree; throws RootError for short nodes
MarkedDiagram asymptotic_directions(const MarkedDiagram& d);
bool is_short_node(const CartanType& t, int node);
// nodes adjacent to the mark
MarkedDiagram lines_variety(const MarkedDiagram& d);

struct TitsTransform {
    MarkedDiagram z;   // G marked at S'
    MarkedDiagram y;   // D(G) minus (S \ S'), marked at S' \ S
};
TitsTransform tits_transform(const CartanType& g, const std::vector<int>& s, const std::vector<int>& s2);

struct KempfBundle {
    MarkedDiagram z, fiber;
    bool tangent = false;   // S = S': fibers are tangent spaces
    std::size_t z_dim = 0;
    Z rank = 0;
    Z pe_dim = 0;
};
// X = G/P_S, Z = G/P_S', fibers spanned by the Tits transforms of points of Z
KempfBundle kempf_bundle(const CartanType& g, const std::vector<int>& s, const std::vector<int>& s2);

// node(s) carrying the highest root
std::vector<int> adjoint_nodes(const CartanType& t);

// ---- tables ----
struct FreudenthalRow {
    std::string kind;                    // point, line, plane, symplecta
    std::string formula;                 // 9a+6, ...
    long expected = 0;
    std::vector<MarkedDiagram> dim_matches;   // single-marked diagrams of that dim
    std::optional<MarkedDiagram> chosen;      // from the cone generator
    std::size_t dim = 0;
    bool ambiguous() const { return dim_matches.size() > 1; }
};
// a in {1,2,4,8}
std::vector<FreudenthalRow> freudenthal_table(int a);

struct MagicCell {
    std::optional<MarkedDiagram> diagram;   // row 1 carries none
    std::string name;
    std::size_t dim = 0;
    Z ambient = 0;
};
// rows 1..4 (index 0..3), columns a = 1,2,4,8
std::array<std::array<MagicCell, 4>, 4> geometric_magic_square();

// short display name of a diagram ("G(2,5)", "v2(P2)", "P1xQ4", ...)
std::string variety_name(const MarkedDiagram& d);

}  // namespace trialis
