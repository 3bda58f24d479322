#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcf/complexes.hpp"
#include "lcf/f2.hpp"

namespace lcf {

// Finite group given by its multiplication table; element 0 need not be the identity.
class GroupTable {
public:
    GroupTable() = default;
    // Validates the group laws; throws std::invalid_argument with the first violation.
    explicit GroupTable(std::vector<std::vector<std::uint32_t>> mul);

    static GroupTable cyclic(std::size_t n);
    static GroupTable dihedral(std::size_t n);  // order 2n: r^k at k, s r^k at n + k
    static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
    static GroupTable trivial() { return cyclic(1); }

    [[nodiscard]] std::size_t order() const { return mul_.size(); }
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a][b]; }
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
    [[nodiscard]] std::uint32_t identity() const { return id_; }
    [[nodiscard]] const std::vector<std::vector<std::uint32_t>>& table() const { return mul_; }

    friend bool operator==(const GroupTable& a, const GroupTable& b) { return a.mul_ == b.mul_; }

private:
    std::vector<std::vector<std::uint32_t>> mul_;
    std::vector<std::uint32_t> inv_;
    std::uint32_t id_ = 0;
};

// Bipartite graph V(0) - V(1) with a group acting on both sides. Read as a code, V(0) are
// the bits, V(1) the checks, and the parity matrix is the |V(1)| x |V(0)| adjacency.
struct ActedBipartiteGraph {
    GroupTable group;
    std::size_t n_left = 0;
    std::size_t n_right = 0;
    std::vector<Entry> edges;                          // (left, right), sorted, unique
    std::vector<std::vector<std::uint32_t>> act_left;  // act_left[g][v] = g.v
    std::vector<std::vector<std::uint32_t>> act_right;

    ActedBipartiteGraph() = default;
    ActedBipartiteGraph(GroupTable g, std::size_t nl, std::size_t nr, std::vector<Entry> e,
                        std::vector<std::vector<std::uint32_t>> al, std::vector<std::vector<std::uint32_t>> ar);

    // Tanner graph of H (rows = checks = V(1)) with the trivial group.
    static ActedBipartiteGraph from_parity(const SparseBitMatrix& h);
    static ActedBipartiteGraph from_parity(const SparseBitMatrix& h, GroupTable g,
                                           std::vector<std::vector<std::uint32_t>> act_bits,
                                           std::vector<std::vector<std::uint32_t>> act_checks);
    // Cay(A, G): V(0), V(1) copies of G, edges (x, a x), acted on by g.x = x g^-1.
    static ActedBipartiteGraph cayley_left(const GroupTable& g, const std::vector<std::uint32_t>& a);
    // Cay(G, B): edges (y, y b), acted on by g.y = g y.
    static ActedBipartiteGraph cayley_right(const GroupTable& g, const std::vector<std::uint32_t>& b);

    // Throws std::invalid_argument on a broken homomorphism, non-invariant edges or a non-free action.
    void validate() const;
    [[nodiscard]] SparseBitMatrix parity_matrix() const;
    // swaps V(0) and V(1)
    [[nodiscard]] ActedBipartiteGraph transposed() const;
};

enum VertexClass : std::uint8_t { V00 = 0, V10 = 1, V01 = 2, V11 = 3 };

struct SquareComplex {
    std::vector<std::uint8_t> vclass;                   // VertexClass per vertex
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (u, v), u < v, sorted
    std::vector<std::array<std::uint32_t, 4>> faces;    // (v00, v10, v01, v11), sorted
    std::vector<std::string> labels;

    [[nodiscard]] std::size_t n_vertices() const { return vclass.size(); }
    [[nodiscard]] std::array<std::size_t, 4> class_sizes() const;
    [[nodiscard]] std::vector<std::uint32_t> class_members(std::uint8_t c) const;
    [[nodiscard]] std::size_t max_degree() const;
    [[nodiscard]] std::vector<std::size_t> degrees() const;
    // Throws std::invalid_argument if an edge joins classes that differ in both or neither
    // coordinate, or a face uses an edge that is missing.
    void validate() const;
    // edges, faces sorted and deduplicated
    void normalize();
};

SquareComplex balanced_product_graphs(const ActedBipartiteGraph& ga, const ActedBipartiteGraph& gb);
ChainComplex3 balanced_product_codes(const ActedBipartiteGraph& ha, const ActedBipartiteGraph& hb);
// Trivial-group product with the second factor transposed, so rep3 x rep3 gives [[13,1,3]].
ChainComplex3 hypergraph_product(const SparseBitMatrix& ha, const SparseBitMatrix& hb);

// X(0) = V00, X(1) = V10 then V01, X(2) = V11, maps are the adjacency between classes.
ChainComplex3 square_complex_chain(const SquareComplex& sq);

// Vertex of class c and element g sits at index c |G| + g.
SquareComplex left_right_cayley(const std::vector<std::uint32_t>& a, const GroupTable& g,
                                const std::vector<std::uint32_t>& b);

struct IsoResult {
    bool pass = true;
    std::string message;
};

// Compares two complexes through a vertex map p -> q.
IsoResult check_square_iso(const SquareComplex& p, const SquareComplex& q, const std::vector<std::uint32_t>& map);
IsoResult check_cayley_iso(const std::vector<std::uint32_t>& a, const GroupTable& g,
                           const std::vector<std::uint32_t>& b);
// The map [(x, y)] -> xy from the balanced product onto the Cayley complex vertex set.
std::vector<std::uint32_t> cayley_iso_map(const std::vector<std::uint32_t>& a, const GroupTable& g,
                                          const std::vector<std::uint32_t>& b);

// Bits are edges; vertex v imposes local.H on its incident edges in increasing edge order.
ClassicalCode tanner_code(std::size_t n_vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                          const ClassicalCode& local);

}  // namespace lcf
