#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcf/complexes.hpp"
#include "lcf/products.hpp"
#include "lcf/subdivision.hpp"

namespace lcf {

using Point = std::vector<std::int64_t>;
using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct LatticeEmbedding {
    std::size_t D = 0;
    std::uint64_t seed = 0;
    std::vector<Point> points;   // by vertex id
    std::int64_t a_squared = 0;  // locality, squared so it stays exact
    std::size_t b = 0;           // density
    [[nodiscard]] double a() const;
};

struct EmbeddingMeasure {
    std::int64_t a_squared = 0;
    std::size_t b = 0;
    std::map<std::size_t, std::size_t> histogram;  // occupancy -> number of lattice points
    [[nodiscard]] double a() const;
};

EmbeddingMeasure verify_embedding(const std::vector<Point>& points, const EdgeList& edges);

// Radius V^(1/(D-2)) for squares, V^(1/(D-1)) for graphs, in 1/2^16 units.
std::int64_t sphere_radius_fp(std::size_t n_vertices, std::size_t exponent_den);
// Odd integer close to V^(1/(D-2)): 2 floor(x/2) + 1.
std::size_t odd_subdivision_length(std::size_t n_vertices, std::size_t D);

LatticeEmbedding embed_square(const SubdividedComplex& sub, std::size_t D, std::uint64_t seed);
LatticeEmbedding embed_square(const SquareComplex& g, std::size_t L, std::size_t D, std::uint64_t seed);

struct GraphEmbedding {
    LatticeEmbedding embedding;
    EdgeList edges;  // edges of the subdivided graph
};

// Vertex ids: base vertices, then the L-1 inner points of each edge in order.
GraphEmbedding embed_graph(std::size_t n_vertices, const EdgeList& edges, std::size_t L, std::size_t D,
                           std::uint64_t seed);

// Points for X(0), X(1), X(2) in that order, read from "(i,j)" or "[(i,j)]" labels and padded with zeros.
std::vector<Point> points_from_grid_labels(const ChainComplex3& x, std::size_t D);

struct StackedCode {
    ChainComplex3 code;
    std::vector<Point> points;  // X(0) of every copy, then X(1), then X(2)
};

// a^D translated copies on a cubic grid of cells.
StackedCode stack(const ChainComplex3& code, const std::vector<Point>& points, std::size_t D, std::size_t a);
// Tanner-graph edges of a complex with vertices numbered X(0), X(1), X(2).
EdgeList tanner_edges(const ChainComplex3& x);

std::string points_csv(const std::vector<Point>& points);

}  // namespace lcf
