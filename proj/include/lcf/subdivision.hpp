#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcf/complexes.hpp"
#include "lcf/f2.hpp"
#include "lcf/generalized.hpp"
#include "lcf/products.hpp"
#include "lcf/rational.hpp"

namespace lcf {

enum class CellKind : std::uint8_t { Vertex = 0, Edge = 1, Face = 2 };
enum class Region : std::uint8_t { S = 0, T = 1, U = 2 };

struct SubVertex {
    CellKind kind = CellKind::Vertex;
    std::uint32_t cell = 0;  // base vertex, edge or face index
    std::uint16_t i = 0;
    std::uint16_t j = 0;
    Region region = Region::S;
    std::uint32_t component = 0;  // index into X(0), X(1) or X(2) of the base, by region
    std::uint8_t level = 0;       // parity class: 0 (even, even), 1 mixed, 2 (odd, odd)
    std::uint32_t index = 0;      // position inside X_L(level)
};

// One piece of the cleaning: a region component seen as a complex with boundary.
struct RegionPiece {
    BoundaryComplex complex;
    std::vector<std::array<std::vector<std::uint32_t>, 2>> levels;  // [level] = {interior ids, boundary ids} in X_L(level)
};

struct ChainMaps {
    SparseBitMatrix F0, F1, F2;  // |X_L(i)| x |X(i)|
};

struct SubdividedComplex {
    SquareComplex base;
    ChainComplex3 X;  // square_complex_chain(base)
    std::size_t L = 0;
    std::vector<SubVertex> vertices;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // between vertex ids, u < v
    ChainComplex3 XL;
    std::array<std::vector<std::uint32_t>, 3> level_vertices;  // X_L(i) -> vertex id
    std::vector<RegionPiece> s_pieces;  // per X(0) element
    std::vector<RegionPiece> t_pieces;  // per X(1) element: qubits interior, U checks as boundary

    [[nodiscard]] ChainMaps chain_maps() const;
    [[nodiscard]] BitVector lift(int level, const BitVector& c) const;
    [[nodiscard]] std::optional<BitVector> project(int level, const BitVector& c) const;
    // per-direction degrees of the base (parallel to i, parallel to j)
    [[nodiscard]] std::pair<std::size_t, std::size_t> degree_range() const;
};

SubdividedComplex subdivide(const SquareComplex& g, std::size_t L);

struct ChainMapCheck {
    bool pass = true;
    std::string message;  // names the first violating basis vector
};

ChainMapCheck verify_chain_map(const ChainComplex3& X, const ChainComplex3& XL, const ChainMaps& F);
ChainMapCheck verify_chain_map(const SubdividedComplex& sub);

struct CleaningLedger {
    // weights of c1 split by region, and of its coboundary
    std::int64_t c1_S = 0, c1_T = 0, c1 = 0;
    std::int64_t dc1_S = 0, dc1_T = 0, dc1_U = 0, dc1 = 0;
    // step 1
    std::int64_t c0S = 0, dc0S_T = 0, c1S = 0, dc1S_T = 0;
    std::int64_t c1p = 0, dc1p_T = 0, dc1p_U = 0, dc1p = 0;
    // step 2
    std::int64_t c1T = 0, dc1T_U = 0;
    std::int64_t c1pp = 0, dc1pp = 0, dc1pp_U = 0;
    bool step1_bounds = true;  // (b)-(e) held in every S piece
    bool step2_bounds = true;  // rep (b)-(d) held in every T piece
};

struct CleaningResult {
    BitVector c0S;
    BitVector c1S;
    BitVector c1_prime;
    BitVector c1T;
    BitVector c1_dprime;
    std::optional<BitVector> tilde_c1;
    CleaningLedger ledger;
};

CleaningResult clean_vector(const SubdividedComplex& sub, const BitVector& c1, const Guards& g = {});

struct AuditLine {
    std::string name;
    bool ok = true;
};
// Term-by-term chains for |c1'|, |delta c1'|, |c1''| and |delta c1''|.
std::vector<AuditLine> audit_cleaning(const SubdividedComplex& sub, const CleaningLedger& l);

struct DimensionReport {
    bool pass = true;
    std::size_t k_base = 0;
    std::size_t k_sub = 0;
    std::array<bool, 4> obligations{true, true, true, true};
    std::string message;
};

DimensionReport verify_dimension_preservation(const SubdividedComplex& sub, const Guards& g = {});

struct SizeClaim {
    bool precondition = true;  // every per-direction degree >= 2
    bool lower = true;
    bool upper = true;
    std::array<std::size_t, 3> sizes{};
    std::array<std::size_t, 3> base{};
    std::size_t delta_max = 0;
    [[nodiscard]] bool holds() const { return lower && upper; }
};

SizeClaim check_size_claim(const SubdividedComplex& sub);

}  // namespace lcf
