#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcf/complexes.hpp"
#include "lcf/f2.hpp"
#include "lcf/rational.hpp"

namespace lcf {

// Vertices of the subdivided Tanner graph. Base bits come first, then base checks, then the
// L-1 inner points of every base edge (bit b, check c) in the order of H's entries. Along an
// edge, t = 0 is the bit and t = L the check; even t are bits, odd t are checks.
struct ClassicalPoint {
    bool is_bit = true;
    bool in_U = false;            // base checks only
    std::uint32_t component = 0;  // base bit (T) or base check (U)
    std::uint32_t edge = 0;       // base edge for inner points
    std::uint32_t t = 0;          // 0 for base bits, L for base checks
    std::uint32_t index = 0;      // column of H_L (bits) or row of H_L (checks)
};

struct ClassicalSubdivision {
    ClassicalCode base;
    std::size_t L = 0;
    ClassicalCode HL;
    std::vector<ClassicalPoint> points;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> graph_edges;  // between point ids
    std::vector<std::uint32_t> bit_points;                            // H_L column -> point
    std::vector<std::uint32_t> check_points;                          // H_L row -> point
    std::vector<std::vector<std::uint32_t>> t_bits;                    // per base bit: H_L columns
    std::vector<std::vector<std::uint32_t>> t_checks;                  // per base bit: H_L rows inside T

    [[nodiscard]] SparseBitMatrix F0() const;  // |bits of H_L| x |base bits|
    [[nodiscard]] SparseBitMatrix F1() const;  // |checks of H_L| x |base checks|
    [[nodiscard]] BitVector lift(const BitVector& c) const;
    [[nodiscard]] std::optional<BitVector> project(const BitVector& c) const;
    [[nodiscard]] std::size_t max_degree() const;  // of the base Tanner graph
    [[nodiscard]] std::size_t min_component() const;
};

ClassicalSubdivision subdivide_classical(const ClassicalCode& c, std::size_t L);

// The displayed lower bound, beta_rep = 2/L and eta_rep = 1; without s_ltc the limit s -> infinity.
Rational lemma_soundness_bound(std::size_t nL0, std::size_t nL1, std::size_t n0, std::size_t n1,
                               const std::optional<Rational>& s_ltc, std::size_t delta_max, std::size_t L);

struct ClassicalLemmaReport {
    bool chain_map = true;
    std::size_t k_base = 0, k_sub = 0;
    std::size_t d_base = 0, d_sub = 0;
    Rational s_base, s_sub, s_bound;
    std::size_t delta_max = 0;
    std::size_t min_component = 0;
    bool k_ok = true, d_ok = true, s_ok = true;
    [[nodiscard]] bool all() const { return chain_map && k_ok && d_ok && s_ok; }
};

ClassicalLemmaReport verify_classical_lemma(const ClassicalSubdivision& sub, const Guards& g = {});

struct ClassicalLedger {
    std::int64_t c0 = 0;
    std::int64_t dc0_T = 0, dc0_U = 0;
    std::int64_t c0T = 0, dc0T_U = 0;
    std::int64_t dc0p = 0, dc0p_U = 0;
    bool b = true, c = true, d = true, dc0p_ok = true;
};

struct ClassicalCleaning {
    BitVector c0T;
    BitVector c0_prime;
    BitVector tilde_c0;
    ClassicalLedger ledger;
};

// Majority per T component, ties to 0.
ClassicalCleaning classical_clean(const ClassicalSubdivision& sub, const BitVector& c0);

}  // namespace lcf
