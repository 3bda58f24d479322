#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcf/f2.hpp"
#include "lcf/rational.hpp"

namespace lcf {

// Size limits of the exhaustive oracles. `force` lifts all of them.
struct Guards {
    std::size_t distance_n = 28;
    std::size_t barrier_n = 22;
    std::size_t expansion_n = 22;
    std::size_t classical_n = 22;
    std::size_t soundness_n = 20;
    std::size_t cleaning_n = 22;
    bool force = false;

    void require(bool ok, const std::string& what) const {
        if (!ok && !force) {
            throw GuardError(what + " exceeds the configured guard (use force to override)");
        }
    }
};

// F2^{X(0)} --delta0--> F2^{X(1)} --delta1--> F2^{X(2)}
struct ChainComplex3 {
    SparseBitMatrix delta0;  // |X1| x |X0|
    SparseBitMatrix delta1;  // |X2| x |X1|
    std::array<std::vector<std::string>, 3> labels;

    ChainComplex3() = default;
    ChainComplex3(SparseBitMatrix d0, SparseBitMatrix d1);

    [[nodiscard]] std::size_t n0() const { return delta0.cols(); }
    [[nodiscard]] std::size_t n1() const { return delta0.rows(); }
    [[nodiscard]] std::size_t n2() const { return delta1.rows(); }
    // (delta0, delta1) -> (delta1^T, delta0^T): swaps the roles of X and Z
    [[nodiscard]] ChainComplex3 transposed() const;

    friend bool operator==(const ChainComplex3& a, const ChainComplex3& b) {
        return a.delta0 == b.delta0 && a.delta1 == b.delta1;
    }
};

// Classical code C = ker H, H is m x n.
struct ClassicalCode {
    SparseBitMatrix H;

    ClassicalCode() = default;
    explicit ClassicalCode(SparseBitMatrix h);
    [[nodiscard]] std::size_t n() const { return H.cols(); }
    [[nodiscard]] std::size_t m() const { return H.rows(); }
};

struct Diagnostics {
    bool valid = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // (X2 index, X0 index) with (delta1 delta0) != 0
    std::size_t max_row_degree0 = 0;
    std::size_t max_col_degree0 = 0;
    std::size_t max_row_degree1 = 0;
    std::size_t max_col_degree1 = 0;
    std::size_t max_degree = 0;
    std::string message;
};

enum class Side { X, Z };

struct CodeReport {
    bool quantum = true;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::size_t> d;       // quantum: {d_x, d_z}; classical: {d}
    std::vector<std::size_t> energy;  // quantum: {E_x, E_z}; classical: {E}
    std::optional<Rational> soundness;
    std::map<std::string, std::string> methods;
};

// (n-1) x n bidiagonal checks of the length-n repetition code
SparseBitMatrix repetition_parity(std::size_t n);
// n x n cyclic variant: every bit sits in exactly two checks
SparseBitMatrix cyclic_repetition_parity(std::size_t n);
// Planar surface code on an (L+1)x(L+1) grid, L even: qubits at (even,even) and (odd,odd),
// X(0) at (even,odd), X(2) at (odd,even).
ChainComplex3 surface_code(std::size_t L);
// 0 -> F2^n --H--> F2^m, so that side x carries the classical code
ChainComplex3 from_classical(const ClassicalCode& c);

Diagnostics validate(const ChainComplex3& x);
std::size_t css_dimension(const ChainComplex3& x);
// dim ker delta1 - rank delta0, computed through the kernel basis
std::size_t css_dimension_via_kernel(const ChainComplex3& x);

// Connected components of the Tanner graph on X(0) u X(1) u X(2), each as its own complex.
std::vector<ChainComplex3> split_components(const ChainComplex3& x);

std::size_t css_distance_side(const ChainComplex3& x, Side side, const Guards& g = {});
std::array<std::size_t, 2> css_distance(const ChainComplex3& x, const Guards& g = {});
std::size_t energy_barrier(const ChainComplex3& x, Side side, const Guards& g = {});

// Min over single-flip walks from 0 to a target of the peak |H c|. With witnesses, a target is a
// state c with H c = 0 that pairs to 1 with some witness (c lies outside their annihilator).
// Without witnesses every nonzero element of ker H is a target.
std::size_t walk_barrier(const SparseBitMatrix& h, const std::optional<std::vector<BitVector>>& witnesses,
                         const Guards& g);

CodeReport measure(const ChainComplex3& x, const Guards& g = {});

std::size_t classical_dimension(const ClassicalCode& c);
std::size_t classical_distance(const ClassicalCode& c, const Guards& g = {});
CodeReport classical_params(const ClassicalCode& c, const Guards& g = {});
Rational classical_soundness(const ClassicalCode& c, const Guards& g = {});

enum class ExpansionSide { Coboundary, Boundary };

struct SmallSetResult {
    bool pass = true;
    std::optional<BitVector> witness;  // first violating c1
    std::size_t checked = 0;
};

SmallSetResult check_small_set_expansion(const ChainComplex3& x, const Rational& alpha, const Rational& beta,
                                         const Rational& gamma, ExpansionSide side, const Guards& g = {});
// Largest beta for which the check passes at (alpha, gamma); nullopt when unbounded.
std::optional<Rational> small_set_max_beta(const ChainComplex3& x, const Rational& alpha, const Rational& gamma,
                                           ExpansionSide side, const Guards& g = {});

enum class BoundKind { Quantum, Classical };

struct BptBounds {
    BoundKind kind = BoundKind::Quantum;
    std::int64_t L = 0;
    std::int64_t D = 0;
    std::int64_t r = 0;
    std::int64_t d_max = 0;
    std::int64_t energy_max = 0;
    // upper bound on k for a code of distance d
    [[nodiscard]] double k_max(double d) const;
};

BptBounds bpt_bounds(std::int64_t L, std::int64_t D, std::int64_t r, BoundKind kind);

struct BptCheck {
    bool d_ok = true;
    bool energy_ok = true;
    bool k_ok = true;
    [[nodiscard]] bool all() const { return d_ok && energy_ok && k_ok; }
};

BptCheck check_bpt(const CodeReport& rep, const BptBounds& b);

}  // namespace lcf
