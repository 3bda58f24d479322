#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcf/complexes.hpp"
#include "lcf/f2.hpp"
#include "lcf/rational.hpp"

namespace lcf {

// Levels Y(0..top) with interior and boundary parts. delta[i] maps the interior of level i to
// level i+1, rows ordered interior first, then boundary. Level 0 has no boundary; the
// augmentation sends 1 to the all-ones vector on Y(0).
struct BoundaryComplex {
    std::size_t L = 0;  // size parameter of the repetition pieces, 0 if not applicable
    std::vector<std::size_t> n_int;
    std::vector<std::size_t> n_bd;
    std::vector<SparseBitMatrix> delta;

    BoundaryComplex() = default;
    BoundaryComplex(std::vector<std::size_t> ni, std::vector<std::size_t> nb, std::vector<SparseBitMatrix> d,
                    std::size_t L_ = 0);

    [[nodiscard]] std::size_t levels() const { return n_int.size(); }
    // delta[i] with the boundary rows dropped
    [[nodiscard]] SparseBitMatrix interior(std::size_t i) const;
    // delta[i] with only the boundary rows
    [[nodiscard]] SparseBitMatrix boundary(std::size_t i) const;
    // Interior chain property and augmentation; throws std::logic_error on failure.
    void validate() const;
};

BoundaryComplex generalized_repetition(std::size_t L, std::size_t Delta);
BoundaryComplex generalized_surface(std::size_t L, std::size_t Delta1, std::size_t Delta2);
// Tensor product of two two-level complexes with boundary.
BoundaryComplex tensor(const BoundaryComplex& a, const BoundaryComplex& b);

struct SampledMode {
    std::uint64_t seed = 1;
    std::size_t trials = 100000;
};

struct ExpansionResult {
    bool pass = true;
    std::optional<BitVector> witness;  // first violating f_hat, or the binding one if all pass
    std::size_t checked = 0;
    std::string method;
};

// Exhaustive when mode is empty, otherwise stratified random f_hat.
ExpansionResult check_boundary_expansion(const BoundaryComplex& y, std::size_t level, const Rational& beta,
                                         const Rational& eta, const std::optional<SampledMode>& mode = std::nullopt,
                                         const Guards& g = {});

struct ExpansionSweep {
    std::optional<Rational> beta_max;  // with eta = 0; empty when unbounded
    std::optional<Rational> eta_max;   // with beta = 0
    std::optional<BitVector> beta_binding;
    std::optional<BitVector> eta_binding;
};

ExpansionSweep boundary_expansion_sweep(const BoundaryComplex& y, std::size_t level, const Guards& g = {});

struct CorollaryWitness {
    BitVector f0;
    BitVector f1;  // empty for the repetition case
    bool satisfied = false;
};

// Surface case (three levels): f1 = (f_hat + delta0 f0)|int, chosen to realize the five
// inequalities with the constants of size L. Repetition case: f0 in f_hat + {0, 1}.
std::optional<CorollaryWitness> derive_corollary_bounds(const BoundaryComplex& y, const BitVector& f_hat,
                                                        const Guards& g = {});

// Best cleaning candidate for a surface piece even when the inequalities cannot be met
// (`satisfied` says whether they were). Uses exhaustive search up to guards.cleaning_n
// interior vertices, otherwise solves f_hat = delta0 f0 on the interior.
CorollaryWitness surface_cleaning(const BoundaryComplex& y, const BitVector& f_hat, const Guards& g = {});

struct SurfaceConstants {
    Rational beta0, eta0, beta1, eta1;
};
SurfaceConstants surface_constants(std::size_t L);

struct BoundaryGraph {
    std::size_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t> mult;  // boundary multiplicity per vertex, 0 = not on the boundary

    BoundaryGraph() = default;
    BoundaryGraph(std::size_t n_, std::vector<std::pair<std::uint32_t, std::uint32_t>> e, std::vector<std::uint32_t> m);
    [[nodiscard]] std::size_t boundary_size() const;
};

BoundaryGraph repetition_graph(std::size_t L, std::size_t Delta);
BoundaryGraph boundary_graph_product(const BoundaryGraph& g1, const BoundaryGraph& g2);
// Y(0) = V, interior Y(1) = E, one boundary element per unit of boundary multiplicity.
BoundaryComplex graph_complex(const BoundaryGraph& g);

struct FunctionalResult {
    bool pass = true;
    std::optional<std::uint64_t> witness;  // first violating h (bit v = h(v))
    int which = 0;                         // 1 or 2: the violated inequality
    std::size_t checked = 0;
};

FunctionalResult check_functional_inequalities(const BoundaryGraph& g, const Rational& C, const Rational& Cb,
                                               const Guards& guards = {});

struct FunctionalSweep {
    std::optional<Rational> C_max;   // empty when unbounded
    std::optional<Rational> Cb_max;  // empty when unbounded or V^boundary is empty
    std::optional<std::uint64_t> C_binding;
    std::optional<std::uint64_t> Cb_binding;
};

FunctionalSweep functional_sweep(const BoundaryGraph& g, const Guards& guards = {});

}  // namespace lcf
