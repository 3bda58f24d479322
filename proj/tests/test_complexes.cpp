#include <gtest/gtest.h>

#include "lcf/complexes.hpp"
#include "lcf/products.hpp"
#include "oracles.hpp"

using namespace lcf;

namespace {

// Ranks through the dense oracle, then |X1| - rank d0 - rank d1.
std::size_t oracle_k(const ChainComplex3& x) {
    return x.n1() - oracle::rank(oracle::dense(x.delta0)) - oracle::rank(oracle::dense(x.delta1));
}

std::size_t oracle_dx(const ChainComplex3& x) {
    return oracle::min_weight_outside(oracle::dense(x.delta1), x.n1(), oracle::dense(x.delta0));
}

// Dijkstra min-max over single flips; target is a cocycle that is not a coboundary.
std::size_t oracle_barrier_x(const ChainComplex3& x) {
    const auto d1 = oracle::dense(x.delta1);
    const auto d0 = oracle::dense(x.delta0);
    return oracle::minimax_barrier(d1, x.n1(), [&](std::uint64_t s) {
        return oracle::syndrome_weight(d1, s) == 0 && !oracle::in_colspan(d0, x.n1(), s);
    });
}

Rational oracle_soundness(const SparseBitMatrix& h) {
    const auto d = oracle::dense(h);
    const std::size_t n = h.cols();
    std::vector<std::uint64_t> code;
    for (std::uint64_t c = 0; c < (1ULL << n); ++c) {
        if (oracle::syndrome_weight(d, c) == 0) {
            code.push_back(c);
        }
    }
    std::optional<Rational> best;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        std::size_t dist = n + 1;
        for (auto c : code) {
            dist = std::min<std::size_t>(dist, __builtin_popcountll(x ^ c));
        }
        if (dist == 0) {
            continue;
        }
        const Rational r(static_cast<std::int64_t>(n * oracle::syndrome_weight(d, x)),
                         static_cast<std::int64_t>(h.rows() * dist));
        if (!best || r < *best) {
            best = r;
        }
    }
    return *best;
}

// Standard Kronecker layout of the product with the second factor transposed.
ChainComplex3 kron_product(const SparseBitMatrix& a, const SparseBitMatrix& b) {
    const auto A = oracle::dense(a);
    const auto Bt = oracle::transpose(oracle::dense(b), b.cols());
    const std::size_t ma = a.rows(), na = a.cols(), mb = b.rows(), nb = b.cols();
    const auto d0 = oracle::vcat(oracle::kron(A, na, oracle::identity(mb), mb), oracle::kron(oracle::identity(na), na, Bt, mb));
    const auto d1 = oracle::hcat(oracle::kron(oracle::identity(ma), ma, Bt, mb), oracle::kron(A, na, oracle::identity(nb), nb));
    return {SparseBitMatrix::from_dense(d0), SparseBitMatrix::from_dense(d1)};
}

}  // namespace

TEST(Surface, L4Parameters) {
    const auto x = surface_code(4);
    const auto v = validate(x);
    EXPECT_TRUE(v.valid);
    EXPECT_EQ(v.max_degree, 4u);
    EXPECT_EQ(x.n1(), 13u);
    EXPECT_EQ(css_dimension(x), 1u);
    const auto d = css_distance(x);
    EXPECT_EQ(d[0], 3u);
    EXPECT_EQ(d[1], 3u);
}

TEST(Surface, DistanceGrowsAsHalfLPlusOne) {
    for (std::size_t L : {2u, 4u, 6u}) {
        const auto x = surface_code(L);
        EXPECT_EQ(css_dimension(x), 1u);
        const auto d = css_distance(x);
        EXPECT_EQ(d[0], L / 2 + 1) << "L=" << L;
        EXPECT_EQ(d[1], L / 2 + 1) << "L=" << L;
    }
    EXPECT_THROW(surface_code(3), std::invalid_argument);
}

TEST(Surface, LabelsAreGridCoordinates) {
    const auto x = surface_code(2);
    ASSERT_EQ(x.labels[1].size(), 5u);
    EXPECT_EQ(x.labels[1][0], "(0,0)");
}

// The oracle settles the barrier of the planar L=4 code: a string entering from a boundary
// only ever carries one violated check.
TEST(EnergyBarrier, SurfaceAgreesWithDijkstra) {
    const auto x = surface_code(4);
    const auto e = energy_barrier(x, Side::X);
    EXPECT_EQ(e, oracle_barrier_x(x));
    EXPECT_EQ(e, 1u);
    EXPECT_EQ(energy_barrier(x, Side::Z), oracle_barrier_x(x.transposed()));
}

TEST(EnergyBarrier, RepetitionLineIsOne) {
    const auto x = from_classical(ClassicalCode(repetition_parity(6)));
    EXPECT_EQ(energy_barrier(x, Side::X), 1u);
}

TEST(EnergyBarrier, NoChecksMeansZero) {
    const ChainComplex3 x(SparseBitMatrix(3, 0), SparseBitMatrix(0, 3));
    EXPECT_EQ(energy_barrier(x, Side::X), 0u);
    EXPECT_EQ(css_dimension(x), 3u);
    EXPECT_EQ(css_distance(x)[0], 1u);
    EXPECT_EQ(css_distance(x)[1], 1u);
}

TEST(EnergyBarrier, ToricCodeIsTwo) {
    const auto x = hypergraph_product(cyclic_repetition_parity(3), cyclic_repetition_parity(3));
    EXPECT_EQ(energy_barrier(x, Side::X), oracle_barrier_x(x));
    EXPECT_EQ(energy_barrier(x, Side::X), 2u);
}

TEST(Validate, IdentityCompositionHasWitness) {
    const ChainComplex3 x(SparseBitMatrix::identity(1), SparseBitMatrix::identity(1));
    const auto v = validate(x);
    EXPECT_FALSE(v.valid);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->first, 0u);
    EXPECT_EQ(v.witness->second, 0u);
    EXPECT_TRUE(validate(from_classical(ClassicalCode(repetition_parity(4))).transposed()).valid);
    EXPECT_THROW(ChainComplex3(SparseBitMatrix(2, 1), SparseBitMatrix(1, 3)), std::invalid_argument);
}

TEST(Dimension, ZeroMapsGiveAllQubits) {
    const ChainComplex3 x(SparseBitMatrix(4, 2), SparseBitMatrix(3, 4));
    EXPECT_EQ(css_dimension(x), 4u);
}

TEST(Dimension, EmptyLogicalsRejectDistance) {
    const ChainComplex3 x(SparseBitMatrix::identity(2), SparseBitMatrix(0, 2));
    EXPECT_EQ(css_dimension(x), 0u);
    EXPECT_ANY_THROW(css_distance(x));
    EXPECT_ANY_THROW(energy_barrier(x, Side::X));
}

TEST(Guards, DistanceGuardFiresAndForceOverrides) {
    const auto x = surface_code(4);
    Guards g;
    g.distance_n = 10;
    EXPECT_THROW(css_distance(x, g), GuardError);
    g.force = true;
    EXPECT_EQ(css_distance(x, g)[0], 3u);
    Guards b;
    b.barrier_n = 5;
    EXPECT_THROW(energy_barrier(x, Side::X, b), GuardError);
}

TEST(Classical, RepetitionFive) {
    const auto r = classical_params(ClassicalCode(repetition_parity(5)));
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.d[0], 5u);
    EXPECT_EQ(r.energy[0], 1u);
    EXPECT_FALSE(r.quantum);
}

TEST(Classical, IdentityHasNoCodewords) {
    const ClassicalCode c(SparseBitMatrix::identity(3));
    EXPECT_EQ(classical_dimension(c), 0u);
    EXPECT_ANY_THROW(classical_distance(c));
    EXPECT_ANY_THROW(classical_params(c));
}

TEST(Classical, TwoRepetitionBlocks) {
    const ClassicalCode c(block_diag({repetition_parity(3), repetition_parity(3)}));
    const auto r = classical_params(c);
    EXPECT_EQ(r.k, 2u);
    EXPECT_EQ(r.d[0], 3u);
}

TEST(Soundness, RepetitionFourIsTwoThirds) {
    EXPECT_EQ(classical_soundness(ClassicalCode(repetition_parity(4))), Rational(2, 3));
}

TEST(Soundness, SingleCheckOnTwoBitsIsTwo) {
    // x = (1,0): |Hx|/m = 1, dist = 1, n = 2, so s = 2 |Hx| / dist = 2
    EXPECT_EQ(classical_soundness(ClassicalCode(SparseBitMatrix::from_dense({{1, 1}}))), Rational(2));
}

TEST(Soundness, ZeroChecksIsVacuous) {
    EXPECT_THROW(classical_soundness(ClassicalCode(SparseBitMatrix(1, 3))), std::domain_error);
}

TEST(Soundness, EnergyBarrierFromSoundness) {
    for (std::size_t n : {3u, 4u, 5u, 6u}) {
        const ClassicalCode c(repetition_parity(n));
        const auto s = classical_soundness(c);
        const auto r = classical_params(c);
        // A walk to a codeword passes a state of weight floor(d/2), whose distance to the code is
        // floor(d/2). With d/2 itself the bound already fails for n = 3 (1 < 3/2).
        const Rational rhs = s * Rational(static_cast<std::int64_t>(c.m()), static_cast<std::int64_t>(n)) *
                             Rational(static_cast<std::int64_t>(r.d[0] / 2));
        EXPECT_GE(Rational(static_cast<std::int64_t>(r.energy[0])), rhs) << n;
    }
}

TEST(SmallSet, SurjectiveCoboundaryPasses) {
    const ChainComplex3 x(SparseBitMatrix::identity(4), SparseBitMatrix(0, 4));
    EXPECT_TRUE(check_small_set_expansion(x, Rational(1), Rational(100), Rational(1), ExpansionSide::Coboundary).pass);
}

TEST(SmallSet, IsolatedQubitFails) {
    // qubit 2 sits in no check and is not a coboundary
    const ChainComplex3 x(SparseBitMatrix::from_dense({{1}, {1}, {0}}), SparseBitMatrix::from_dense({{1, 1, 0}}));
    const auto r = check_small_set_expansion(x, Rational(1, 3), Rational(1, 100), Rational(0), ExpansionSide::Coboundary);
    EXPECT_FALSE(r.pass);
    ASSERT_TRUE(r.witness.has_value());
}

TEST(SmallSet, SweepValueIsTight) {
    const auto x = surface_code(4);
    const Rational alpha(2, 13), gamma(0);
    const auto b = small_set_max_beta(x, alpha, gamma, ExpansionSide::Coboundary);
    ASSERT_TRUE(b.has_value());
    EXPECT_TRUE(check_small_set_expansion(x, alpha, *b, gamma, ExpansionSide::Coboundary).pass);
    EXPECT_FALSE(check_small_set_expansion(x, alpha, *b + Rational(1, 1000), gamma, ExpansionSide::Coboundary).pass);
}

TEST(Bpt, AppendixArithmetic) {
    const auto q = bpt_bounds(10, 3, 2, BoundKind::Quantum);
    EXPECT_EQ(q.d_max, 200);
    EXPECT_EQ(q.energy_max, 240);
    const auto c = bpt_bounds(10, 3, 2, BoundKind::Classical);
    EXPECT_EQ(c.d_max, 1000);
    EXPECT_EQ(c.energy_max, 200);
    EXPECT_THROW(bpt_bounds(4, 3, 3, BoundKind::Quantum), std::invalid_argument);
}

TEST(Bpt, SurfaceReportWithinBounds) {
    const auto rep = measure(surface_code(4));
    EXPECT_TRUE(check_bpt(rep, bpt_bounds(4, 2, 1, BoundKind::Quantum)).all());
    CodeReport fake = rep;
    fake.d = {50, 50};
    EXPECT_FALSE(check_bpt(fake, bpt_bounds(4, 2, 1, BoundKind::Quantum)).d_ok);
}

TEST(Measure, MethodTags) {
    const auto r = measure(surface_code(4));
    EXPECT_EQ(r.n, 13u);
    EXPECT_EQ(r.k, 1u);
    EXPECT_EQ(r.d, (std::vector<std::size_t>{3, 3}));
    EXPECT_EQ(r.methods.count("d"), 1u);
    EXPECT_EQ(r.methods.count("energy"), 1u);
}

TEST(Components, SplitMatchesUnionFind) {
    const auto a = surface_code(2);
    const auto b = from_classical(ClassicalCode(repetition_parity(3)));
    const ChainComplex3 x(block_diag({a.delta0, b.delta0}), block_diag({a.delta1, b.delta1}));
    oracle::Dsu dsu(x.n0() + x.n1() + x.n2());
    for (const auto& [r, c] : x.delta0.entries()) {
        dsu.unite(x.n0() + r, c);
    }
    for (const auto& [r, c] : x.delta1.entries()) {
        dsu.unite(x.n0() + x.n1() + r, x.n0() + c);
    }
    EXPECT_EQ(split_components(x).size(), dsu.count());
}

// Property: dimension, distance and barrier agree with the oracles on random hypergraph products.
TEST(ComplexProperty, RandomProductsAgainstOracles) {
    oracle::Gen gen(21);
    int tested = 0;
    for (int t = 0; t < 60 && tested < 25; ++t) {
        const auto a = gen.covering(gen.range(1, 3), gen.range(2, 3), 0.5);
        const auto b = gen.covering(gen.range(1, 3), gen.range(2, 3), 0.5);
        const auto x = hypergraph_product(a, b);
        if (x.n1() > 14) {
            continue;
        }
        ASSERT_TRUE(validate(x).valid);
        const auto k = css_dimension(x);
        ASSERT_EQ(k, oracle_k(x));
        ASSERT_EQ(k, css_dimension_via_kernel(x));
        if (k == 0) {
            continue;
        }
        ++tested;
        const auto d = css_distance(x);
        ASSERT_EQ(d[0], oracle_dx(x));
        ASSERT_EQ(d[1], oracle_dx(x.transposed()));
        const auto e = energy_barrier(x, Side::X);
        ASSERT_EQ(e, oracle_barrier_x(x));
        // duality
        ASSERT_EQ(energy_barrier(x, Side::Z), energy_barrier(x.transposed(), Side::X));
        ASSERT_EQ(d[1], css_distance(x.transposed())[0]);
    }
    EXPECT_GE(tested, 10);
}

TEST(ComplexProperty, ProductMatchesKronecker) {
    oracle::Gen gen(22);
    for (int t = 0; t < 30; ++t) {
        const auto a = gen.matrix(gen.range(1, 4), gen.range(1, 4), 0.5);
        const auto b = gen.matrix(gen.range(1, 4), gen.range(1, 4), 0.5);
        ASSERT_EQ(hypergraph_product(a, b), kron_product(a, b));
    }
}

TEST(ComplexProperty, SoundnessAgainstBruteForce) {
    oracle::Gen gen(23);
    for (int t = 0; t < 30; ++t) {
        const auto h = gen.covering(gen.range(1, 4), gen.range(2, 8), 0.4);
        if (rank(h) == 0) {
            continue;
        }
        ASSERT_EQ(classical_soundness(ClassicalCode(h)), oracle_soundness(h));
    }
}

TEST(ComplexProperty, ExpansionImpliesDistanceAndBarrier) {
    const std::vector<ChainComplex3> corpus{surface_code(2), surface_code(4),
                                            hypergraph_product(cyclic_repetition_parity(3), cyclic_repetition_parity(3)),
                                            hypergraph_product(repetition_parity(3), repetition_parity(2))};
    for (const auto& x : corpus) {
        const Rational alpha(1, static_cast<std::int64_t>(x.n1()));
        const Rational gamma(0);
        const auto bc = small_set_max_beta(x, alpha, gamma, ExpansionSide::Coboundary);
        const auto bb = small_set_max_beta(x, alpha, gamma, ExpansionSide::Boundary);
        if (!bc || !bb || bc->num() == 0 || bb->num() == 0) {
            continue;
        }
        const auto beta = std::min(*bc, *bb);
        const auto d = css_distance(x);
        EXPECT_GT(Rational(static_cast<std::int64_t>(std::min(d[0], d[1]))), alpha * Rational(static_cast<std::int64_t>(x.n1())));
        const auto need = alpha * beta * Rational(static_cast<std::int64_t>(x.n1()));
        const auto ceil_need = (need.num() + need.den() - 1) / need.den();
        EXPECT_GE(static_cast<std::int64_t>(energy_barrier(x, Side::X)), ceil_need);
        EXPECT_GE(static_cast<std::int64_t>(energy_barrier(x, Side::Z)), ceil_need);
    }
}
