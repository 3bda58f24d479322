#include <gtest/gtest.h>

#include <limits>

#include "lcf/classical.hpp"
#include "lcf/products.hpp"
#include "oracles.hpp"

using namespace lcf;

namespace {

ClassicalCode cyc(std::size_t n) { return ClassicalCode(cyclic_repetition_parity(n)); }

// cycle code of K4: bits are the six edges, every vertex checks its three edges
ClassicalCode k4() {
    return tanner_code(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, ClassicalCode(SparseBitMatrix::from_dense({{1, 1, 1}})));
}

std::vector<std::uint64_t> codewords(const oracle::Dense& h, std::size_t n) {
    std::vector<std::uint64_t> cw;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        if (oracle::syndrome_weight(h, x) == 0) {
            cw.push_back(x);
        }
    }
    return cw;
}

// min over x outside C of (|Hx| / m) / (dist(x, C) / n)
Rational soundness_oracle(const oracle::Dense& h, std::size_t n) {
    const auto cw = codewords(h, n);
    const auto m = static_cast<std::int64_t>(h.size());
    std::optional<Rational> best;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        int dist = std::numeric_limits<int>::max();
        for (auto c : cw) {
            dist = std::min(dist, __builtin_popcountll(x ^ c));
        }
        if (dist == 0) {
            continue;
        }
        const Rational r(static_cast<std::int64_t>(oracle::syndrome_weight(h, x)) * static_cast<std::int64_t>(n),
                         m * dist);
        if (!best || r < *best) {
            best = r;
        }
    }
    return *best;
}

}  // namespace

TEST(SubdivideClassical, CountsAndDegrees) {
    for (const auto& c : {cyc(3), cyc(4), k4(), ClassicalCode(SparseBitMatrix::from_dense({{1, 1}}))}) {
        for (std::size_t L : {3, 5}) {
            const auto s = subdivide_classical(c, L);
            const auto E = c.H.nnz();
            const auto h = (L - 1) / 2;
            EXPECT_EQ(s.HL.n(), c.n() + E * h);
            EXPECT_EQ(s.HL.m(), c.m() + E * h);
            EXPECT_EQ(s.points.size(), s.HL.n() + s.HL.m());
            EXPECT_EQ(s.graph_edges.size(), E * L);
            // inner checks join two bits; a base check keeps its base degree
            const auto d = oracle::dense(s.HL.H);
            for (std::size_t r = 0; r < d.size(); ++r) {
                const auto& p = s.points[s.check_points[r]];
                const auto w = static_cast<std::size_t>(std::count(d[r].begin(), d[r].end(), 1));
                if (p.in_U) {
                    EXPECT_EQ(w, c.H.row(p.component).size());
                } else {
                    EXPECT_EQ(w, 2u);
                }
            }
        }
    }
}

TEST(SubdivideClassical, SingleCheckPaths) {
    // two bits and one check: each edge becomes bit - check - bit - (base check)
    const auto s = subdivide_classical(ClassicalCode(SparseBitMatrix::from_dense({{1, 1}})), 3);
    EXPECT_EQ(s.HL.n(), 4u);
    EXPECT_EQ(s.HL.m(), 3u);
    EXPECT_EQ(s.t_bits[0].size(), 2u);
    EXPECT_EQ(s.t_bits[1].size(), 2u);
    oracle::Dsu dsu(s.points.size());
    for (const auto& [u, v] : s.graph_edges) {
        dsu.unite(u, v);
    }
    EXPECT_EQ(dsu.count(), 1u);
    EXPECT_THROW(subdivide_classical(ClassicalCode(SparseBitMatrix::from_dense({{1, 1}})), 4), std::invalid_argument);
    EXPECT_THROW(subdivide_classical(ClassicalCode(SparseBitMatrix::from_dense({{1, 1}})), 1), std::invalid_argument);
}

TEST(SubdivideClassical, ComponentsHaveAtLeastLBitsWhenDegreeTwo) {
    for (const auto& c : {cyc(3), cyc(5), k4()}) {
        for (std::size_t L : {3, 5, 7}) {
            const auto s = subdivide_classical(c, L);
            EXPECT_GE(s.min_component(), L);
            for (std::size_t b = 0; b < c.n(); ++b) {
                EXPECT_EQ(s.t_bits[b].size(), c.H.col_degrees()[b] * (L - 1) / 2 + 1);
            }
        }
    }
}

TEST(ClassicalChainMap, Commutes) {
    for (const auto& c : {cyc(3), cyc(4), k4(), ClassicalCode(repetition_parity(4))}) {
        for (std::size_t L : {3, 5}) {
            const auto s = subdivide_classical(c, L);
            const auto lhs = oracle::mul(oracle::dense(s.HL.H), oracle::dense(s.F0()), c.n());
            const auto rhs = oracle::mul(oracle::dense(s.F1()), oracle::dense(c.H), c.n());
            EXPECT_EQ(lhs, rhs);
            EXPECT_EQ(oracle::rank(oracle::dense(s.F0())), c.n());
        }
    }
}

TEST(ClassicalProperty, CodewordsAreLiftsAndConstantOnComponents) {
    for (const auto& c : {cyc(3), cyc(4), k4()}) {
        const auto s = subdivide_classical(c, 3);
        const auto dl = oracle::dense(s.HL.H);
        const auto cw = codewords(dl, s.HL.n());
        EXPECT_EQ(cw.size(), codewords(oracle::dense(c.H), c.n()).size());
        for (auto x : cw) {
            const auto v = BitVector::from_mask(s.HL.n(), x);
            for (const auto& t : s.t_bits) {
                for (auto q : t) {
                    ASSERT_EQ(v.get(q), v.get(t[0]));
                }
            }
            const auto p = s.project(v);
            ASSERT_TRUE(p.has_value());
            ASSERT_EQ(s.lift(*p), v);
            ASSERT_GE(v.weight(), s.L * p->weight());
        }
    }
}

TEST(ClassicalLemma, CyclicRepetitionLThree) {
    const auto s = subdivide_classical(cyc(3), 3);
    const auto r = verify_classical_lemma(s);
    EXPECT_TRUE(r.all());
    EXPECT_EQ(r.k_base, 1u);
    EXPECT_EQ(r.k_sub, 1u);
    EXPECT_EQ(r.d_base, 3u);
    EXPECT_EQ(r.d_sub, 9u);
    EXPECT_GE(r.d_sub, 9u);
    EXPECT_EQ(oracle::min_weight_outside(oracle::dense(s.HL.H), s.HL.n(), {}), 9u);
    EXPECT_EQ(r.s_sub, soundness_oracle(oracle::dense(s.HL.H), s.HL.n()));
    EXPECT_EQ(r.s_base, soundness_oracle(oracle::dense(cyc(3).H), 3));
}

TEST(ClassicalLemma, CorpusBases) {
    for (const auto& c : {cyc(3), cyc(4), cyc(5), k4()}) {
        for (std::size_t L : {3, 5}) {
            const auto s = subdivide_classical(c, L);
            if (s.HL.n() > 20) {
                continue;
            }
            const auto r = verify_classical_lemma(s);
            EXPECT_TRUE(r.all()) << "n=" << c.n() << " L=" << L;
            EXPECT_EQ(r.k_sub, r.k_base);
            EXPECT_GE(r.d_sub, L * r.d_base);
            EXPECT_EQ(r.s_sub, soundness_oracle(oracle::dense(s.HL.H), s.HL.n()));
            EXPECT_GE(r.s_sub, r.s_bound);
        }
    }
}

TEST(ClassicalLemma, DegreeOneBitsBreakTheDistanceFactor) {
    // a degree-one bit owns (L + 1) / 2 bits after subdivision, so d(H_L) = L + 1 < 2 L here
    const ClassicalCode single(SparseBitMatrix::from_dense({{1, 1}}));
    const auto r = verify_classical_lemma(subdivide_classical(single, 5));
    EXPECT_EQ(r.d_base, 2u);
    EXPECT_EQ(r.d_sub, 6u);
    EXPECT_FALSE(r.d_ok);
    EXPECT_TRUE(r.k_ok);
    EXPECT_TRUE(r.chain_map);
}

TEST(ClassicalLemma, BoundLimitWithoutSoundness) {
    // s_LTC -> infinity leaves (|X_L(0)| / |X_L(1)|) beta_rep
    EXPECT_EQ(lemma_soundness_bound(15, 15, 3, 3, std::nullopt, 2, 5), Rational(2, 5));
    EXPECT_EQ(lemma_soundness_bound(18, 16, 6, 4, std::nullopt, 3, 3), Rational(18, 16) * Rational(2, 3));
    const auto finite = lemma_soundness_bound(18, 16, 6, 4, Rational(1), 3, 3);
    EXPECT_LT(finite, lemma_soundness_bound(18, 16, 6, 4, std::nullopt, 3, 3));
    EXPECT_GT(finite, Rational(0));
}

TEST(ClassicalClean, ConstantInputUnchanged) {
    const auto s = subdivide_classical(cyc(3), 5);
    const auto c0 = s.lift(BitVector::from_indices(3, {1}));
    const auto r = classical_clean(s, c0);
    EXPECT_EQ(r.c0_prime, c0);
    EXPECT_FALSE(r.c0T.any());
    EXPECT_EQ(r.tilde_c0, BitVector::from_indices(3, {1}));
}

TEST(ClassicalClean, SingleFlipIsUndone) {
    const auto s = subdivide_classical(cyc(3), 5);
    ASSERT_EQ(s.t_bits[0].size(), 5u);
    const auto base = BitVector::ones(3);
    auto c0 = s.lift(base);
    c0.flip(s.t_bits[0][2]);
    const auto r = classical_clean(s, c0);
    EXPECT_EQ(r.c0_prime, s.lift(base));
    EXPECT_EQ(r.c0T.weight(), 1u);
    EXPECT_LE(r.c0T.weight(), c0.weight());
    EXPECT_EQ(r.tilde_c0, base);
}

// Exhaustive audit of the per-component cleaning against the rep constants (2/L, 1).
TEST(ClassicalCleanProperty, ExhaustiveAudit) {
    for (const auto& c : {cyc(3), cyc(4)}) {
        const auto s = subdivide_classical(c, 3);
        const auto n = s.HL.n();
        ASSERT_LE(n, 16u);
        std::vector<char> in_u(s.HL.m());
        for (std::size_t r = 0; r < s.HL.m(); ++r) {
            in_u[r] = s.points[s.check_points[r]].in_U ? 1 : 0;
        }
        auto split = [&](const BitVector& x) {
            const auto y = s.HL.H.apply(x);
            std::int64_t t = 0, u = 0;
            for (auto r : y.support()) {
                (in_u[r] ? u : t) += 1;
            }
            return std::make_pair(t, u);
        };
        for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
            const auto c0 = BitVector::from_mask(n, m);
            const auto r = classical_clean(s, c0);
            const auto [dT, dU] = split(c0);
            const auto [tT, tU] = split(r.c0T);
            ASSERT_EQ(r.c0_prime, c0 + r.c0T);
            ASSERT_LE(r.c0T.weight(), c0.weight());                                    // (b)
            ASSERT_TRUE(leq_scaled(Rational(2, 3), static_cast<std::int64_t>(r.c0T.weight()), dT));  // (c)
            ASSERT_LE(tU, dT);                                                          // (d), eta = 1
            ASSERT_TRUE(r.ledger.b && r.ledger.c && r.ledger.d && r.ledger.dc0p_ok) << m;
            ASSERT_EQ(s.lift(r.tilde_c0), r.c0_prime);
            // |delta c0'| <= |delta c0|_U + |delta c0^T|_U, everything in T is cleaned away
            const auto [pT, pU] = split(r.c0_prime);
            ASSERT_EQ(pT, 0);
            ASSERT_LE(pU, dU + tU);
            (void)tT;
        }
    }
}
