#include <gtest/gtest.h>

#include "lcf/f2.hpp"
#include "lcf/rational.hpp"
#include "oracles.hpp"

using namespace lcf;

TEST(BitVector, BasicOps) {
    auto v = BitVector::from_indices(70, {0, 3, 64, 69});
    EXPECT_EQ(v.weight(), 4u);
    EXPECT_TRUE(v.get(64));
    EXPECT_FALSE(v.get(65));
    EXPECT_EQ(v.first(), 0u);
    v.flip(0);
    EXPECT_EQ(v.first(), 3u);
    EXPECT_EQ(v.support(), (std::vector<std::size_t>{3, 64, 69}));
    auto w = v + v;
    EXPECT_FALSE(w.any());
    EXPECT_EQ(BitVector(5).first(), 5u);
    EXPECT_EQ(BitVector::ones(6).to_mask(), 63u);
    EXPECT_EQ(BitVector::from_mask(4, 0b1010).str(), "0101");
}

TEST(BitVector, DotIsParityOfOverlap) {
    const auto a = BitVector::from_indices(10, {1, 2, 7});
    const auto b = BitVector::from_indices(10, {2, 7, 9});
    EXPECT_FALSE(a.dot(b));
    EXPECT_TRUE(a.dot(BitVector::from_indices(10, {7})));
}

TEST(SparseBitMatrix, RejectsBadEntries) {
    EXPECT_THROW(SparseBitMatrix(2, 2, {{0, 2}}), std::out_of_range);
    EXPECT_THROW(SparseBitMatrix(2, 2, {{0, 1}, {0, 1}}), std::invalid_argument);
    const auto m = SparseBitMatrix::from_xor(2, 2, {{0, 1}, {0, 1}, {1, 0}});
    EXPECT_EQ(m.nnz(), 1u);
    EXPECT_TRUE(m.get(1, 0));
}

TEST(SparseBitMatrix, ShapesOfStacks) {
    const auto a = SparseBitMatrix::identity(2);
    const auto b = SparseBitMatrix::from_dense({{1, 1, 0}, {0, 1, 1}});
    const auto h = hstack(a, b);
    EXPECT_EQ(h.rows(), 2u);
    EXPECT_EQ(h.cols(), 5u);
    EXPECT_TRUE(h.get(0, 3));
    const auto v = vstack(b, b);
    EXPECT_EQ(v.rows(), 4u);
    EXPECT_TRUE(v.get(3, 2));
    const auto d = block_diag({a, b});
    EXPECT_EQ(d.rows(), 4u);
    EXPECT_EQ(d.cols(), 5u);
    EXPECT_TRUE(d.get(2, 2));
    EXPECT_FALSE(d.get(0, 2));
}

TEST(F2, RankOfKnownMatrices) {
    EXPECT_EQ(rank(SparseBitMatrix::identity(7)), 7u);
    // bidiagonal checks of the length-5 repetition code
    EXPECT_EQ(rank(SparseBitMatrix::from_dense({{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}})), 4u);
    // the cyclic variant has one dependent row
    EXPECT_EQ(rank(SparseBitMatrix::from_dense({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}})), 2u);
    EXPECT_EQ(rank(SparseBitMatrix(3, 4)), 0u);
}

TEST(F2, SolveReportsInconsistency) {
    const auto m = SparseBitMatrix::from_dense({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    EXPECT_FALSE(solve(m, BitVector::from_indices(3, {0})).has_value());
    const auto x = solve(m, BitVector::from_indices(3, {0, 1}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m.apply(*x), BitVector::from_indices(3, {0, 1}));
}

TEST(F2, MinWeightNontrivialEmptyCoset) {
    const std::vector<BitVector> z{BitVector::from_indices(4, {0, 1})};
    EXPECT_THROW(min_weight_nontrivial(z, z), EmptyCosetError);
    BitVector w;
    EXPECT_EQ(min_weight_nontrivial({BitVector::from_indices(4, {0, 1, 2}), BitVector::from_indices(4, {0})}, {}, &w), 1u);
    EXPECT_EQ(w.weight(), 1u);
}

TEST(F2, EchelonBasisMembership) {
    EchelonBasis b(6);
    EXPECT_TRUE(b.insert(BitVector::from_indices(6, {0, 1})));
    EXPECT_TRUE(b.insert(BitVector::from_indices(6, {1, 2})));
    EXPECT_FALSE(b.insert(BitVector::from_indices(6, {0, 2})));
    EXPECT_TRUE(b.contains(BitVector::from_indices(6, {0, 2})));
    EXPECT_FALSE(b.contains(BitVector::from_indices(6, {3})));
    EXPECT_EQ(b.rank(), 2u);
}

TEST(F2, GrayWalkVisitsEveryState) {
    std::uint64_t s = 0;
    std::vector<int> seen(1 << 6, 0);
    seen[0] = 1;
    gray_walk(6, [&](unsigned i) {
        s ^= 1ULL << i;
        ++seen[s];
    });
    for (int c : seen) {
        EXPECT_EQ(c, 1);
    }
}

// Property: rank, kernel and image agree with plain Gaussian elimination.
TEST(F2Property, RankKernelImageAgainstGauss) {
    oracle::Gen gen(11);
    for (int t = 0; t < 200; ++t) {
        const auto r = gen.range(1, 12);
        const auto c = gen.range(1, 12);
        const auto m = gen.matrix(r, c, 0.35);
        const auto d = oracle::dense(m);
        const auto rk = oracle::rank(d);
        ASSERT_EQ(rank(m), rk);
        const auto ker = kernel_basis(m);
        ASSERT_EQ(ker.size(), c - rk);
        for (const auto& v : ker) {
            ASSERT_FALSE(m.apply(v).any());
        }
        ASSERT_EQ(span_rank(ker), ker.size());
        const auto img = image_basis(m);
        ASSERT_EQ(img.size(), rk);
        for (const auto& v : img) {
            ASSERT_TRUE(solve(m, v).has_value());
        }
    }
}

TEST(F2Property, MultiplyTransposeAgainstDense) {
    oracle::Gen gen(12);
    for (int t = 0; t < 100; ++t) {
        const auto a = gen.matrix(gen.range(1, 9), gen.range(1, 9), 0.4);
        const auto b = gen.matrix(a.cols(), gen.range(1, 9), 0.4);
        ASSERT_EQ(oracle::dense(a.multiply(b)), oracle::mul(oracle::dense(a), oracle::dense(b), b.cols()));
        ASSERT_EQ(oracle::dense(a.transpose()), oracle::transpose(oracle::dense(a), a.cols()));
        ASSERT_EQ(a.transpose().transpose(), a);
        const auto x = gen.vector(a.cols());
        const auto y = a.apply(x);
        const auto ref = oracle::apply(oracle::dense(a), x.to_mask());
        for (std::size_t i = 0; i < y.size(); ++i) {
            ASSERT_EQ(static_cast<int>(y.get(i)), ref[i]);
        }
    }
}

TEST(F2Property, SolveFindsPreimages) {
    oracle::Gen gen(13);
    for (int t = 0; t < 100; ++t) {
        const auto m = gen.matrix(gen.range(1, 10), gen.range(1, 10), 0.3);
        const auto x = gen.vector(m.cols());
        const auto b = m.apply(x);
        const auto s = solve(m, b);
        ASSERT_TRUE(s.has_value());
        ASSERT_EQ(m.apply(*s), b);
    }
}

TEST(Rational, ArithmeticAndParse) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, -3).str(), "-1/3");
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational::parse("2/5"), Rational(2, 5));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
    EXPECT_THROW(Rational(1, 0), std::invalid_argument);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
    EXPECT_TRUE(leq_scaled(Rational(2, 5), 5, 2));
    EXPECT_FALSE(leq_scaled(Rational(2, 5), 6, 2));
}
