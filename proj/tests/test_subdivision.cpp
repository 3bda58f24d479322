#include <gtest/gtest.h>

#include <map>
#include <set>

#include "lcf/products.hpp"
#include "lcf/subdivision.hpp"
#include "oracles.hpp"

using namespace lcf;

namespace {

SquareComplex square_product(const SparseBitMatrix& a, const SparseBitMatrix& b) {
    auto sq = balanced_product_graphs(ActedBipartiteGraph::from_parity(a), ActedBipartiteGraph::from_parity(b.transpose()));
    sq.validate();
    return sq;
}

SquareComplex single_square() { return square_product(SparseBitMatrix::identity(1), SparseBitMatrix::identity(1)); }
SquareComplex hgp_rep3() { return square_product(repetition_parity(3), repetition_parity(3)); }
SquareComplex toric3() { return square_product(cyclic_repetition_parity(3), cyclic_repetition_parity(3)); }
SquareComplex cayley_z5() { return left_right_cayley({1, 4}, GroupTable::cyclic(5), {2, 3}); }

bool dense_equal(const oracle::Dense& a, const oracle::Dense& b) { return a == b; }

// per base vertex: number of neighbours across i and across j
std::vector<std::array<std::size_t, 2>> dir_degrees(const SquareComplex& sq) {
    std::vector<std::array<std::size_t, 2>> d(sq.n_vertices(), {0, 0});
    for (const auto& [u, v] : sq.edges) {
        const int dir = (sq.vclass[u] ^ sq.vclass[v]) == 1 ? 0 : 1;
        ++d[u][dir];
        ++d[v][dir];
    }
    return d;
}

std::size_t level_of_coords(std::size_t i, std::size_t j) { return (i & 1U) + (j & 1U); }

}  // namespace

TEST(Subdivide, SingleSquareSizes) {
    const auto s = subdivide(single_square(), 3);
    EXPECT_EQ(s.vertices.size(), 16u);
    EXPECT_EQ(s.XL.n0(), 4u);
    EXPECT_EQ(s.XL.n1(), 8u);
    EXPECT_EQ(s.XL.n2(), 4u);
    EXPECT_EQ(s.edges.size(), 24u);
    EXPECT_TRUE(validate(s.XL).valid);
}

TEST(Subdivide, RejectsBadL) {
    EXPECT_THROW(subdivide(single_square(), 4), std::invalid_argument);
    EXPECT_THROW(subdivide(single_square(), 1), std::invalid_argument);
}

TEST(Subdivide, GridCountOnEveryFace) {
    // vertices: base vertices, L-1 per base edge, (L-1)^2 per face
    for (const auto& sq : {single_square(), hgp_rep3(), toric3(), cayley_z5()}) {
        for (std::size_t L : {3, 5}) {
            const auto s = subdivide(sq, L);
            EXPECT_EQ(s.vertices.size(),
                      sq.n_vertices() + (L - 1) * sq.edges.size() + (L - 1) * (L - 1) * sq.faces.size());
            // each face contributes 2 L (L + 1) grid edges, shared base edges counted once
            EXPECT_EQ(s.edges.size(), L * sq.edges.size() + 2 * L * (L - 1) * sq.faces.size());
            EXPECT_TRUE(validate(s.XL).valid);
        }
    }
}

TEST(SubdivideProperty, ParityRegionsAndCorners) {
    for (const auto& sq : {single_square(), hgp_rep3(), toric3(), cayley_z5()}) {
        for (std::size_t L : {3, 5}) {
            const auto s = subdivide(sq, L);
            std::array<std::size_t, 3> counts{};
            for (std::size_t id = 0; id < s.vertices.size(); ++id) {
                const auto& x = s.vertices[id];
                ASSERT_LE(x.i, L);
                ASSERT_LE(x.j, L);
                ASSERT_EQ(x.level, level_of_coords(x.i, x.j));
                ASSERT_EQ(s.level_vertices[x.level][x.index], id);
                ++counts[x.level];
                const Region want = (x.i == L && x.j == L) ? Region::U : (x.i == L || x.j == L) ? Region::T : Region::S;
                ASSERT_EQ(x.region, want);
                if (x.kind == CellKind::Vertex) {
                    const auto c = sq.vclass[x.cell];
                    ASSERT_EQ(x.i, (c & 1U) ? L : 0u);
                    ASSERT_EQ(x.j, (c & 2U) ? L : 0u);
                }
            }
            EXPECT_EQ(counts[0], s.XL.n0());
            EXPECT_EQ(counts[1], s.XL.n1());
            EXPECT_EQ(counts[2], s.XL.n2());
            // edges join grid neighbours only
            for (const auto& [u, v] : s.edges) {
                const auto& a = s.vertices[u];
                const auto& b = s.vertices[v];
                ASSERT_EQ(std::abs(int(a.level) - int(b.level)), 1);
            }
        }
    }
}

TEST(SubdivideProperty, ComponentsBijectWithBaseCells) {
    for (const auto& sq : {single_square(), hgp_rep3(), toric3(), cayley_z5()}) {
        const std::size_t L = 5;
        const auto s = subdivide(sq, L);
        // connected components of each region, computed from the edge list alone
        oracle::Dsu dsu(s.vertices.size());
        for (const auto& [u, v] : s.edges) {
            if (s.vertices[u].region == s.vertices[v].region) {
                dsu.unite(u, v);
            }
        }
        std::array<std::map<std::size_t, std::set<std::uint32_t>>, 3> by_root;
        for (std::size_t id = 0; id < s.vertices.size(); ++id) {
            const auto& x = s.vertices[id];
            by_root[static_cast<int>(x.region)][dsu.find(id)].insert(x.component);
        }
        EXPECT_EQ(by_root[0].size(), s.X.n0());
        EXPECT_EQ(by_root[1].size(), s.X.n1());
        EXPECT_EQ(by_root[2].size(), s.X.n2());
        // the stored component id is constant on each region component and distinct across them
        for (const auto& m : by_root) {
            std::set<std::uint32_t> ids;
            for (const auto& [root, comp] : m) {
                ASSERT_EQ(comp.size(), 1u);
                ids.insert(*comp.begin());
            }
            EXPECT_EQ(ids.size(), m.size());
        }
    }
}

TEST(SubdivideProperty, ComponentVertexCounts) {
    for (const auto& sq : {toric3(), cayley_z5(), hgp_rep3()}) {
        for (std::size_t L : {3, 5}) {
            const auto s = subdivide(sq, L);
            const auto deg = dir_degrees(sq);
            const auto v00 = sq.class_members(V00);
            // level-0 vertices per S component, level-1 vertices per T component
            std::map<std::uint32_t, std::size_t> s_count, t_bits;
            for (const auto& x : s.vertices) {
                if (x.region == Region::S && x.level == 0) {
                    ++s_count[x.component];
                } else if (x.region == Region::T && x.level == 1) {
                    ++t_bits[x.component];
                }
            }
            const std::size_t h = (L - 1) / 2;
            for (std::size_t k = 0; k < v00.size(); ++k) {
                const auto& d = deg[v00[k]];
                EXPECT_EQ(s_count[static_cast<std::uint32_t>(k)], (d[0] * h + 1) * (d[1] * h + 1));
            }
            if (s.degree_range().first >= 2) {
                for (const auto& [c, n] : t_bits) {
                    EXPECT_GE(n, L) << "T component " << c;
                }
            }
        }
    }
}

TEST(SizeClaimTest, BoundsWhenDegreesAtLeastTwo) {
    for (const auto& sq : {toric3(), cayley_z5(), left_right_cayley({3, 4}, GroupTable::dihedral(3), {1, 2})}) {
        for (std::size_t L : {3, 5}) {
            const auto c = check_size_claim(subdivide(sq, L));
            EXPECT_TRUE(c.precondition);
            EXPECT_TRUE(c.holds());
            for (int i = 0; i < 3; ++i) {
                EXPECT_LE(L * L * c.base[i], c.sizes[i]);
                EXPECT_LE(4 * c.sizes[i], c.delta_max * c.delta_max * L * L * c.base[i]);
            }
        }
    }
    // a single face has degree one in each direction, below the claim's range
    EXPECT_FALSE(check_size_claim(subdivide(single_square(), 3)).precondition);
}

TEST(Lift, ZeroOnesAndUnit) {
    const auto s = subdivide(single_square(), 3);
    for (int lv = 0; lv < 3; ++lv) {
        const std::size_t n = lv == 0 ? s.X.n0() : lv == 1 ? s.X.n1() : s.X.n2();
        EXPECT_FALSE(s.lift(lv, BitVector(n)).any());
    }
    EXPECT_EQ(s.lift(0, BitVector::ones(s.X.n0())), BitVector::ones(s.XL.n0()));
    // the T component of one base edge-element: (L, 0), (L, 1), (L, 2) with two of them at level 1
    const auto u = s.lift(1, BitVector::from_indices(s.X.n1(), {0}));
    EXPECT_EQ(u.weight(), 2u);
    std::set<std::uint32_t> comps;
    for (auto k : u.support()) {
        const auto& x = s.vertices[s.level_vertices[1][k]];
        EXPECT_EQ(x.region, Region::T);
        comps.insert(x.component);
    }
    EXPECT_EQ(comps.size(), 1u);
    std::size_t whole = 0;
    for (const auto& x : s.vertices) {
        whole += (x.region == Region::T && x.component == *comps.begin()) ? 1 : 0;
    }
    EXPECT_EQ(whole, 3u);
    EXPECT_THROW(s.lift(1, BitVector(3)), std::invalid_argument);
}

TEST(LiftProperty, WeightRelations) {
    oracle::Gen gen(31);
    for (const auto& sq : {toric3(), cayley_z5()}) {
        for (std::size_t L : {3, 5}) {
            const auto s = subdivide(sq, L);
            const auto dmax = check_size_claim(s).delta_max;
            for (int t = 0; t < 1000; ++t) {
                const auto c0 = gen.vector(s.X.n0());
                const auto c1 = gen.vector(s.X.n1());
                const auto c2 = gen.vector(s.X.n2());
                const auto w1 = s.lift(1, c1).weight();
                ASSERT_EQ(s.lift(2, c2).weight(), c2.weight());
                ASSERT_LE(L * c1.weight(), w1);
                ASSERT_LE(2 * w1, dmax * L * c1.weight());
                ASSERT_LE(L * L * c0.weight(), s.lift(0, c0).weight());
                ASSERT_EQ(s.project(0, s.lift(0, c0)), c0);
                ASSERT_EQ(s.project(1, s.lift(1, c1)), c1);
                ASSERT_EQ(s.project(2, s.lift(2, c2)), c2);
            }
        }
    }
}

TEST(Project, RejectsOutsideTheImage) {
    const auto s = subdivide(toric3(), 3);
    // a single level-1 vertex in S
    for (std::size_t k = 0; k < s.XL.n1(); ++k) {
        if (s.vertices[s.level_vertices[1][k]].region == Region::S) {
            EXPECT_FALSE(s.project(1, BitVector::from_indices(s.XL.n1(), {k})).has_value());
            break;
        }
    }
    // one T component set to 1 gives the matching unit vector
    const std::uint32_t comp = 4;
    BitVector c(s.XL.n1());
    for (std::size_t k = 0; k < s.XL.n1(); ++k) {
        const auto& x = s.vertices[s.level_vertices[1][k]];
        if (x.region == Region::T && x.component == comp) {
            c.set(k, true);
        }
    }
    const auto p = s.project(1, c);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(*p, BitVector::from_indices(s.X.n1(), {comp}));
    // half a component is not in the image
    c.flip(c.first());
    EXPECT_FALSE(s.project(1, c).has_value());
}

TEST(ChainMap, CommutesOnEveryBase) {
    for (const auto& sq : {single_square(), hgp_rep3(), toric3(), cayley_z5()}) {
        for (std::size_t L : {3, 5}) {
            const auto s = subdivide(sq, L);
            EXPECT_TRUE(verify_chain_map(s).pass) << verify_chain_map(s).message;
            // independent: dense products on both sides of each square
            const auto F = s.chain_maps();
            const auto lhs0 = oracle::mul(oracle::dense(s.XL.delta0), oracle::dense(F.F0), s.X.n0());
            const auto rhs0 = oracle::mul(oracle::dense(F.F1), oracle::dense(s.X.delta0), s.X.n0());
            EXPECT_TRUE(dense_equal(lhs0, rhs0));
            const auto lhs1 = oracle::mul(oracle::dense(s.XL.delta1), oracle::dense(F.F1), s.X.n1());
            const auto rhs1 = oracle::mul(oracle::dense(F.F2), oracle::dense(s.X.delta1), s.X.n1());
            EXPECT_TRUE(dense_equal(lhs1, rhs1));
            // injective
            EXPECT_EQ(oracle::rank(oracle::dense(F.F0)), s.X.n0());
            EXPECT_EQ(oracle::rank(oracle::dense(F.F1)), s.X.n1());
            EXPECT_EQ(oracle::rank(oracle::dense(F.F2)), s.X.n2());
        }
    }
}

TEST(ChainMap, CorruptedMapsFail) {
    const auto s = subdivide(hgp_rep3(), 3);
    auto F = s.chain_maps();
    auto e = F.F1.entries();
    e.erase(e.begin() + 1);
    F.F1 = SparseBitMatrix(F.F1.rows(), F.F1.cols(), e);
    const auto r = verify_chain_map(s.X, s.XL, F);
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.message.empty());

    auto XL = s.XL;
    auto d = XL.delta0.entries();
    d.erase(d.begin());
    XL.delta0 = SparseBitMatrix(XL.delta0.rows(), XL.delta0.cols(), d);
    EXPECT_FALSE(verify_chain_map(s.X, XL, s.chain_maps()).pass);
}

TEST(Dimension, PreservedOnSmallBases) {
    struct Case {
        SquareComplex sq;
        std::size_t k;
    };
    for (const auto& c : {Case{single_square(), 0}, Case{hgp_rep3(), 1}, Case{toric3(), 2}}) {
        const auto s = subdivide(c.sq, 3);
        const auto r = verify_dimension_preservation(s);
        EXPECT_TRUE(r.pass) << r.message;
        EXPECT_EQ(r.k_base, c.k);
        EXPECT_EQ(r.k_sub, c.k);
        for (bool ob : r.obligations) {
            EXPECT_TRUE(ob);
        }
        // oracle rank count on X_L
        const auto n1 = s.XL.n1();
        EXPECT_EQ(n1 - oracle::rank(oracle::dense(s.XL.delta0)) - oracle::rank(oracle::dense(s.XL.delta1)), c.k);
    }
}

TEST(Dimension, CorruptedComplexFails) {
    auto s = subdivide(hgp_rep3(), 3);
    // deleting one edge of the subdivided graph removes one entry of delta0
    auto d = s.XL.delta0.entries();
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(d.size() / 2));
    s.XL.delta0 = SparseBitMatrix(s.XL.delta0.rows(), s.XL.delta0.cols(), d);
    EXPECT_FALSE(verify_dimension_preservation(s).pass);
}

TEST(Cleaning, LiftedCodewordIsAlreadyClean) {
    const auto s = subdivide(toric3(), 3);
    const auto z = kernel_basis(s.X.delta1);
    const auto b = image_basis(s.X.delta0);
    for (const auto& c : z) {
        EchelonBasis eb(s.X.n1());
        for (const auto& v : b) {
            eb.insert(v);
        }
        if (eb.contains(c)) {
            continue;
        }
        const auto c1 = s.lift(1, c);
        const auto r = clean_vector(s, c1);
        EXPECT_EQ(r.c1_prime, c1);
        EXPECT_EQ(r.c1_dprime, c1);
        ASSERT_TRUE(r.tilde_c1.has_value());
        EXPECT_EQ(*r.tilde_c1, c);
    }
}

TEST(Cleaning, CoboundaryInsideOneSComponentVanishes) {
    const auto s = subdivide(toric3(), 5);
    // a level-0 vertex whose whole star lies in S
    const auto nb = s.XL.delta0;
    for (std::size_t k = 0; k < s.XL.n0(); ++k) {
        const auto e = BitVector::from_indices(s.XL.n0(), {k});
        const auto c1 = nb.apply(e);
        bool inside = true;
        for (auto q : c1.support()) {
            inside = inside && s.vertices[s.level_vertices[1][q]].region == Region::S;
        }
        if (!inside || s.vertices[s.level_vertices[0][k]].region != Region::S) {
            continue;
        }
        const auto r = clean_vector(s, c1);
        EXPECT_FALSE(r.c1_prime.any());
        ASSERT_TRUE(r.tilde_c1.has_value());
        EXPECT_FALSE(r.tilde_c1->any());
        return;
    }
    FAIL() << "no interior S vertex found";
}

TEST(Cleaning, SingleSquareExhaustiveAudit) {
    const auto s = subdivide(single_square(), 3);
    ASSERT_EQ(s.XL.n1(), 8u);
    const Rational eta0(2, 12);  // (L - 1) / (4 L)
    for (std::uint64_t m = 0; m < 256; ++m) {
        const auto c1 = BitVector::from_mask(8, m);
        const auto r = clean_vector(s, c1);
        ASSERT_TRUE(leq_scaled(eta0, static_cast<std::int64_t>(r.c1_prime.weight()),
                               2 * static_cast<std::int64_t>(c1.weight())))
            << m;
        for (const auto& line : audit_cleaning(s, r.ledger)) {
            ASSERT_TRUE(line.ok) << m << " " << line.name;
        }
        EXPECT_EQ(r.ledger.c1, static_cast<std::int64_t>(c1.weight()));
        EXPECT_EQ(r.ledger.c1p, static_cast<std::int64_t>(r.c1_prime.weight()));
    }
}

// Property: on random cocycles, c1'' stays in the class of c1 and projects to a base cocycle.
TEST(CleaningProperty, CocyclesStayInTheirClass) {
    oracle::Gen gen(32);
    for (const auto& sq : {hgp_rep3(), toric3(), cayley_z5()}) {
        const auto s = subdivide(sq, 3);
        const auto z = kernel_basis(s.XL.delta1);
        for (int t = 0; t < 30; ++t) {
            BitVector c1(s.XL.n1());
            for (const auto& v : z) {
                if (gen.rng.unit() < 0.5) {
                    c1 += v;
                }
            }
            const auto r = clean_vector(s, c1);
            ASSERT_TRUE(solve(s.XL.delta0, c1 + r.c1_dprime).has_value());
            ASSERT_TRUE(r.tilde_c1.has_value());
            EXPECT_FALSE(s.X.delta1.apply(*r.tilde_c1).any());
            EXPECT_EQ(s.lift(1, *r.tilde_c1), r.c1_dprime);
        }
    }
}

TEST(Cleaning, ArbitraryInputStillRuns) {
    oracle::Gen gen(33);
    const auto s = subdivide(toric3(), 3);
    for (int t = 0; t < 20; ++t) {
        const auto c1 = gen.vector(s.XL.n1(), 0.1);
        const auto r = clean_vector(s, c1);
        // c1'' is consistent on T, so whenever it projects it lifts back to itself
        if (r.tilde_c1) {
            EXPECT_EQ(s.lift(1, *r.tilde_c1), r.c1_dprime);
        }
        EXPECT_EQ(r.c1_prime.size(), s.XL.n1());
    }
}
