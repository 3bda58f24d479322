#include "lcf/subdivision.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lcf {

namespace {

int class_level(std::uint8_t c) { return c == V00 ? 0 : (c == V11 ? 2 : 1); }

// positions of base vertices inside X(0), X(1) (V10 then V01), X(2)
std::vector<std::uint32_t> base_index(const SquareComplex& sq) {
    std::vector<std::uint32_t> idx(sq.n_vertices());
    std::array<std::uint32_t, 3> cnt{};
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t v = 0; v < sq.n_vertices(); ++v) {
            const auto c = sq.vclass[v];
            const int lvl = class_level(c);
            if (lvl == 1 ? ((pass == 0) != (c == V10)) : pass == 1) {
                continue;
            }
            idx[v] = cnt[lvl]++;
        }
    }
    return idx;
}

std::size_t count_in(const BitVector& v, const std::vector<std::uint32_t>& ids) {
    std::size_t w = 0;
    for (auto i : ids) {
        w += v.get(i) ? 1 : 0;
    }
    return w;
}

}  // namespace

SubdividedComplex subdivide(const SquareComplex& g, std::size_t L) {
    if (L < 3) {
        throw std::invalid_argument("subdivide: L must be at least 3");
    }
    if (L % 2 == 0) {
        throw std::invalid_argument("subdivide: L must be odd");
    }
    g.validate();
    SubdividedComplex sub;
    sub.base = g;
    sub.base.normalize();
    const auto& sq = sub.base;
    sub.X = square_complex_chain(sq);
    sub.L = L;
    const auto bidx = base_index(sq);
    const std::size_t nV = sq.n_vertices();
    const std::size_t nE = sq.edges.size();
    const std::size_t m = L - 1;
    const auto Lh = static_cast<std::uint16_t>(L);

    auto low_end = [&](std::size_t k) {
        const auto [u, v] = sq.edges[k];
        const unsigned bit = sq.vclass[u] ^ sq.vclass[v];
        return (sq.vclass[u] & bit) ? v : u;
    };
    sub.vertices.resize(nV + nE * m + sq.faces.size() * m * m);
    for (std::size_t v = 0; v < nV; ++v) {
        const auto c = sq.vclass[v];
        auto& x = sub.vertices[v];
        x.kind = CellKind::Vertex;
        x.cell = static_cast<std::uint32_t>(v);
        x.i = (c & 1U) ? Lh : 0;
        x.j = (c & 2U) ? Lh : 0;
    }
    for (std::size_t k = 0; k < nE; ++k) {
        const auto p = low_end(k);
        const auto [u, v] = sq.edges[k];
        const unsigned bit = sq.vclass[u] ^ sq.vclass[v];
        for (std::size_t t = 1; t <= m; ++t) {
            auto& x = sub.vertices[nV + k * m + t - 1];
            x.kind = CellKind::Edge;
            x.cell = static_cast<std::uint32_t>(k);
            // t runs from the endpoint whose differing class bit is 0
            if (bit == 1U) {
                x.i = static_cast<std::uint16_t>(t);
                x.j = (sq.vclass[p] & 2U) ? Lh : 0;
            } else {
                x.j = static_cast<std::uint16_t>(t);
                x.i = (sq.vclass[p] & 1U) ? Lh : 0;
            }
        }
    }
    const std::size_t face_off = nV + nE * m;
    for (std::size_t f = 0; f < sq.faces.size(); ++f) {
        for (std::size_t i = 1; i <= m; ++i) {
            for (std::size_t j = 1; j <= m; ++j) {
                auto& x = sub.vertices[face_off + f * m * m + (i - 1) * m + (j - 1)];
                x.kind = CellKind::Face;
                x.cell = static_cast<std::uint32_t>(f);
                x.i = static_cast<std::uint16_t>(i);
                x.j = static_cast<std::uint16_t>(j);
            }
        }
    }
    auto edge_id = [&](std::uint32_t a, std::uint32_t b) {
        const std::pair<std::uint32_t, std::uint32_t> e{std::min(a, b), std::max(a, b)};
        const auto it = std::lower_bound(sq.edges.begin(), sq.edges.end(), e);
        return static_cast<std::size_t>(it - sq.edges.begin());
    };
    // global id of face-local point (i, j)
    auto at = [&](std::size_t f, std::size_t i, std::size_t j) -> std::uint32_t {
        const auto& q = sq.faces[f];
        const bool ib = i == 0 || i == L;
        const bool jb = j == 0 || j == L;
        if (ib && jb) {
            return q[(i ? 1U : 0U) | (j ? 2U : 0U)];
        }
        if (ib) {
            const unsigned lo = i ? 1U : 0U;
            return static_cast<std::uint32_t>(nV + edge_id(q[lo], q[lo | 2U]) * m + j - 1);
        }
        if (jb) {
            const unsigned lo = j ? 2U : 0U;
            return static_cast<std::uint32_t>(nV + edge_id(q[lo], q[lo | 1U]) * m + i - 1);
        }
        return static_cast<std::uint32_t>(face_off + f * m * m + (i - 1) * m + (j - 1));
    };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ed;
    auto push = [&](std::uint32_t a, std::uint32_t b) { ed.emplace_back(std::min(a, b), std::max(a, b)); };
    for (std::size_t k = 0; k < nE; ++k) {
        const auto p = low_end(k);
        const auto q = sq.edges[k].first == p ? sq.edges[k].second : sq.edges[k].first;
        std::uint32_t prev = p;
        for (std::size_t t = 1; t <= m; ++t) {
            const auto cur = static_cast<std::uint32_t>(nV + k * m + t - 1);
            push(prev, cur);
            prev = cur;
        }
        push(prev, q);
    }
    for (std::size_t f = 0; f < sq.faces.size(); ++f) {
        for (std::size_t i = 0; i <= L; ++i) {
            for (std::size_t j = 0; j <= L; ++j) {
                if (i < L) {
                    push(at(f, i, j), at(f, i + 1, j));
                }
                if (j < L) {
                    push(at(f, i, j), at(f, i, j + 1));
                }
            }
        }
    }
    std::sort(ed.begin(), ed.end());
    ed.erase(std::unique(ed.begin(), ed.end()), ed.end());
    sub.edges = std::move(ed);

    // parity classes, regions, components
    for (std::size_t id = 0; id < sub.vertices.size(); ++id) {
        auto& x = sub.vertices[id];
        x.level = static_cast<std::uint8_t>((x.i & 1U) + (x.j & 1U));
        x.index = static_cast<std::uint32_t>(sub.level_vertices[x.level].size());
        sub.level_vertices[x.level].push_back(static_cast<std::uint32_t>(id));
        if (x.i == L && x.j == L) {
            x.region = Region::U;
        } else if (x.i == L || x.j == L) {
            x.region = Region::T;
        } else {
            x.region = Region::S;
        }
        std::uint32_t owner = 0;
        switch (x.kind) {
            case CellKind::Vertex: owner = x.cell; break;
            case CellKind::Edge: owner = low_end(x.cell); break;
            case CellKind::Face: owner = sq.faces[x.cell][0]; break;
        }
        x.component = bidx[owner];
    }
    std::vector<Entry> e0, e1;
    for (const auto& [a, b] : sub.edges) {
        const auto& va = sub.vertices[a];
        const auto& vb = sub.vertices[b];
        const auto& lo = va.level < vb.level ? va : vb;
        const auto& hi = va.level < vb.level ? vb : va;
        if (lo.level == 0 && hi.level == 1) {
            e0.emplace_back(hi.index, lo.index);
        } else if (lo.level == 1 && hi.level == 2) {
            e1.emplace_back(hi.index, lo.index);
        } else {
            throw std::logic_error("subdivide: grid edge joins equal parity classes");
        }
    }
    std::sort(e0.begin(), e0.end());
    std::sort(e1.begin(), e1.end());
    const auto& lv = sub.level_vertices;
    sub.XL = ChainComplex3(SparseBitMatrix(lv[1].size(), lv[0].size(), std::move(e0)),
                           SparseBitMatrix(lv[2].size(), lv[1].size(), std::move(e1)));
    const auto dg = validate(sub.XL);
    if (!dg.valid) {
        throw std::logic_error("subdivide: X_L is not a chain complex: " + dg.message);
    }

    // region pieces
    const auto nb0 = sub.XL.delta0.column_lists();  // stabilizer -> qubits
    const auto nb1 = sub.XL.delta1.column_lists();  // qubit -> checks
    const std::array<std::size_t, 3> nbase{sub.X.n0(), sub.X.n1(), sub.X.n2()};
    auto vert = [&](int level, std::uint32_t idx) -> const SubVertex& { return sub.vertices[lv[level][idx]]; };
    std::vector<std::array<std::vector<std::uint32_t>, 3>> sm(nbase[0]);
    std::vector<std::array<std::vector<std::uint32_t>, 3>> tm(nbase[1]);
    for (int level = 0; level < 3; ++level) {
        for (std::uint32_t k = 0; k < lv[level].size(); ++k) {
            const auto& x = vert(level, k);
            if (x.region == Region::S) {
                sm[x.component][level].push_back(k);
            } else if (x.region == Region::T) {
                tm[x.component][level].push_back(k);
            }
        }
    }
    // rows: interior then boundary, boundary = targets outside the region adjacent to the interior
    auto build_map = [](const std::vector<std::uint32_t>& cols, const std::vector<std::uint32_t>& rows_int,
                        const std::vector<std::vector<std::uint32_t>>& nb, const std::vector<std::uint32_t>& allowed_bd,
                        std::vector<std::uint32_t>& bd_out) {
        std::map<std::uint32_t, std::uint32_t> row_of;
        for (std::uint32_t r = 0; r < rows_int.size(); ++r) {
            row_of[rows_int[r]] = r;
        }
        std::vector<std::uint32_t> bd;
        for (auto c : cols) {
            for (auto t : nb[c]) {
                if (!row_of.count(t) && std::binary_search(allowed_bd.begin(), allowed_bd.end(), t)) {
                    bd.push_back(t);
                }
            }
        }
        std::sort(bd.begin(), bd.end());
        bd.erase(std::unique(bd.begin(), bd.end()), bd.end());
        for (std::uint32_t r = 0; r < bd.size(); ++r) {
            row_of[bd[r]] = static_cast<std::uint32_t>(rows_int.size() + r);
        }
        std::vector<Entry> e;
        for (std::uint32_t ci = 0; ci < cols.size(); ++ci) {
            for (auto t : nb[cols[ci]]) {
                const auto it = row_of.find(t);
                if (it != row_of.end()) {
                    e.emplace_back(it->second, ci);
                }
            }
        }
        std::sort(e.begin(), e.end());
        bd_out = bd;
        return SparseBitMatrix(rows_int.size() + bd.size(), cols.size(), std::move(e));
    };
    std::array<std::vector<std::uint32_t>, 3> not_s, in_u;
    for (int level = 0; level < 3; ++level) {
        for (std::uint32_t k = 0; k < lv[level].size(); ++k) {
            const auto r = vert(level, k).region;
            if (r != Region::S) {
                not_s[level].push_back(k);
            }
            if (r == Region::U) {
                in_u[level].push_back(k);
            }
        }
    }
    for (std::size_t a = 0; a < nbase[0]; ++a) {
        RegionPiece p;
        p.levels.resize(3);
        p.levels[0][0] = sm[a][0];
        p.levels[1][0] = sm[a][1];
        p.levels[2][0] = sm[a][2];
        auto d0 = build_map(sm[a][0], sm[a][1], nb0, not_s[1], p.levels[1][1]);
        auto d1 = build_map(sm[a][1], sm[a][2], nb1, not_s[2], p.levels[2][1]);
        p.complex = BoundaryComplex({sm[a][0].size(), sm[a][1].size(), sm[a][2].size()},
                                    {0, p.levels[1][1].size(), p.levels[2][1].size()}, {std::move(d0), std::move(d1)}, L);
        sub.s_pieces.push_back(std::move(p));
    }
    for (std::size_t e = 0; e < nbase[1]; ++e) {
        RegionPiece p;
        p.levels.resize(2);
        p.levels[0][0] = tm[e][1];
        p.levels[1][0] = tm[e][2];
        auto d = build_map(tm[e][1], tm[e][2], nb1, in_u[2], p.levels[1][1]);
        p.complex = BoundaryComplex({tm[e][1].size(), tm[e][2].size()}, {0, p.levels[1][1].size()}, {std::move(d)}, L);
        sub.t_pieces.push_back(std::move(p));
    }
    return sub;
}

ChainMaps SubdividedComplex::chain_maps() const {
    std::array<std::vector<Entry>, 3> e;
    for (int level = 0; level < 3; ++level) {
        for (auto id : level_vertices[level]) {
            const auto& x = vertices[id];
            if (static_cast<int>(x.region) == level) {
                e[level].emplace_back(x.index, x.component);
            }
        }
        std::sort(e[level].begin(), e[level].end());
    }
    return {SparseBitMatrix(XL.n0(), X.n0(), std::move(e[0])), SparseBitMatrix(XL.n1(), X.n1(), std::move(e[1])),
            SparseBitMatrix(XL.n2(), X.n2(), std::move(e[2]))};
}

BitVector SubdividedComplex::lift(int level, const BitVector& c) const {
    const std::array<std::size_t, 3> nb{X.n0(), X.n1(), X.n2()};
    if (level < 0 || level > 2) {
        throw std::invalid_argument("lift: level must be 0, 1 or 2");
    }
    if (c.size() != nb[level]) {
        throw std::invalid_argument("lift: vector has length " + std::to_string(c.size()) + ", expected " +
                                    std::to_string(nb[level]));
    }
    BitVector out(level_vertices[level].size());
    for (std::size_t k = 0; k < level_vertices[level].size(); ++k) {
        const auto& x = vertices[level_vertices[level][k]];
        if (static_cast<int>(x.region) == level && c.get(x.component)) {
            out.set(k);
        }
    }
    return out;
}

std::optional<BitVector> SubdividedComplex::project(int level, const BitVector& c) const {
    const std::array<std::size_t, 3> nb{X.n0(), X.n1(), X.n2()};
    if (level < 0 || level > 2 || c.size() != level_vertices[level].size()) {
        return std::nullopt;
    }
    BitVector out(nb[level]);
    std::vector<char> seen(nb[level], 0);
    for (std::size_t k = 0; k < level_vertices[level].size(); ++k) {
        const auto& x = vertices[level_vertices[level][k]];
        const bool v = c.get(k);
        if (static_cast<int>(x.region) != level) {
            if (v) {
                return std::nullopt;
            }
            continue;
        }
        if (!seen[x.component]) {
            seen[x.component] = 1;
            out.set(x.component, v);
        } else if (out.get(x.component) != v) {
            return std::nullopt;
        }
    }
    return out;
}

std::pair<std::size_t, std::size_t> SubdividedComplex::degree_range() const {
    // per vertex: neighbours across the i direction and across the j direction
    std::vector<std::array<std::size_t, 2>> d(base.n_vertices(), {0, 0});
    for (const auto& [u, v] : base.edges) {
        const unsigned bit = base.vclass[u] ^ base.vclass[v];
        const int dir = bit == 1U ? 0 : 1;
        ++d[u][dir];
        ++d[v][dir];
    }
    std::size_t lo = SIZE_MAX, hi = 0;
    for (const auto& a : d) {
        for (auto x : a) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    }
    return {d.empty() ? 0 : lo, hi};
}

ChainMapCheck verify_chain_map(const ChainComplex3& X, const ChainComplex3& XL, const ChainMaps& F) {
    ChainMapCheck r;
    auto cmp = [&](const SparseBitMatrix& lhs, const SparseBitMatrix& rhs, const char* name) {
        if (lhs == rhs) {
            return true;
        }
        // first column where the two sides differ
        const auto a = lhs.dense_columns();
        const auto b = rhs.dense_columns();
        for (std::size_t c = 0; c < a.size(); ++c) {
            if (a[c] != b[c]) {
                r.pass = false;
                r.message = std::string(name) + " fails on basis vector " + std::to_string(c);
                return false;
            }
        }
        r.pass = false;
        r.message = std::string(name) + " fails";
        return false;
    };
    if (F.F0.cols() != X.n0() || F.F1.cols() != X.n1() || F.F2.cols() != X.n2() || F.F0.rows() != XL.n0() ||
        F.F1.rows() != XL.n1() || F.F2.rows() != XL.n2()) {
        return {false, "chain map shapes do not match the complexes"};
    }
    if (!cmp(XL.delta0.multiply(F.F0), F.F1.multiply(X.delta0), "delta0 F0 = F1 delta0")) {
        return r;
    }
    cmp(XL.delta1.multiply(F.F1), F.F2.multiply(X.delta1), "delta1 F1 = F2 delta1");
    return r;
}

ChainMapCheck verify_chain_map(const SubdividedComplex& sub) { return verify_chain_map(sub.X, sub.XL, sub.chain_maps()); }

namespace {

struct LevelWeights {
    std::int64_t S = 0, T = 0, U = 0;
    [[nodiscard]] std::int64_t all() const { return S + T + U; }
};

LevelWeights split(const SubdividedComplex& sub, int level, const BitVector& v) {
    LevelWeights w;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v.get(k)) {
            continue;
        }
        switch (sub.vertices[sub.level_vertices[level][k]].region) {
            case Region::S: ++w.S; break;
            case Region::T: ++w.T; break;
            case Region::U: ++w.U; break;
        }
    }
    return w;
}

BitVector gather(const BitVector& v, const std::vector<std::uint32_t>& ids) {
    BitVector out(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
        out.set(k, v.get(ids[k]));
    }
    return out;
}

}  // namespace

CleaningResult clean_vector(const SubdividedComplex& sub, const BitVector& c1, const Guards& g) {
    const auto& XL = sub.XL;
    if (c1.size() != XL.n1()) {
        throw std::invalid_argument("clean_vector: vector has length " + std::to_string(c1.size()) + ", expected " +
                                    std::to_string(XL.n1()));
    }
    CleaningResult res;
    auto& l = res.ledger;
    res.c0S = BitVector(XL.n0());
    res.c1S = BitVector(XL.n1());
    // step 1: 2D cleaning inside every S piece
    for (const auto& p : sub.s_pieces) {
        if (p.levels[1][0].empty()) {
            continue;
        }
        const auto fhat = gather(c1, p.levels[1][0]);
        const auto w = surface_cleaning(p.complex, fhat, g);
        if (!w.satisfied) {
            l.step1_bounds = false;
        }
        for (std::size_t k = 0; k < p.levels[0][0].size(); ++k) {
            res.c0S.set(p.levels[0][0][k], w.f0.get(k));
        }
        for (std::size_t k = 0; k < p.levels[1][0].size(); ++k) {
            res.c1S.set(p.levels[1][0][k], w.f1.get(k));
        }
    }
    const BitVector dc0S = XL.delta0.apply(res.c0S);
    BitVector full = c1 + dc0S;
    res.c1_prime = BitVector(XL.n1());
    for (std::size_t k = 0; k < XL.n1(); ++k) {
        const bool in_s = sub.vertices[sub.level_vertices[1][k]].region == Region::S;
        if (!in_s) {
            res.c1_prime.set(k, full.get(k));
        } else if (full.get(k) != res.c1S.get(k)) {
            throw std::logic_error("clean_vector: S residue does not match the cleaning output");
        }
    }
    // step 2: majority per T piece, ties to 0
    const auto& c1p = res.c1_prime;
    const BitVector dc1p = XL.delta1.apply(c1p);
    res.c1T = BitVector(XL.n1());
    const Rational beta_rep(2, static_cast<std::int64_t>(sub.L));
    for (const auto& p : sub.t_pieces) {
        const auto& q = p.levels[0][0];
        const auto ones = count_in(c1p, q);
        const bool value = 2 * ones > q.size();
        BitVector local(q.size());
        for (std::size_t k = 0; k < q.size(); ++k) {
            if (c1p.get(q[k]) != value) {
                res.c1T.set(q[k]);
                local.set(k);
            }
        }
        const auto s = static_cast<std::int64_t>(count_in(dc1p, p.levels[1][0]));
        const auto bd = static_cast<std::int64_t>(p.complex.boundary(0).apply(local).weight());
        const auto wt = static_cast<std::int64_t>(local.weight());
        // (b) |f0| <= |f_hat|, (c) beta^rep |f0| <= s, (d) eta^rep = 1 on the U boundary
        if (wt > static_cast<std::int64_t>(ones) || !leq_scaled(beta_rep, wt, s) || bd > s) {
            l.step2_bounds = false;
        }
    }
    res.c1_dprime = c1p + res.c1T;
    res.tilde_c1 = sub.project(1, res.c1_dprime);

    const auto w1 = split(sub, 1, c1);
    const auto wd1 = split(sub, 2, XL.delta1.apply(c1));
    l.c1_S = w1.S;
    l.c1_T = w1.T;
    l.c1 = w1.all();
    l.dc1_S = wd1.S;
    l.dc1_T = wd1.T;
    l.dc1_U = wd1.U;
    l.dc1 = wd1.all();
    l.c0S = static_cast<std::int64_t>(res.c0S.weight());
    l.dc0S_T = split(sub, 1, dc0S).T;
    l.c1S = static_cast<std::int64_t>(res.c1S.weight());
    l.dc1S_T = split(sub, 2, XL.delta1.apply(res.c1S)).T;
    const auto wp = split(sub, 2, dc1p);
    l.c1p = static_cast<std::int64_t>(c1p.weight());
    l.dc1p_T = wp.T;
    l.dc1p_U = wp.U;
    l.dc1p = wp.all();
    l.c1T = static_cast<std::int64_t>(res.c1T.weight());
    l.dc1T_U = split(sub, 2, XL.delta1.apply(res.c1T)).U;
    const auto wpp = split(sub, 2, XL.delta1.apply(res.c1_dprime));
    l.c1pp = static_cast<std::int64_t>(res.c1_dprime.weight());
    l.dc1pp = wpp.all();
    l.dc1pp_U = wpp.U;
    return res;
}

std::vector<AuditLine> audit_cleaning(const SubdividedComplex& sub, const CleaningLedger& l) {
    const auto k = surface_constants(sub.L);
    const Rational eta_rep(1);
    const Rational two_over_eta0 = Rational(2) / k.eta0;
    auto le = [](const Rational& a, const Rational& b) { return a <= b; };
    auto R = [](std::int64_t x) { return Rational(x); };
    std::vector<AuditLine> out;
    out.push_back({"c1'.triangle", l.c1p <= l.c1_T + l.dc0S_T});
    out.push_back({"c1'.(d)", le(R(l.c1_T + l.dc0S_T), two_over_eta0 * R(l.c1_S) + R(l.c1_T))});
    out.push_back({"c1'.total", le(R(l.c1p), two_over_eta0 * R(l.c1))});
    out.push_back({"dc1'.triangle", l.dc1p <= l.dc1S_T + l.dc1_T + l.dc1_U});
    out.push_back({"dc1'.(e)", le(R(l.dc1S_T), R(l.dc1_S) / k.eta1)});
    out.push_back({"dc1'.total", le(R(l.dc1p), R(l.dc1) / k.eta1)});
    out.push_back({"c1''.triangle", l.c1pp <= l.c1p + l.c1T});
    out.push_back({"c1''.(b)", l.c1T <= l.c1p});
    out.push_back({"c1''.total", le(R(l.c1pp), Rational(4) / k.eta0 * R(l.c1))});
    out.push_back({"dc1''.only_U", l.dc1pp == l.dc1pp_U});
    out.push_back({"dc1''.triangle", l.dc1pp <= l.dc1T_U + l.dc1p_U});
    out.push_back({"dc1''.(d)", le(R(l.dc1T_U), R(l.dc1p_T) / eta_rep)});
    out.push_back({"dc1''.step", le(R(l.dc1pp), R(l.dc1p) / eta_rep)});
    out.push_back({"dc1''.total", le(R(l.dc1pp), R(l.dc1) / (eta_rep * k.eta1))});
    return out;
}

DimensionReport verify_dimension_preservation(const SubdividedComplex& sub, const Guards& g) {
    DimensionReport r;
    const auto& X = sub.X;
    const auto& XL = sub.XL;
    auto fail = [&](int ob, const std::string& msg) {
        r.pass = false;
        if (ob >= 0) {
            r.obligations[ob] = false;
        }
        if (r.message.empty()) {
            r.message = msg;
        }
    };
    const auto dg = validate(XL);
    if (!dg.valid) {
        fail(-1, "X_L is not a chain complex: " + dg.message);
    }
    r.k_base = css_dimension(X);
    r.k_sub = css_dimension(XL);
    if (r.k_base != r.k_sub) {
        fail(-1, "dimension " + std::to_string(r.k_base) + " vs " + std::to_string(r.k_sub));
    }
    const auto F = sub.chain_maps();
    EchelonBasis bl(XL.n1());
    for (const auto& col : XL.delta0.dense_columns()) {
        bl.insert(col);
    }
    // 1. F1(B^1) inside B^1
    const auto bx = X.delta0.dense_columns();
    for (std::size_t v = 0; v < bx.size(); ++v) {
        if (!bl.contains(F.F1.apply(bx[v]))) {
            fail(0, "F1(delta0 e_" + std::to_string(v) + ") is not a coboundary");
            break;
        }
    }
    // 2. F1(Z^1) inside Z^1
    for (const auto& z : kernel_basis(X.delta1)) {
        if (XL.delta1.apply(F.F1.apply(z)).any()) {
            fail(1, "F1 maps a cocycle outside Z^1(X_L)");
            break;
        }
    }
    // 3. F1^{-1}(B^1(X_L)) has the dimension of B^1(X)
    {
        const auto rl = rank(XL.delta0);
        const auto joint = rank(hstack(F.F1, XL.delta0));
        const auto pre = X.n1() + rl - joint;
        if (pre != rank(X.delta0)) {
            fail(2, "preimage of B^1(X_L) has dimension " + std::to_string(pre) + ", B^1(X) has " +
                        std::to_string(rank(X.delta0)));
        }
    }
    // 4. every cocycle of X_L cleans to a lift of a cocycle of X
    try {
        for (const auto& z : kernel_basis(XL.delta1)) {
            const auto c = clean_vector(sub, z, g);
            if (!c.tilde_c1) {
                fail(3, "cleaned cocycle is not in the image of F1");
                break;
            }
            if (X.delta1.apply(*c.tilde_c1).any()) {
                fail(3, "cleaned cocycle projects outside Z^1(X)");
                break;
            }
            if (!bl.contains(c.c1_dprime + z)) {
                fail(3, "cleaning left the cohomology class");
                break;
            }
        }
    } catch (const GuardError&) {
        throw;
    } catch (const std::exception& e) {
        fail(3, std::string("cleaning failed: ") + e.what());
    }
    return r;
}

SizeClaim check_size_claim(const SubdividedComplex& sub) {
    SizeClaim c;
    const auto [lo, hi] = sub.degree_range();
    c.precondition = lo >= 2;
    c.delta_max = hi;
    c.base = {sub.X.n0(), sub.X.n1(), sub.X.n2()};
    c.sizes = {sub.XL.n0(), sub.XL.n1(), sub.XL.n2()};
    const auto L2 = sub.L * sub.L;
    for (int i = 0; i < 3; ++i) {
        if (L2 * c.base[i] > c.sizes[i]) {
            c.lower = false;
        }
        if (4 * c.sizes[i] > hi * hi * L2 * c.base[i]) {
            c.upper = false;
        }
    }
    return c;
}

}  // namespace lcf
