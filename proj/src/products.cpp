#include "lcf/products.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lcf {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<std::uint32_t> clean_subset(const std::vector<std::uint32_t>& s, const GroupTable& g, const char* name) {
    if (s.empty()) {
        throw std::invalid_argument(std::string("generator set ") + name + " is empty");
    }
    std::vector<std::uint32_t> out = s;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.back() >= g.order()) {
        throw std::invalid_argument(std::string("generator set ") + name + " has an element outside the group");
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> trivial_action(std::size_t n) {
    std::vector<std::uint32_t> id(n);
    for (std::size_t v = 0; v < n; ++v) {
        id[v] = static_cast<std::uint32_t>(v);
    }
    return {id};
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<std::uint32_t>> mul) : mul_(std::move(mul)) {
    const std::size_t n = mul_.size();
    if (n == 0 || n > 256) {
        throw std::invalid_argument("GroupTable: order must be in [1, 256]");
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (mul_[a].size() != n) {
            throw std::invalid_argument("GroupTable: row " + std::to_string(a) + " has wrong length");
        }
        for (auto v : mul_[a]) {
            if (v >= n) {
                throw std::invalid_argument("GroupTable: entry out of range in row " + std::to_string(a));
            }
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            ok = mul_[e][a] == a && mul_[a][e] == a;
        }
        if (ok) {
            id_ = static_cast<std::uint32_t>(e);
            found = true;
        }
    }
    if (!found) {
        throw std::invalid_argument("GroupTable: no identity element");
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            for (std::size_t c = 0; c < n; ++c) {
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
                    throw std::invalid_argument("GroupTable: associativity fails at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
                }
            }
        }
    }
    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        bool has = false;
        for (std::size_t b = 0; b < n && !has; ++b) {
            if (mul_[a][b] == id_ && mul_[b][a] == id_) {
                inv_[a] = static_cast<std::uint32_t>(b);
                has = true;
            }
        }
        if (!has) {
            throw std::invalid_argument("GroupTable: element " + std::to_string(a) + " has no inverse");
        }
    }
}

GroupTable GroupTable::cyclic(std::size_t n) {
    std::vector<std::vector<std::uint32_t>> m(n, std::vector<std::uint32_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            m[a][b] = static_cast<std::uint32_t>((a + b) % n);
        }
    }
    return GroupTable(std::move(m));
}

GroupTable GroupTable::dihedral(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("dihedral: n >= 1 required");
    }
    const std::size_t N = 2 * n;
    std::vector<std::vector<std::uint32_t>> m(N, std::vector<std::uint32_t>(N));
    // s^f r^k times s^f' r^k'
    for (std::size_t x = 0; x < N; ++x) {
        for (std::size_t y = 0; y < N; ++y) {
            const std::size_t f1 = x / n;
            const std::size_t k1 = x % n;
            const std::size_t f2 = y / n;
            const std::size_t k2 = y % n;
            std::size_t f = f1;
            std::size_t k = (k1 + k2) % n;
            if (f2 == 1) {
                f = 1 - f1;
                k = (k2 + n - k1) % n;
            }
            m[x][y] = static_cast<std::uint32_t>(f * n + k);
        }
    }
    return GroupTable(std::move(m));
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
    const std::size_t na = a.order();
    const std::size_t nb = b.order();
    std::vector<std::vector<std::uint32_t>> m(na * nb, std::vector<std::uint32_t>(na * nb));
    for (std::size_t x = 0; x < na * nb; ++x) {
        for (std::size_t y = 0; y < na * nb; ++y) {
            m[x][y] = static_cast<std::uint32_t>(a.mul(static_cast<std::uint32_t>(x / nb), static_cast<std::uint32_t>(y / nb)) * nb +
                                                 b.mul(static_cast<std::uint32_t>(x % nb), static_cast<std::uint32_t>(y % nb)));
        }
    }
    return GroupTable(std::move(m));
}

ActedBipartiteGraph::ActedBipartiteGraph(GroupTable g, std::size_t nl, std::size_t nr, std::vector<Entry> e,
                                         std::vector<std::vector<std::uint32_t>> al,
                                         std::vector<std::vector<std::uint32_t>> ar)
    : group(std::move(g)), n_left(nl), n_right(nr), edges(std::move(e)), act_left(std::move(al)), act_right(std::move(ar)) {
    std::sort(edges.begin(), edges.end());
    validate();
}

ActedBipartiteGraph ActedBipartiteGraph::from_parity(const SparseBitMatrix& h) {
    return from_parity(h, GroupTable::trivial(), trivial_action(h.cols()), trivial_action(h.rows()));
}

ActedBipartiteGraph ActedBipartiteGraph::from_parity(const SparseBitMatrix& h, GroupTable g,
                                                     std::vector<std::vector<std::uint32_t>> act_bits,
                                                     std::vector<std::vector<std::uint32_t>> act_checks) {
    std::vector<Entry> e;
    e.reserve(h.nnz());
    for (const auto& [r, c] : h.entries()) {
        e.emplace_back(c, r);
    }
    return {std::move(g), h.cols(), h.rows(), std::move(e), std::move(act_bits), std::move(act_checks)};
}

ActedBipartiteGraph ActedBipartiteGraph::cayley_left(const GroupTable& g, const std::vector<std::uint32_t>& a) {
    const auto A = clean_subset(a, g, "A");
    const std::size_t n = g.order();
    std::vector<Entry> e;
    for (std::uint32_t x = 0; x < n; ++x) {
        for (auto s : A) {
            e.emplace_back(x, g.mul(s, x));
        }
    }
    std::vector<std::vector<std::uint32_t>> act(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t h = 0; h < n; ++h) {
        for (std::uint32_t x = 0; x < n; ++x) {
            act[h][x] = g.mul(x, g.inv(h));
        }
    }
    return {g, n, n, std::move(e), act, act};
}

ActedBipartiteGraph ActedBipartiteGraph::cayley_right(const GroupTable& g, const std::vector<std::uint32_t>& b) {
    const auto B = clean_subset(b, g, "B");
    const std::size_t n = g.order();
    std::vector<Entry> e;
    for (std::uint32_t y = 0; y < n; ++y) {
        for (auto s : B) {
            e.emplace_back(y, g.mul(y, s));
        }
    }
    std::vector<std::vector<std::uint32_t>> act(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t h = 0; h < n; ++h) {
        for (std::uint32_t y = 0; y < n; ++y) {
            act[h][y] = g.mul(h, y);
        }
    }
    return {g, n, n, std::move(e), act, act};
}

void ActedBipartiteGraph::validate() const {
    const std::size_t order = group.order();
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            throw std::invalid_argument("acted graph: duplicate edge " + pair_str(edges[i].first, edges[i].second));
        }
    }
    for (const auto& [l, r] : edges) {
        if (l >= n_left || r >= n_right) {
            throw std::invalid_argument("acted graph: edge " + pair_str(l, r) + " out of range");
        }
    }
    auto check_side = [&](const std::vector<std::vector<std::uint32_t>>& act, std::size_t n, const char* side) {
        if (act.size() != order) {
            throw std::invalid_argument(std::string("acted graph: ") + side + " action needs one permutation per group element");
        }
        for (std::size_t g = 0; g < order; ++g) {
            if (act[g].size() != n) {
                throw std::invalid_argument(std::string("acted graph: ") + side + " permutation has wrong length");
            }
            std::vector<char> hit(n, 0);
            for (auto v : act[g]) {
                if (v >= n || hit[v]) {
                    throw std::invalid_argument(std::string("acted graph: ") + side + " action of " +
                                                std::to_string(g) + " is not a permutation");
                }
                hit[v] = 1;
            }
        }
        for (std::size_t g = 0; g < order; ++g) {
            for (std::size_t h = 0; h < order; ++h) {
                const auto gh = group.mul(static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(h));
                for (std::size_t v = 0; v < n; ++v) {
                    if (act[g][act[h][v]] != act[gh][v]) {
                        throw std::invalid_argument(std::string("acted graph: ") + side +
                                                    " action is not a homomorphism at " + pair_str(g, h));
                    }
                }
            }
            if (g != group.identity()) {
                for (std::size_t v = 0; v < n; ++v) {
                    if (act[g][v] == v) {
                        throw std::invalid_argument(std::string("acted graph: ") + side + " action is not free: " +
                                                    std::to_string(g) + " fixes " + std::to_string(v));
                    }
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (act[group.identity()][v] != v) {
                throw std::invalid_argument(std::string("acted graph: identity acts nontrivially on ") + side);
            }
        }
    };
    check_side(act_left, n_left, "left");
    check_side(act_right, n_right, "right");
    for (std::size_t g = 0; g < order; ++g) {
        for (const auto& [l, r] : edges) {
            const Entry img{act_left[g][l], act_right[g][r]};
            if (!std::binary_search(edges.begin(), edges.end(), img)) {
                throw std::invalid_argument("acted graph: edge " + pair_str(l, r) + " not invariant under " +
                                            std::to_string(g));
            }
        }
    }
}

SparseBitMatrix ActedBipartiteGraph::parity_matrix() const {
    std::vector<Entry> e;
    e.reserve(edges.size());
    for (const auto& [l, r] : edges) {
        e.emplace_back(r, l);
    }
    std::sort(e.begin(), e.end());
    return {n_right, n_left, std::move(e)};
}

ActedBipartiteGraph ActedBipartiteGraph::transposed() const {
    std::vector<Entry> e;
    e.reserve(edges.size());
    for (const auto& [l, r] : edges) {
        e.emplace_back(r, l);
    }
    return {group, n_right, n_left, std::move(e), act_right, act_left};
}

std::array<std::size_t, 4> SquareComplex::class_sizes() const {
    std::array<std::size_t, 4> s{};
    for (auto c : vclass) {
        ++s[c];
    }
    return s;
}

std::vector<std::uint32_t> SquareComplex::class_members(std::uint8_t c) const {
    std::vector<std::uint32_t> out;
    for (std::size_t v = 0; v < vclass.size(); ++v) {
        if (vclass[v] == c) {
            out.push_back(static_cast<std::uint32_t>(v));
        }
    }
    return out;
}

std::vector<std::size_t> SquareComplex::degrees() const {
    std::vector<std::size_t> d(vclass.size(), 0);
    for (const auto& [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

std::size_t SquareComplex::max_degree() const {
    const auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

void SquareComplex::normalize() {
    for (auto& [u, v] : edges) {
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

void SquareComplex::validate() const {
    const std::size_t n = vclass.size();
    for (auto c : vclass) {
        if (c > 3) {
            throw std::invalid_argument("square complex: vertex class out of range");
        }
    }
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n || u >= v) {
            throw std::invalid_argument("square complex: bad edge " + pair_str(u, v));
        }
        const unsigned x = vclass[u] ^ vclass[v];
        if (x != 1 && x != 2) {
            throw std::invalid_argument("square complex: edge " + pair_str(u, v) +
                                        " must change exactly one class coordinate");
        }
    }
    auto has_edge = [&](std::uint32_t a, std::uint32_t b) {
        const std::pair<std::uint32_t, std::uint32_t> e{std::min(a, b), std::max(a, b)};
        return std::binary_search(edges.begin(), edges.end(), e);
    };
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& q = faces[f];
        for (std::size_t c = 0; c < 4; ++c) {
            if (q[c] >= n || vclass[q[c]] != c) {
                throw std::invalid_argument("square complex: face " + std::to_string(f) + " has a corner of the wrong class");
            }
        }
        if (!has_edge(q[0], q[1]) || !has_edge(q[0], q[2]) || !has_edge(q[1], q[3]) || !has_edge(q[2], q[3])) {
            throw std::invalid_argument("square complex: face " + std::to_string(f) + " uses a missing edge");
        }
    }
}

namespace {

// Orbits of the diagonal action on V_A x V_B, one table per class (i, j), c = i + 2j.
struct ProductVertices {
    std::size_t na[2] = {0, 0};
    std::size_t nb[2] = {0, 0};
    std::array<std::vector<std::uint32_t>, 4> local;  // orbit index within class, per pair
    std::array<std::vector<std::pair<std::uint32_t, std::uint32_t>>, 4> reps;
    std::array<std::size_t, 4> offset{};

    [[nodiscard]] std::uint32_t id(int c, std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(offset[c] + local[c][a * nb[c >> 1] + b]);
    }
    [[nodiscard]] std::size_t total() const { return offset[3] + reps[3].size(); }
};

ProductVertices product_vertices(const ActedBipartiteGraph& ga, const ActedBipartiteGraph& gb) {
    if (!(ga.group == gb.group)) {
        throw std::invalid_argument("balanced product: the two graphs carry different groups");
    }
    ga.validate();
    gb.validate();
    const auto& g = ga.group;
    ProductVertices pv;
    pv.na[0] = ga.n_left;
    pv.na[1] = ga.n_right;
    pv.nb[0] = gb.n_left;
    pv.nb[1] = gb.n_right;
    const std::array<const std::vector<std::vector<std::uint32_t>>*, 2> aa{&ga.act_left, &ga.act_right};
    const std::array<const std::vector<std::vector<std::uint32_t>>*, 2> ab{&gb.act_left, &gb.act_right};
    std::size_t off = 0;
    for (int c = 0; c < 4; ++c) {
        const int i = c & 1;
        const int j = c >> 1;
        const std::size_t nA = pv.na[i];
        const std::size_t nB = pv.nb[j];
        pv.local[c].assign(nA * nB, UINT32_MAX);
        for (std::uint32_t a = 0; a < nA; ++a) {
            for (std::uint32_t b = 0; b < nB; ++b) {
                if (pv.local[c][a * nB + b] != UINT32_MAX) {
                    continue;
                }
                const auto o = static_cast<std::uint32_t>(pv.reps[c].size());
                pv.reps[c].emplace_back(a, b);
                std::size_t size = 0;
                for (std::size_t h = 0; h < g.order(); ++h) {
                    const auto ga2 = (*aa[i])[h][a];
                    const auto gb2 = (*ab[j])[h][b];
                    auto& slot = pv.local[c][ga2 * nB + gb2];
                    if (slot == UINT32_MAX) {
                        slot = o;
                        ++size;
                    }
                }
                if (size != g.order()) {
                    throw std::invalid_argument("balanced product: diagonal action is not free");
                }
            }
        }
        pv.offset[c] = off;
        off += pv.reps[c].size();
    }
    return pv;
}

std::vector<std::vector<std::uint32_t>> neighbours(const ActedBipartiteGraph& x, int side) {
    std::vector<std::vector<std::uint32_t>> nb(side == 0 ? x.n_left : x.n_right);
    for (const auto& [l, r] : x.edges) {
        if (side == 0) {
            nb[l].push_back(r);
        } else {
            nb[r].push_back(l);
        }
    }
    return nb;
}

}  // namespace

SquareComplex balanced_product_graphs(const ActedBipartiteGraph& ga, const ActedBipartiteGraph& gb) {
    const auto pv = product_vertices(ga, gb);
    SquareComplex sq;
    sq.vclass.resize(pv.total());
    sq.labels.resize(pv.total());
    for (int c = 0; c < 4; ++c) {
        for (std::size_t o = 0; o < pv.reps[c].size(); ++o) {
            sq.vclass[pv.offset[c] + o] = static_cast<std::uint8_t>(c);
            sq.labels[pv.offset[c] + o] = "[" + pair_str(pv.reps[c][o].first, pv.reps[c][o].second) + "]";
        }
    }
    for (const auto& [a0, a1] : ga.edges) {
        for (int j = 0; j < 2; ++j) {
            for (std::uint32_t b = 0; b < pv.nb[j]; ++b) {
                sq.edges.emplace_back(pv.id(2 * j, a0, b), pv.id(2 * j + 1, a1, b));
            }
        }
    }
    for (const auto& [b0, b1] : gb.edges) {
        for (int i = 0; i < 2; ++i) {
            for (std::uint32_t a = 0; a < pv.na[i]; ++a) {
                sq.edges.emplace_back(pv.id(i, a, b0), pv.id(i + 2, a, b1));
            }
        }
    }
    for (const auto& [a0, a1] : ga.edges) {
        for (const auto& [b0, b1] : gb.edges) {
            sq.faces.push_back({pv.id(V00, a0, b0), pv.id(V10, a1, b0), pv.id(V01, a0, b1), pv.id(V11, a1, b1)});
        }
    }
    sq.normalize();
    sq.validate();
    return sq;
}

ChainComplex3 balanced_product_codes(const ActedBipartiteGraph& ha, const ActedBipartiteGraph& hb) {
    const auto pv = product_vertices(ha, hb);
    const std::array<std::vector<std::vector<std::uint32_t>>, 2> nA{neighbours(ha, 0), neighbours(ha, 1)};
    const std::array<std::vector<std::vector<std::uint32_t>>, 2> nB{neighbours(hb, 0), neighbours(hb, 1)};
    const std::size_t x0 = pv.reps[V00].size();
    const std::size_t x1a = pv.reps[V10].size();
    const std::size_t x1 = x1a + pv.reps[V01].size();
    const std::size_t x2 = pv.reps[V11].size();
    auto row_of = [&](int c, std::uint32_t o) -> std::uint32_t {
        return c == V01 ? static_cast<std::uint32_t>(x1a + o) : o;
    };
    // coboundary image of the pair (a, b) in class c, reduced to orbit indices mod 2
    auto image = [&](int c, std::uint32_t a, std::uint32_t b) {
        std::map<std::pair<int, std::uint32_t>, int> acc;
        const int i = c & 1;
        const int j = c >> 1;
        if (i == 0) {
            for (auto a1 : nA[0][a]) {
                acc[{c | 1, pv.local[c | 1][a1 * pv.nb[j] + b]}] ^= 1;
            }
        }
        if (j == 0) {
            for (auto b1 : nB[0][b]) {
                acc[{c | 2, pv.local[c | 2][a * pv.nb[1] + b1]}] ^= 1;
            }
        }
        std::vector<std::pair<int, std::uint32_t>> out;
        for (const auto& [k, v] : acc) {
            if (v) {
                out.push_back(k);
            }
        }
        return out;
    };
    const auto& g = ha.group;
    const std::array<const std::vector<std::vector<std::uint32_t>>*, 2> aa{&ha.act_left, &ha.act_right};
    const std::array<const std::vector<std::vector<std::uint32_t>>*, 2> ab{&hb.act_left, &hb.act_right};
    std::vector<Entry> e0;
    std::vector<Entry> e1;
    for (int c : {V00, V10, V01}) {
        const int i = c & 1;
        const int j = c >> 1;
        for (std::uint32_t o = 0; o < pv.reps[c].size(); ++o) {
            const auto [a, b] = pv.reps[c][o];
            const auto ref = image(c, a, b);
            // every orbit member must induce the same entries
            for (std::size_t h = 0; h < g.order(); ++h) {
                if (image(c, (*aa[i])[h][a], (*ab[j])[h][b]) != ref) {
                    throw std::invalid_argument("balanced product: orbit representatives disagree at class " +
                                                std::to_string(c) + " orbit " + std::to_string(o));
                }
            }
            for (const auto& [tc, to] : ref) {
                if (c == V00) {
                    e0.emplace_back(row_of(tc, to), o);
                } else {
                    e1.emplace_back(to, row_of(c, o));
                }
            }
        }
    }
    std::sort(e0.begin(), e0.end());
    std::sort(e1.begin(), e1.end());
    ChainComplex3 x(SparseBitMatrix(x1, x0, std::move(e0)), SparseBitMatrix(x2, x1, std::move(e1)));
    for (int c = 0; c < 4; ++c) {
        const int lvl = c == V00 ? 0 : (c == V11 ? 2 : 1);
        for (const auto& [a, b] : pv.reps[c]) {
            x.labels[lvl].push_back("[" + pair_str(a, b) + "]");
        }
    }
    const auto diag = validate(x);
    if (!diag.valid) {
        throw std::logic_error("balanced product: " + diag.message);
    }
    return x;
}

ChainComplex3 hypergraph_product(const SparseBitMatrix& ha, const SparseBitMatrix& hb) {
    return balanced_product_codes(ActedBipartiteGraph::from_parity(ha), ActedBipartiteGraph::from_parity(hb.transpose()));
}

ChainComplex3 square_complex_chain(const SquareComplex& sq) {
    std::vector<std::uint32_t> idx(sq.n_vertices());
    std::array<std::uint32_t, 3> cnt{};
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t v = 0; v < sq.n_vertices(); ++v) {
            const auto c = sq.vclass[v];
            const int lvl = c == V00 ? 0 : (c == V11 ? 2 : 1);
            // V10 before V01 at level 1
            if (lvl == 1 && ((pass == 0) != (c == V10))) {
                continue;
            }
            if (lvl != 1 && pass == 1) {
                continue;
            }
            idx[v] = cnt[lvl]++;
        }
    }
    std::vector<Entry> e0;
    std::vector<Entry> e1;
    for (const auto& [u, v] : sq.edges) {
        const auto cu = sq.vclass[u];
        const auto cv = sq.vclass[v];
        if (cu == V00 || cv == V00) {
            e0.emplace_back(idx[cu == V00 ? v : u], idx[cu == V00 ? u : v]);
        } else {
            e1.emplace_back(idx[cu == V11 ? u : v], idx[cu == V11 ? v : u]);
        }
    }
    std::sort(e0.begin(), e0.end());
    std::sort(e1.begin(), e1.end());
    ChainComplex3 x(SparseBitMatrix(cnt[1], cnt[0], std::move(e0)), SparseBitMatrix(cnt[2], cnt[1], std::move(e1)));
    if (!sq.labels.empty()) {
        for (auto& l : x.labels) {
            l.clear();
        }
        x.labels[0].resize(cnt[0]);
        x.labels[1].resize(cnt[1]);
        x.labels[2].resize(cnt[2]);
        for (std::size_t v = 0; v < sq.n_vertices(); ++v) {
            const auto c = sq.vclass[v];
            const int lvl = c == V00 ? 0 : (c == V11 ? 2 : 1);
            x.labels[lvl][idx[v]] = sq.labels[v];
        }
    }
    return x;
}

SquareComplex left_right_cayley(const std::vector<std::uint32_t>& a, const GroupTable& g,
                                const std::vector<std::uint32_t>& b) {
    const auto A = clean_subset(a, g, "A");
    const auto B = clean_subset(b, g, "B");
    const auto n = static_cast<std::uint32_t>(g.order());
    SquareComplex sq;
    sq.vclass.resize(4 * n);
    sq.labels.resize(4 * n);
    const char* names[4] = {"00", "10", "01", "11"};
    for (std::uint32_t c = 0; c < 4; ++c) {
        for (std::uint32_t x = 0; x < n; ++x) {
            sq.vclass[c * n + x] = static_cast<std::uint8_t>(c);
            sq.labels[c * n + x] = std::string(names[c]) + ":" + std::to_string(x);
        }
    }
    for (std::uint32_t x = 0; x < n; ++x) {
        for (auto s : A) {
            sq.edges.emplace_back(V00 * n + x, V10 * n + g.mul(s, x));
            sq.edges.emplace_back(V01 * n + x, V11 * n + g.mul(s, x));
        }
        for (auto t : B) {
            sq.edges.emplace_back(V00 * n + x, V01 * n + g.mul(x, t));
            sq.edges.emplace_back(V10 * n + x, V11 * n + g.mul(x, t));
        }
        for (auto s : A) {
            for (auto t : B) {
                sq.faces.push_back({V00 * n + x, V10 * n + g.mul(s, x), V01 * n + g.mul(x, t),
                                    V11 * n + g.mul(g.mul(s, x), t)});
            }
        }
    }
    sq.normalize();
    sq.validate();
    return sq;
}

IsoResult check_square_iso(const SquareComplex& p, const SquareComplex& q, const std::vector<std::uint32_t>& map) {
    IsoResult r;
    auto fail = [&](std::string m) {
        r.pass = false;
        r.message = std::move(m);
        return r;
    };
    if (map.size() != p.n_vertices() || p.n_vertices() != q.n_vertices()) {
        return fail("vertex counts differ: " + std::to_string(p.n_vertices()) + " vs " + std::to_string(q.n_vertices()));
    }
    std::vector<char> hit(q.n_vertices(), 0);
    for (std::size_t v = 0; v < map.size(); ++v) {
        if (map[v] >= q.n_vertices() || hit[map[v]]) {
            return fail("vertex map is not a bijection at " + std::to_string(v));
        }
        hit[map[v]] = 1;
        if (p.vclass[v] != q.vclass[map[v]]) {
            return fail("vertex " + std::to_string(v) + " changes class");
        }
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> qe(q.edges.begin(), q.edges.end());
    if (p.edges.size() != q.edges.size()) {
        return fail("edge counts differ: " + std::to_string(p.edges.size()) + " vs " + std::to_string(q.edges.size()));
    }
    for (const auto& [u, v] : p.edges) {
        const auto a = map[u];
        const auto b = map[v];
        if (!qe.count({std::min(a, b), std::max(a, b)})) {
            return fail("edge " + pair_str(u, v) + " is not carried to an edge");
        }
    }
    if (p.faces.size() != q.faces.size()) {
        return fail("face counts differ: " + std::to_string(p.faces.size()) + " vs " + std::to_string(q.faces.size()));
    }
    std::set<std::array<std::uint32_t, 4>> qf(q.faces.begin(), q.faces.end());
    for (std::size_t f = 0; f < p.faces.size(); ++f) {
        const auto& s = p.faces[f];
        const std::array<std::uint32_t, 4> img{map[s[0]], map[s[1]], map[s[2]], map[s[3]]};
        if (!qf.count(img)) {
            return fail("face " + std::to_string(f) + " is not carried to a face");
        }
    }
    r.message = "isomorphic";
    return r;
}

std::vector<std::uint32_t> cayley_iso_map(const std::vector<std::uint32_t>& a, const GroupTable& g,
                                          const std::vector<std::uint32_t>& b) {
    const auto ga = ActedBipartiteGraph::cayley_left(g, a);
    const auto gb = ActedBipartiteGraph::cayley_right(g, b);
    const auto pv = product_vertices(ga, gb);
    std::vector<std::uint32_t> map(pv.total());
    const auto n = static_cast<std::uint32_t>(g.order());
    for (int c = 0; c < 4; ++c) {
        for (std::size_t o = 0; o < pv.reps[c].size(); ++o) {
            const auto [x, y] = pv.reps[c][o];
            map[pv.offset[c] + o] = static_cast<std::uint32_t>(c) * n + g.mul(x, y);
        }
    }
    return map;
}

IsoResult check_cayley_iso(const std::vector<std::uint32_t>& a, const GroupTable& g,
                           const std::vector<std::uint32_t>& b) {
    const auto prod = balanced_product_graphs(ActedBipartiteGraph::cayley_left(g, a), ActedBipartiteGraph::cayley_right(g, b));
    return check_square_iso(prod, left_right_cayley(a, g, b), cayley_iso_map(a, g, b));
}

ClassicalCode tanner_code(std::size_t n_vertices, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                          const ClassicalCode& local) {
    std::vector<std::vector<std::uint32_t>> inc(n_vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        if (u >= n_vertices || v >= n_vertices) {
            throw std::invalid_argument("tanner_code: edge " + std::to_string(e) + " out of range");
        }
        if (u == v) {
            throw std::invalid_argument("tanner_code: self-loop at edge " + std::to_string(e));
        }
        inc[u].push_back(static_cast<std::uint32_t>(e));
        inc[v].push_back(static_cast<std::uint32_t>(e));
    }
    for (std::size_t v = 0; v < n_vertices; ++v) {
        if (inc[v].size() != inc[0].size()) {
            throw std::invalid_argument("tanner_code: graph is not regular (vertex " + std::to_string(v) + ")");
        }
    }
    const std::size_t delta = n_vertices ? inc[0].size() : 0;
    if (local.n() != delta) {
        throw std::invalid_argument("tanner_code: local code length " + std::to_string(local.n()) +
                                    " does not match degree " + std::to_string(delta));
    }
    const std::size_t m = local.m();
    std::vector<Entry> e;
    for (std::size_t v = 0; v < n_vertices; ++v) {
        for (const auto& [r, c] : local.H.entries()) {
            e.emplace_back(static_cast<std::uint32_t>(v * m + r), inc[v][c]);
        }
    }
    std::sort(e.begin(), e.end());
    return ClassicalCode(SparseBitMatrix(n_vertices * m, edges.size(), std::move(e)));
}

}  // namespace lcf
