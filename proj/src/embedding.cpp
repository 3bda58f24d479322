#include "lcf/embedding.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "lcf/rng.hpp"

namespace lcf {

namespace {

constexpr int kFracBits = 16;
constexpr std::int64_t kOne = std::int64_t{1} << kFracBits;

__int128 pow_checked(__int128 x, std::size_t e, bool& overflow) {
    __int128 r = 1;
    const __int128 lim = (static_cast<__int128>(1) << 120);
    for (std::size_t i = 0; i < e; ++i) {
        if (x != 0 && r > lim / x) {
            overflow = true;
            return 0;
        }
        r *= x;
    }
    return r;
}

// floor of the e-th root of n
std::int64_t iroot(__int128 n, std::size_t e) {
    std::int64_t lo = 0, hi = std::int64_t{1} << 40;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        bool of = false;
        const auto p = pow_checked(mid, e, of);
        if (!of && p <= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) {
        --r;
    }
    while ((r + 1) * (r + 1) <= n) {
        ++r;
    }
    return r;
}

std::int64_t floor_div(__int128 a, __int128 b) {
    __int128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return static_cast<std::int64_t>(q);
}

// nearest integer to num / den, halves rounded up
std::int64_t round_div(__int128 num, __int128 den) { return floor_div(2 * num + den, 2 * den); }

// uniform direction scaled to radius r (fixed point)
Point sphere_point(Rng& rng, std::size_t D, std::int64_t r) {
    const std::int64_t span = std::int64_t{1} << 20;
    for (;;) {
        Point x(D);
        __int128 n2 = 0;
        for (auto& c : x) {
            c = static_cast<std::int64_t>(rng.below(2 * span + 1)) - span;
            n2 += static_cast<__int128>(c) * c;
        }
        // keep a shell so that the direction is uniform and the norm is well conditioned
        if (n2 > static_cast<__int128>(span) * span || n2 < static_cast<__int128>(span) * span / 4) {
            continue;
        }
        const auto nrm = isqrt(static_cast<std::int64_t>(n2));
        for (auto& c : x) {
            c = floor_div(static_cast<__int128>(c) * r, nrm);
        }
        return x;
    }
}

Point to_lattice(const std::vector<std::pair<std::int64_t, const Point*>>& terms, std::int64_t wsum, std::size_t D) {
    Point out(D);
    for (std::size_t k = 0; k < D; ++k) {
        __int128 s = 0;
        for (const auto& [w, p] : terms) {
            s += static_cast<__int128>(w) * (*p)[k];
        }
        out[k] = round_div(s, static_cast<__int128>(wsum) * kOne);
    }
    return out;
}

}  // namespace

double LatticeEmbedding::a() const { return std::sqrt(static_cast<double>(a_squared)); }
double EmbeddingMeasure::a() const { return std::sqrt(static_cast<double>(a_squared)); }

EmbeddingMeasure verify_embedding(const std::vector<Point>& points, const EdgeList& edges) {
    EmbeddingMeasure m;
    for (const auto& [u, v] : edges) {
        if (u >= points.size() || v >= points.size()) {
            throw std::invalid_argument("verify_embedding: edge endpoint without a point");
        }
        std::int64_t d2 = 0;
        for (std::size_t k = 0; k < points[u].size(); ++k) {
            const auto d = points[u][k] - points[v][k];
            d2 += d * d;
        }
        m.a_squared = std::max(m.a_squared, d2);
    }
    std::map<Point, std::size_t> occ;
    for (const auto& p : points) {
        ++occ[p];
    }
    for (const auto& [p, c] : occ) {
        ++m.histogram[c];
        m.b = std::max(m.b, c);
    }
    return m;
}

std::int64_t sphere_radius_fp(std::size_t n_vertices, std::size_t exponent_den) {
    if (exponent_den == 0) {
        throw std::invalid_argument("sphere_radius_fp: zero exponent");
    }
    bool of = false;
    const auto scale = pow_checked(kOne, exponent_den, of);
    if (of) {
        throw std::invalid_argument("sphere_radius_fp: dimension too large for fixed point");
    }
    return iroot(scale * static_cast<__int128>(n_vertices), exponent_den);
}

std::size_t odd_subdivision_length(std::size_t n_vertices, std::size_t D) {
    if (D < 3) {
        throw std::invalid_argument("odd_subdivision_length: D >= 3 required");
    }
    const auto r = sphere_radius_fp(n_vertices, D - 2) >> kFracBits;
    const auto L = 2 * (static_cast<std::size_t>(r) / 2) + 1;
    return std::max<std::size_t>(L, 3);
}

LatticeEmbedding embed_square(const SubdividedComplex& sub, std::size_t D, std::uint64_t seed) {
    if (D < 3) {
        throw std::invalid_argument("embed_square: D must be at least 3");
    }
    const auto& sq = sub.base;
    const std::int64_t R = sphere_radius_fp(sq.n_vertices(), D - 2);
    Rng rng(seed);
    std::vector<Point> base(sq.n_vertices());
    for (auto& p : base) {
        p = sphere_point(rng, D, R);
    }
    const auto L = static_cast<std::int64_t>(sub.L);
    LatticeEmbedding e;
    e.D = D;
    e.seed = seed;
    e.points.resize(sub.vertices.size());
    for (std::size_t id = 0; id < sub.vertices.size(); ++id) {
        const auto& x = sub.vertices[id];
        switch (x.kind) {
            case CellKind::Vertex:
                e.points[id] = to_lattice({{1, &base[x.cell]}}, 1, D);
                break;
            case CellKind::Edge: {
                const auto [u, v] = sq.edges[x.cell];
                const unsigned bit = sq.vclass[u] ^ sq.vclass[v];
                const auto lo = (sq.vclass[u] & bit) ? v : u;
                const auto hi = lo == u ? v : u;
                const std::int64_t t = bit == 1U ? x.i : x.j;
                e.points[id] = to_lattice({{L - t, &base[lo]}, {t, &base[hi]}}, L, D);
                break;
            }
            case CellKind::Face: {
                const auto& q = sq.faces[x.cell];
                const std::int64_t i = x.i, j = x.j;
                e.points[id] = to_lattice({{(L - i) * (L - j), &base[q[0]]},
                                           {i * (L - j), &base[q[1]]},
                                           {(L - i) * j, &base[q[2]]},
                                           {i * j, &base[q[3]]}},
                                          L * L, D);
                break;
            }
        }
    }
    const auto m = verify_embedding(e.points, sub.edges);
    e.a_squared = m.a_squared;
    e.b = m.b;
    return e;
}

LatticeEmbedding embed_square(const SquareComplex& g, std::size_t L, std::size_t D, std::uint64_t seed) {
    if (D < 3) {
        throw std::invalid_argument("embed_square: D must be at least 3");
    }
    return embed_square(subdivide(g, L), D, seed);
}

GraphEmbedding embed_graph(std::size_t n_vertices, const EdgeList& edges, std::size_t L, std::size_t D,
                           std::uint64_t seed) {
    if (D < 2) {
        throw std::invalid_argument("embed_graph: D must be at least 2");
    }
    if (L < 1) {
        throw std::invalid_argument("embed_graph: L must be at least 1");
    }
    const std::int64_t R = sphere_radius_fp(n_vertices, D - 1);
    Rng rng(seed);
    std::vector<Point> base(n_vertices);
    for (auto& p : base) {
        p = sphere_point(rng, D, R);
    }
    GraphEmbedding out;
    auto& e = out.embedding;
    e.D = D;
    e.seed = seed;
    for (const auto& p : base) {
        e.points.push_back(to_lattice({{1, &p}}, 1, D));
    }
    const auto l = static_cast<std::int64_t>(L);
    for (const auto& [u, v] : edges) {
        if (u >= n_vertices || v >= n_vertices) {
            throw std::invalid_argument("embed_graph: edge endpoint out of range");
        }
        std::uint32_t prev = u;
        for (std::int64_t t = 1; t < l; ++t) {
            const auto id = static_cast<std::uint32_t>(e.points.size());
            e.points.push_back(to_lattice({{l - t, &base[u]}, {t, &base[v]}}, l, D));
            out.edges.emplace_back(prev, id);
            prev = id;
        }
        out.edges.emplace_back(prev, v);
    }
    const auto m = verify_embedding(e.points, out.edges);
    e.a_squared = m.a_squared;
    e.b = m.b;
    return out;
}

std::vector<Point> points_from_grid_labels(const ChainComplex3& x, std::size_t D) {
    if (D < 2) {
        throw std::invalid_argument("points_from_grid_labels: D must be at least 2");
    }
    std::vector<Point> out;
    const std::array<std::size_t, 3> n{x.n0(), x.n1(), x.n2()};
    for (int l = 0; l < 3; ++l) {
        if (x.labels[l].size() != n[l]) {
            throw std::invalid_argument("points_from_grid_labels: complex has no grid labels");
        }
        for (const auto& s : x.labels[l]) {
            long long i = 0, j = 0;
            // balanced-product orbit labels come as "[(a,b)]"
            const char* txt = s.c_str() + (s.rfind('[', 0) == 0 ? 1 : 0);
            if (std::sscanf(txt, "(%lld,%lld)", &i, &j) != 2) {
                throw std::invalid_argument("points_from_grid_labels: label '" + s + "' is not (i,j)");
            }
            Point p(D, 0);
            p[0] = i;
            p[1] = j;
            out.push_back(p);
        }
    }
    return out;
}

StackedCode stack(const ChainComplex3& code, const std::vector<Point>& points, std::size_t D, std::size_t a) {
    if (a < 1) {
        throw std::invalid_argument("stack: a must be at least 1");
    }
    const std::size_t nv = code.n0() + code.n1() + code.n2();
    if (points.size() != nv) {
        throw std::invalid_argument("stack: one point per element of X(0), X(1), X(2) required");
    }
    std::size_t copies = 1;
    for (std::size_t k = 0; k < D; ++k) {
        copies *= a;
    }
    // cell width: bounding box plus one
    Point lo(D, INT64_MAX), hi(D, INT64_MIN);
    for (const auto& p : points) {
        if (p.size() != D) {
            throw std::invalid_argument("stack: point dimension differs from D");
        }
        for (std::size_t k = 0; k < D; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }
    StackedCode s;
    s.code = ChainComplex3(block_diag(std::vector<SparseBitMatrix>(copies, code.delta0)),
                           block_diag(std::vector<SparseBitMatrix>(copies, code.delta1)));
    const std::array<std::size_t, 3> off{0, code.n0(), code.n0() + code.n1()};
    const std::array<std::size_t, 3> n{code.n0(), code.n1(), code.n2()};
    for (int l = 0; l < 3; ++l) {
        for (std::size_t c = 0; c < copies; ++c) {
            std::size_t rest = c;
            Point shift(D);
            for (std::size_t k = 0; k < D; ++k) {
                shift[k] = static_cast<std::int64_t>(rest % a) * (hi[k] - lo[k] + 1);
                rest /= a;
            }
            for (std::size_t v = 0; v < n[l]; ++v) {
                Point p = points[off[l] + v];
                for (std::size_t k = 0; k < D; ++k) {
                    p[k] += shift[k];
                }
                s.points.push_back(std::move(p));
            }
        }
    }
    return s;
}

EdgeList tanner_edges(const ChainComplex3& x) {
    EdgeList e;
    const auto n0 = static_cast<std::uint32_t>(x.n0());
    const auto n1 = static_cast<std::uint32_t>(x.n1());
    for (const auto& [r, c] : x.delta0.entries()) {
        e.emplace_back(c, n0 + r);
    }
    for (const auto& [r, c] : x.delta1.entries()) {
        e.emplace_back(n0 + c, n0 + n1 + r);
    }
    return e;
}

std::string points_csv(const std::vector<Point>& points) {
    std::ostringstream os;
    os << "vertex";
    const std::size_t D = points.empty() ? 0 : points[0].size();
    for (std::size_t k = 0; k < D; ++k) {
        os << ",x" << k;
    }
    os << "\n";
    for (std::size_t v = 0; v < points.size(); ++v) {
        os << v;
        for (auto c : points[v]) {
            os << "," << c;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace lcf
