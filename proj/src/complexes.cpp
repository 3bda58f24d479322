#include "lcf/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lcf {

ChainComplex3::ChainComplex3(SparseBitMatrix d0, SparseBitMatrix d1) : delta0(std::move(d0)), delta1(std::move(d1)) {
    if (delta1.cols() != delta0.rows()) {
        throw std::invalid_argument("ChainComplex3: cols(delta1) = " + std::to_string(delta1.cols()) +
                                    " but rows(delta0) = " + std::to_string(delta0.rows()));
    }
}

ChainComplex3 ChainComplex3::transposed() const {
    ChainComplex3 t(delta1.transpose(), delta0.transpose());
    t.labels = {labels[2], labels[1], labels[0]};
    return t;
}

ClassicalCode::ClassicalCode(SparseBitMatrix h) : H(std::move(h)) {
    if (H.cols() < 1) {
        throw std::invalid_argument("ClassicalCode: need at least one bit");
    }
}

Diagnostics validate(const ChainComplex3& x) {
    Diagnostics d;
    d.max_row_degree0 = x.delta0.max_row_degree();
    d.max_col_degree0 = x.delta0.max_col_degree();
    d.max_row_degree1 = x.delta1.max_row_degree();
    d.max_col_degree1 = x.delta1.max_col_degree();
    // degree of an element of X(1) counts both of its maps
    std::size_t deg1 = 0;
    const auto c1 = x.delta1.col_degrees();
    for (std::size_t q = 0; q < x.n1(); ++q) {
        deg1 = std::max(deg1, x.delta0.row_degree(q) + c1[q]);
    }
    d.max_degree = std::max({d.max_col_degree0, d.max_row_degree1, deg1});
    const auto prod = x.delta1.multiply(x.delta0);
    if (!prod.is_zero()) {
        d.valid = false;
        d.witness = prod.entries().front();
        d.message = "delta1*delta0 != 0 at (X2 " + std::to_string(d.witness->first) + ", X0 " +
                    std::to_string(d.witness->second) + ")";
    } else {
        d.message = "ok";
    }
    return d;
}

std::size_t css_dimension(const ChainComplex3& x) {
    return x.n1() - rank(x.delta0) - rank(x.delta1);
}

std::size_t css_dimension_via_kernel(const ChainComplex3& x) {
    return kernel_basis(x.delta1).size() - span_rank(image_basis(x.delta0));
}

std::vector<ChainComplex3> split_components(const ChainComplex3& x) {
    const std::size_t n0 = x.n0();
    const std::size_t n1 = x.n1();
    const std::size_t n2 = x.n2();
    std::vector<std::size_t> parent(n0 + n1 + n2);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t a) {
        while (parent[a] != a) {
            a = parent[a] = parent[parent[a]];
        }
        return a;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    };
    for (const auto& [r, c] : x.delta0.entries()) {
        unite(n0 + r, c);
    }
    for (const auto& [r, c] : x.delta1.entries()) {
        unite(n0 + n1 + r, n0 + c);
    }
    // group by root, keyed by first X(1) member so output order is stable
    std::vector<std::int64_t> comp_of_root(parent.size(), -1);
    std::vector<std::array<std::vector<std::size_t>, 3>> groups;
    for (std::size_t q = 0; q < n1; ++q) {
        const auto r = find(n0 + q);
        if (comp_of_root[r] < 0) {
            comp_of_root[r] = static_cast<std::int64_t>(groups.size());
            groups.emplace_back();
        }
        groups[comp_of_root[r]][1].push_back(q);
    }
    for (std::size_t v = 0; v < n0; ++v) {
        const auto r = find(v);
        if (comp_of_root[r] >= 0) {
            groups[comp_of_root[r]][0].push_back(v);
        }
    }
    for (std::size_t f = 0; f < n2; ++f) {
        const auto r = find(n0 + n1 + f);
        if (comp_of_root[r] >= 0) {
            groups[comp_of_root[r]][2].push_back(f);
        }
    }
    std::vector<ChainComplex3> out;
    out.reserve(groups.size());
    for (const auto& g : groups) {
        out.emplace_back(x.delta0.submatrix(g[1], g[0]), x.delta1.submatrix(g[2], g[1]));
    }
    return out;
}

namespace {

void check_logicals(std::size_t k) {
    if (k == 0) {
        throw std::domain_error("k = 0: the code has no logical operators");
    }
}

std::size_t component_distance(const ChainComplex3& c, Side side, const Guards& g) {
    g.require(c.n1() <= g.distance_n, "distance search on " + std::to_string(c.n1()) + " qubits");
    if (side == Side::X) {
        return min_weight_nontrivial(kernel_basis(c.delta1), image_basis(c.delta0));
    }
    return min_weight_nontrivial(kernel_basis(c.delta0.transpose()), image_basis(c.delta1.transpose()));
}

}  // namespace

std::size_t css_distance_side(const ChainComplex3& x, Side side, const Guards& g) {
    check_logicals(css_dimension(x));
    // distance of a direct sum is the minimum over blocks that carry logicals
    std::size_t best = SIZE_MAX;
    for (const auto& c : split_components(x)) {
        if (css_dimension(c) == 0) {
            continue;
        }
        best = std::min(best, component_distance(c, side, g));
    }
    return best;
}

std::array<std::size_t, 2> css_distance(const ChainComplex3& x, const Guards& g) {
    return {css_distance_side(x, Side::X, g), css_distance_side(x, Side::Z, g)};
}

std::size_t walk_barrier(const SparseBitMatrix& h, const std::optional<std::vector<BitVector>>& witnesses,
                         const Guards& g) {
    const std::size_t n = h.cols();
    const std::size_t m = h.rows();
    g.require(n <= g.barrier_n, "energy-barrier state space 2^" + std::to_string(n));
    if (n > 40) {
        throw GuardError("energy barrier: 2^" + std::to_string(n) + " states cannot be tabulated");
    }
    const std::uint64_t total = 1ULL << n;
    // energy of every state via a Gray walk over the syndrome
    std::vector<std::uint16_t> energy(total, 0);
    {
        const auto cols = h.dense_columns();
        BitVector syn(m);
        std::uint64_t state = 0;
        std::size_t w = 0;
        gray_walk(static_cast<unsigned>(n), [&](unsigned i) {
            state ^= 1ULL << i;
            const std::size_t overlap = [&] {
                std::size_t s = 0;
                for (std::size_t k = 0; k < syn.words().size(); ++k) {
                    s += popcount64(syn.words()[k] & cols[i].words()[k]);
                }
                return s;
            }();
            w = w + cols[i].weight() - 2 * overlap;
            syn += cols[i];
            energy[state] = static_cast<std::uint16_t>(w);
        });
    }
    std::vector<std::uint64_t> wmask;
    if (witnesses) {
        for (const auto& v : *witnesses) {
            wmask.push_back(v.to_mask());
        }
    }
    auto is_target = [&](std::uint64_t c) {
        if (energy[c] != 0 || c == 0) {
            return false;
        }
        if (!witnesses) {
            return true;
        }
        return std::any_of(wmask.begin(), wmask.end(), [c](std::uint64_t wv) { return popcount64(wv & c) & 1U; });
    };
    bool any_target = false;
    for (std::uint64_t c = 1; c < total && !any_target; ++c) {
        any_target = is_target(c);
    }
    if (!any_target) {
        throw std::domain_error("energy barrier: no nontrivial codeword (k = 0)");
    }
    std::vector<std::uint64_t> seen((total + 63) / 64);
    std::vector<std::uint32_t> queue;
    queue.reserve(1024);
    auto reachable = [&](std::size_t eps) {
        std::fill(seen.begin(), seen.end(), 0);
        queue.clear();
        queue.push_back(0);
        seen[0] |= 1ULL;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint64_t s = queue[head];
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint64_t t = s ^ (1ULL << i);
                if ((seen[t >> 6] >> (t & 63)) & 1ULL) {
                    continue;
                }
                if (energy[t] > eps) {
                    continue;
                }
                if (is_target(t)) {
                    return true;
                }
                seen[t >> 6] |= 1ULL << (t & 63);
                queue.push_back(static_cast<std::uint32_t>(t));
            }
        }
        return false;
    };
    std::size_t lo = 0;
    std::size_t hi = m;  // every state is allowed at eps = m
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (reachable(mid)) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

std::size_t energy_barrier(const ChainComplex3& x, Side side, const Guards& g) {
    check_logicals(css_dimension(x));
    // a walk into one block's logical only pays that block's energy
    std::size_t best = SIZE_MAX;
    for (const auto& c : split_components(x)) {
        if (css_dimension(c) == 0) {
            continue;
        }
        std::size_t e = 0;
        if (side == Side::X) {
            e = walk_barrier(c.delta1, kernel_basis(c.delta0.transpose()), g);
        } else {
            e = walk_barrier(c.delta0.transpose(), kernel_basis(c.delta1), g);
        }
        best = std::min(best, e);
    }
    return best;
}

CodeReport measure(const ChainComplex3& x, const Guards& g) {
    CodeReport r;
    r.quantum = true;
    r.n = x.n1();
    r.k = css_dimension(x);
    r.methods["k"] = "rank";
    if (r.k == 0) {
        r.methods["d"] = "undefined (k = 0)";
        r.methods["energy"] = "undefined (k = 0)";
        return r;
    }
    try {
        const auto d = css_distance(x, g);
        r.d = {d[0], d[1]};
        r.methods["d"] = "coset-enumeration";
    } catch (const GuardError& e) {
        r.methods["d"] = std::string("skipped: ") + e.what();
    }
    try {
        r.energy = {energy_barrier(x, Side::X, g), energy_barrier(x, Side::Z, g)};
        r.methods["energy"] = "threshold-bfs";
    } catch (const GuardError& e) {
        r.methods["energy"] = std::string("skipped: ") + e.what();
    }
    return r;
}

std::size_t classical_dimension(const ClassicalCode& c) {
    return c.n() - rank(c.H);
}

std::size_t classical_distance(const ClassicalCode& c, const Guards& g) {
    g.require(c.n() <= g.classical_n, "classical distance on " + std::to_string(c.n()) + " bits");
    const auto ker = kernel_basis(c.H);
    if (ker.empty()) {
        throw std::domain_error("k = 0: distance undefined");
    }
    return min_weight_nontrivial(ker, {});
}

CodeReport classical_params(const ClassicalCode& c, const Guards& g) {
    CodeReport r;
    r.quantum = false;
    r.n = c.n();
    r.k = classical_dimension(c);
    r.methods["k"] = "rank";
    if (r.k == 0) {
        throw std::domain_error("k = 0: distance and energy barrier undefined");
    }
    r.d = {classical_distance(c, g)};
    r.methods["d"] = "codeword-enumeration";
    r.energy = {walk_barrier(c.H, std::nullopt, g)};
    r.methods["energy"] = "threshold-bfs";
    return r;
}

Rational classical_soundness(const ClassicalCode& c, const Guards& g) {
    const std::size_t n = c.n();
    const std::size_t m = c.m();
    g.require(n <= g.soundness_n, "soundness scan over 2^" + std::to_string(n));
    if (n > 40) {
        throw GuardError("soundness: 2^" + std::to_string(n) + " states cannot be tabulated");
    }
    if (m == 0 || rank(c.H) == 0) {
        throw std::domain_error("soundness vacuous: C = F2^n");
    }
    const std::uint64_t total = 1ULL << n;
    // distance to the code: multi-source BFS from all codewords
    std::vector<std::uint8_t> dist(total, 0xFF);
    std::vector<std::uint32_t> queue;
    {
        const auto ker = kernel_basis(c.H);
        std::vector<std::uint64_t> km;
        for (const auto& v : ker) {
            km.push_back(v.to_mask());
        }
        std::uint64_t cw = 0;
        dist[0] = 0;
        queue.push_back(0);
        gray_walk(static_cast<unsigned>(km.size()), [&](unsigned i) {
            cw ^= km[i];
            dist[cw] = 0;
            queue.push_back(static_cast<std::uint32_t>(cw));
        });
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint64_t s = queue[head];
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t t = s ^ (1ULL << i);
            if (dist[t] == 0xFF) {
                dist[t] = static_cast<std::uint8_t>(dist[s] + 1);
                queue.push_back(static_cast<std::uint32_t>(t));
            }
        }
    }
    // smallest |Hx| / dist(x, C), via a Gray walk over the syndrome weight
    const auto cols = c.H.dense_columns();
    BitVector syn(m);
    std::size_t w = 0;
    std::uint64_t x = 0;
    std::int64_t best_num = -1;
    std::int64_t best_den = 1;
    gray_walk(static_cast<unsigned>(n), [&](unsigned i) {
        x ^= 1ULL << i;
        std::size_t overlap = 0;
        for (std::size_t k = 0; k < syn.words().size(); ++k) {
            overlap += popcount64(syn.words()[k] & cols[i].words()[k]);
        }
        w = w + cols[i].weight() - 2 * overlap;
        syn += cols[i];
        const std::int64_t dd = dist[x];
        if (dd == 0) {
            return;
        }
        const auto ww = static_cast<std::int64_t>(w);
        if (best_num < 0 || ww * best_den < best_num * dd) {
            best_num = ww;
            best_den = dd;
        }
    });
    return Rational(static_cast<std::int64_t>(n) * best_num, static_cast<std::int64_t>(m) * best_den);
}

namespace {

struct SmallSetSetup {
    std::vector<std::uint64_t> img;     // image of each witness candidate, sorted by candidate weight
    std::vector<std::size_t> cand_w;    // candidate weights (ascending)
    std::vector<std::uint64_t> check;   // check columns: state bit -> violated-check mask
    std::size_t n = 0;                  // state length
    std::size_t wmax = 0;               // largest state weight considered
};

SmallSetSetup small_set_setup(const ChainComplex3& x, const Rational& alpha, ExpansionSide side, const Guards& g) {
    SmallSetSetup s;
    const SparseBitMatrix A = side == ExpansionSide::Coboundary ? x.delta0 : x.delta1.transpose();
    const SparseBitMatrix C = side == ExpansionSide::Coboundary ? x.delta1 : x.delta0.transpose();
    s.n = x.n1();
    const std::size_t nw = A.cols();
    g.require(s.n <= g.expansion_n, "small-set expansion outer enumeration over " + std::to_string(s.n) + " bits");
    g.require(nw <= g.expansion_n, "small-set expansion inner enumeration over " + std::to_string(nw) + " bits");
    if (s.n > 64 || C.rows() > 64 || nw > 40) {
        throw GuardError("small-set expansion: instance beyond 64-bit masks");
    }
    const auto acols = A.column_masks();
    std::vector<std::pair<std::size_t, std::uint64_t>> cand;
    cand.reserve(std::size_t{1} << nw);
    cand.emplace_back(0, 0);
    std::uint64_t code = 0;
    std::uint64_t im = 0;
    gray_walk(static_cast<unsigned>(nw), [&](unsigned i) {
        code ^= 1ULL << i;
        im ^= acols[i];
        cand.emplace_back(popcount64(code), im);
    });
    std::stable_sort(cand.begin(), cand.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [w, v] : cand) {
        s.cand_w.push_back(w);
        s.img.push_back(v);
    }
    s.check = C.column_masks();
    if (alpha < Rational(0)) {
        throw std::invalid_argument("small-set expansion: alpha must be non-negative");
    }
    const Rational lim = alpha * Rational(static_cast<std::int64_t>(s.n));
    s.wmax = static_cast<std::size_t>(lim.num() / lim.den());
    s.wmax = std::min(s.wmax, s.n);
    return s;
}

// Visits all states of weight 1..wmax in weight order; f returns false to stop.
template <class F>
void for_small_sets(std::size_t n, std::size_t wmax, F&& f) {
    for (std::size_t w = 1; w <= wmax; ++w) {
        std::uint64_t v = (w == 64) ? ~0ULL : ((1ULL << w) - 1);
        const std::uint64_t limit = n == 64 ? ~0ULL : (1ULL << n);
        while (true) {
            if (!f(v, w)) {
                return;
            }
            // next permutation of the same weight
            const std::uint64_t t = v | (v - 1);
            const std::uint64_t nx = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
            if (nx >= limit || nx <= v) {
                break;
            }
            v = nx;
        }
    }
}

std::size_t syndrome_weight(const std::vector<std::uint64_t>& check, std::uint64_t c) {
    std::uint64_t syn = 0;
    while (c) {
        syn ^= check[__builtin_ctzll(c)];
        c &= c - 1;
    }
    return popcount64(syn);
}

}  // namespace

SmallSetResult check_small_set_expansion(const ChainComplex3& x, const Rational& alpha, const Rational& beta,
                                         const Rational& gamma, ExpansionSide side, const Guards& g) {
    const auto s = small_set_setup(x, alpha, side, g);
    SmallSetResult res;
    for_small_sets(s.n, s.wmax, [&](std::uint64_t c1, std::size_t w) {
        ++res.checked;
        const auto syn = static_cast<std::int64_t>(syndrome_weight(s.check, c1));
        bool ok = false;
        for (std::size_t j = 0; j < s.img.size(); ++j) {
            if (!leq_scaled(gamma, static_cast<std::int64_t>(s.cand_w[j]), static_cast<std::int64_t>(w))) {
                break;
            }
            if (leq_scaled(beta, popcount64(c1 ^ s.img[j]), syn)) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            res.pass = false;
            res.witness = BitVector::from_mask(s.n, c1);
            return false;
        }
        return true;
    });
    return res;
}

std::optional<Rational> small_set_max_beta(const ChainComplex3& x, const Rational& alpha, const Rational& gamma,
                                           ExpansionSide side, const Guards& g) {
    const auto s = small_set_setup(x, alpha, side, g);
    std::optional<Rational> best;
    for_small_sets(s.n, s.wmax, [&](std::uint64_t c1, std::size_t w) {
        std::size_t r = SIZE_MAX;
        for (std::size_t j = 0; j < s.img.size(); ++j) {
            if (!leq_scaled(gamma, static_cast<std::int64_t>(s.cand_w[j]), static_cast<std::int64_t>(w))) {
                break;
            }
            r = std::min<std::size_t>(r, popcount64(c1 ^ s.img[j]));
        }
        if (r == 0) {
            return true;  // c1 is a small coboundary: no constraint on beta
        }
        const Rational cand(static_cast<std::int64_t>(syndrome_weight(s.check, c1)), static_cast<std::int64_t>(r));
        if (!best || cand < *best) {
            best = cand;
        }
        return true;
    });
    return best;
}

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) {
    if (e < 0) {
        throw std::invalid_argument("bpt_bounds: negative exponent");
    }
    __int128 r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        r *= b;
        if (r > static_cast<__int128>(INT64_MAX)) {
            throw std::overflow_error("bpt_bounds: value overflows 64 bits");
        }
    }
    return static_cast<std::int64_t>(r);
}

}  // namespace

BptBounds bpt_bounds(std::int64_t L, std::int64_t D, std::int64_t r, BoundKind kind) {
    if (L < 1 || D < 1 || r < 1) {
        throw std::invalid_argument("bpt_bounds: L, D, r must be positive");
    }
    BptBounds b;
    b.kind = kind;
    b.L = L;
    b.D = D;
    b.r = r;
    if (kind == BoundKind::Quantum) {
        if (D < 2) {
            throw std::invalid_argument("bpt_bounds: quantum bounds need D >= 2");
        }
        if (L < 2 * (r - 1) * (r - 1)) {
            throw std::invalid_argument("bpt_bounds: precondition L >= 2(r-1)^2 violated (L = " + std::to_string(L) +
                                        ", 2(r-1)^2 = " + std::to_string(2 * (r - 1) * (r - 1)) + ")");
        }
        b.d_max = r * ipow(L, D - 1);
        b.energy_max = 6 * r * r * ipow(L, D - 2);
    } else {
        b.d_max = ipow(L, D);
        b.energy_max = r * ipow(L, D - 1);
    }
    return b;
}

double BptBounds::k_max(double d) const {
    const double Ld = std::pow(static_cast<double>(L), static_cast<double>(D));
    if (kind == BoundKind::Quantum) {
        const double base = d / (2.0 * static_cast<double>(D * r));
        return 2.0 * static_cast<double>(D * r * r) * Ld / std::pow(base, 2.0 / static_cast<double>(D - 1));
    }
    return static_cast<double>(D * r) * Ld / std::pow(d, 1.0 / static_cast<double>(D));
}

BptCheck check_bpt(const CodeReport& rep, const BptBounds& b) {
    BptCheck c;
    for (auto d : rep.d) {
        c.d_ok = c.d_ok && static_cast<std::int64_t>(d) <= b.d_max;
    }
    for (auto e : rep.energy) {
        c.energy_ok = c.energy_ok && static_cast<std::int64_t>(e) <= b.energy_max;
    }
    if (!rep.d.empty()) {
        const auto dmin = *std::min_element(rep.d.begin(), rep.d.end());
        // relative slack only absorbs floating-point rounding of the real-valued bound
        c.k_ok = static_cast<double>(rep.k) <= b.k_max(static_cast<double>(dmin)) * (1.0 + 1e-12);
    }
    return c;
}

}  // namespace lcf

namespace lcf {

SparseBitMatrix repetition_parity(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("repetition_parity: n >= 1 required");
    }
    std::vector<Entry> e;
    for (std::size_t r = 0; r + 1 < n; ++r) {
        e.emplace_back(r, r);
        e.emplace_back(r, r + 1);
    }
    return {n - 1, n, std::move(e)};
}

SparseBitMatrix cyclic_repetition_parity(std::size_t n) {
    if (n < 3) {
        throw std::invalid_argument("cyclic_repetition_parity: n >= 3 required");
    }
    std::vector<Entry> e;
    for (std::size_t r = 0; r < n; ++r) {
        e.emplace_back(r, r);
        e.emplace_back(r, (r + 1) % n);
    }
    return {n, n, std::move(e)};
}

ChainComplex3 surface_code(std::size_t L) {
    if (L < 2 || L % 2 != 0) {
        throw std::invalid_argument("surface_code: L must be even and >= 2");
    }
    const std::size_t w = L + 1;
    std::vector<std::int64_t> idx(w * w, -1);
    std::array<std::size_t, 3> count{};
    auto level = [](std::size_t i, std::size_t j) {
        if (i % 2 == j % 2) {
            return 1;
        }
        return i % 2 == 0 ? 0 : 2;
    };
    ChainComplex3 x;
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            const int l = level(i, j);
            idx[i * w + j] = static_cast<std::int64_t>(count[l]++);
            x.labels[l].push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    std::vector<Entry> e0;
    std::vector<Entry> e1;
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            const int l = level(i, j);
            if (l == 1) {
                continue;
            }
            const std::array<std::pair<int, int>, 4> nb{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
            for (const auto& [di, dj] : nb) {
                const auto a = static_cast<std::int64_t>(i) + di;
                const auto b = static_cast<std::int64_t>(j) + dj;
                if (a < 0 || b < 0 || a >= static_cast<std::int64_t>(w) || b >= static_cast<std::int64_t>(w)) {
                    continue;
                }
                const auto q = static_cast<std::uint32_t>(idx[a * w + b]);
                const auto c = static_cast<std::uint32_t>(idx[i * w + j]);
                if (l == 0) {
                    e0.emplace_back(q, c);
                } else {
                    e1.emplace_back(c, q);
                }
            }
        }
    }
    std::sort(e0.begin(), e0.end());
    std::sort(e1.begin(), e1.end());
    auto labels = x.labels;
    x = ChainComplex3(SparseBitMatrix(count[1], count[0], std::move(e0)), SparseBitMatrix(count[2], count[1], std::move(e1)));
    x.labels = std::move(labels);
    return x;
}

ChainComplex3 from_classical(const ClassicalCode& c) {
    return {SparseBitMatrix(c.n(), 0), c.H};
}

}  // namespace lcf
