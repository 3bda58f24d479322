#include "lcf/generalized.hpp"

#include <algorithm>
#include <array>

#include "lcf/rng.hpp"

namespace lcf {

BoundaryComplex::BoundaryComplex(std::vector<std::size_t> ni, std::vector<std::size_t> nb, std::vector<SparseBitMatrix> d,
                                 std::size_t L_)
    : L(L_), n_int(std::move(ni)), n_bd(std::move(nb)), delta(std::move(d)) {
    if (n_int.size() < 2 || n_bd.size() != n_int.size() || delta.size() + 1 != n_int.size()) {
        throw std::invalid_argument("BoundaryComplex: inconsistent level counts");
    }
    if (n_bd[0] != 0) {
        throw std::invalid_argument("BoundaryComplex: level 0 has no boundary");
    }
    for (std::size_t i = 0; i < delta.size(); ++i) {
        if (delta[i].cols() != n_int[i] || delta[i].rows() != n_int[i + 1] + n_bd[i + 1]) {
            throw std::invalid_argument("BoundaryComplex: delta" + std::to_string(i) + " has the wrong shape");
        }
    }
}

SparseBitMatrix BoundaryComplex::interior(std::size_t i) const {
    std::vector<Entry> e;
    for (const auto& en : delta[i].entries()) {
        if (en.first < n_int[i + 1]) {
            e.push_back(en);
        }
    }
    return {n_int[i + 1], n_int[i], std::move(e)};
}

SparseBitMatrix BoundaryComplex::boundary(std::size_t i) const {
    std::vector<Entry> e;
    const auto off = static_cast<std::uint32_t>(n_int[i + 1]);
    for (const auto& [r, c] : delta[i].entries()) {
        if (r >= off) {
            e.emplace_back(r - off, c);
        }
    }
    return {n_bd[i + 1], n_int[i], std::move(e)};
}

void BoundaryComplex::validate() const {
    if (interior(0).apply(BitVector::ones(n_int[0])).any()) {
        throw std::logic_error("BoundaryComplex: interior delta0 does not vanish on the augmentation");
    }
    for (std::size_t i = 0; i + 1 < delta.size(); ++i) {
        if (!interior(i + 1).multiply(interior(i)).is_zero()) {
            throw std::logic_error("BoundaryComplex: interior maps fail delta delta = 0 at level " + std::to_string(i));
        }
    }
}

BoundaryComplex generalized_repetition(std::size_t L, std::size_t Delta) {
    if (L < 3 || L % 2 == 0) {
        throw std::invalid_argument("generalized_repetition: L must be odd and >= 3");
    }
    if (Delta < 2) {
        throw std::invalid_argument("generalized_repetition: Delta >= 2 required");
    }
    const std::size_t h = (L - 1) / 2;
    const std::size_t n0 = Delta * h + 1;
    const std::size_t n1 = Delta * h;
    std::vector<Entry> e;
    auto bit = [&](std::size_t b, std::size_t t) { return static_cast<std::uint32_t>(t == 0 ? 0 : 1 + b * h + t - 1); };
    for (std::size_t b = 0; b < Delta; ++b) {
        for (std::size_t t = 1; t <= h; ++t) {
            const auto r = static_cast<std::uint32_t>(b * h + t - 1);
            e.emplace_back(r, bit(b, t - 1));
            e.emplace_back(r, bit(b, t));
        }
        e.emplace_back(static_cast<std::uint32_t>(n1 + b), bit(b, h));
    }
    std::sort(e.begin(), e.end());
    BoundaryComplex y({n0, n1}, {0, Delta}, {SparseBitMatrix(n1 + Delta, n0, std::move(e))}, L);
    y.validate();
    return y;
}

BoundaryComplex tensor(const BoundaryComplex& a, const BoundaryComplex& b) {
    if (a.levels() != 2 || b.levels() != 2) {
        throw std::invalid_argument("tensor: both factors must have two levels");
    }
    const std::size_t A0 = a.n_int[0], A1 = a.n_int[1], Ab = a.n_bd[1];
    const std::size_t B0 = b.n_int[0], B1 = b.n_int[1], Bb = b.n_bd[1];
    const auto ca = a.delta[0].column_lists();
    const auto cb = b.delta[0].column_lists();
    // level 1: [A1 x B0 | A0 x B1] interior, [Ab x B0 | A0 x Bb] boundary
    const std::size_t n1i = A1 * B0 + A0 * B1;
    const std::size_t n1b = Ab * B0 + A0 * Bb;
    // level 2: A1 x B1 interior, [Ab x B1 | A1 x Bb | Ab x Bb] boundary
    const std::size_t n2i = A1 * B1;
    const std::size_t n2b = Ab * B1 + A1 * Bb + Ab * Bb;
    auto u = [](std::size_t v) { return static_cast<std::uint32_t>(v); };
    std::vector<Entry> e0;
    for (std::size_t x = 0; x < A0; ++x) {
        for (std::size_t y = 0; y < B0; ++y) {
            const auto col = u(x * B0 + y);
            for (auto r : ca[x]) {
                e0.emplace_back(r < A1 ? u(r * B0 + y) : u(n1i + (r - A1) * B0 + y), col);
            }
            for (auto c : cb[y]) {
                e0.emplace_back(c < B1 ? u(A1 * B0 + x * B1 + c) : u(n1i + Ab * B0 + x * Bb + (c - B1)), col);
            }
        }
    }
    std::vector<Entry> e1;
    for (std::size_t x1 = 0; x1 < A1; ++x1) {
        for (std::size_t y = 0; y < B0; ++y) {
            const auto col = u(x1 * B0 + y);
            for (auto c : cb[y]) {
                e1.emplace_back(c < B1 ? u(x1 * B1 + c) : u(n2i + Ab * B1 + x1 * Bb + (c - B1)), col);
            }
        }
    }
    for (std::size_t x = 0; x < A0; ++x) {
        for (std::size_t y1 = 0; y1 < B1; ++y1) {
            const auto col = u(A1 * B0 + x * B1 + y1);
            for (auto r : ca[x]) {
                e1.emplace_back(r < A1 ? u(r * B1 + y1) : u(n2i + (r - A1) * B1 + y1), col);
            }
        }
    }
    std::sort(e0.begin(), e0.end());
    std::sort(e1.begin(), e1.end());
    BoundaryComplex y({A0 * B0, n1i, n2i}, {0, n1b, n2b},
                      {SparseBitMatrix(n1i + n1b, A0 * B0, std::move(e0)), SparseBitMatrix(n2i + n2b, n1i, std::move(e1))},
                      a.L == b.L ? a.L : 0);
    y.validate();
    return y;
}

BoundaryComplex generalized_surface(std::size_t L, std::size_t Delta1, std::size_t Delta2) {
    return tensor(generalized_repetition(L, Delta1), generalized_repetition(L, Delta2));
}

SurfaceConstants surface_constants(std::size_t L) {
    if (L == 0) {
        throw std::invalid_argument("surface_constants: the complex carries no size parameter");
    }
    const auto l = static_cast<std::int64_t>(L);
    return {Rational(1, l), Rational(l - 1, 4 * l), Rational(2, 3 * l), Rational(1, 2)};
}

namespace {

std::vector<std::uint64_t> masks_of(const SparseBitMatrix& m, const char* what) {
    if (m.rows() > 64) {
        throw GuardError(std::string(what) + ": " + std::to_string(m.rows()) + " targets exceed the 64-bit masks");
    }
    return m.column_masks();
}

struct LevelMasks {
    std::size_t n = 0;
    std::vector<std::uint64_t> img_int;  // per f_hat coordinate
    std::vector<std::uint64_t> img_bd;
    std::vector<std::uint64_t> basis;  // generators of B^level inside F2^{Y(level)}
};

LevelMasks level_masks(const BoundaryComplex& y, std::size_t level) {
    if (level + 1 >= y.levels()) {
        throw std::invalid_argument("boundary expansion: level " + std::to_string(level) + " has no coboundary");
    }
    LevelMasks lm;
    lm.n = y.n_int[level];
    if (lm.n > 64) {
        throw GuardError("boundary expansion: level has more than 64 interior elements");
    }
    lm.img_int = masks_of(y.interior(level), "boundary expansion");
    lm.img_bd = masks_of(y.boundary(level), "boundary expansion");
    if (level == 0) {
        lm.basis.push_back(lm.n == 64 ? ~0ULL : ((1ULL << lm.n) - 1));
    } else {
        lm.basis = masks_of(y.interior(level - 1), "boundary expansion");
    }
    return lm;
}

// Fully reduced echelon form over u64 masks; returns rows, pivot per row.
std::pair<std::vector<std::uint64_t>, std::vector<int>> reduce_basis(std::vector<std::uint64_t> v) {
    std::vector<std::uint64_t> rows;
    std::vector<int> piv;
    for (auto x : v) {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if ((x >> piv[k]) & 1ULL) {
                x ^= rows[k];
            }
        }
        if (!x) {
            continue;
        }
        const int p = __builtin_ctzll(x);
        for (auto& r : rows) {
            if ((r >> p) & 1ULL) {
                r ^= x;
            }
        }
        rows.push_back(x);
        piv.push_back(p);
    }
    return {rows, piv};
}

std::uint64_t bd_of(const std::vector<std::uint64_t>& img, std::uint64_t f) {
    std::uint64_t out = 0;
    while (f) {
        out ^= img[__builtin_ctzll(f)];
        f &= f - 1;
    }
    return out;
}

// Per-coset data needed to decide the definition on every member.
struct CosetRecord {
    std::uint64_t rep = 0;  // a minimum-weight member
    unsigned s = 0;         // |delta f_hat|_int, constant on the coset
    unsigned wmin = 0;
    unsigned bmin = 0;      // least boundary weight among minimum-weight members
};

template <class F>
void for_each_record(const LevelMasks& lm, const Guards& g, F&& visit) {
    g.require(lm.n <= g.expansion_n, "boundary expansion enumeration over 2^" + std::to_string(lm.n));
    if (lm.n > 40) {
        throw GuardError("boundary expansion: 2^" + std::to_string(lm.n) + " cannot be enumerated");
    }
    auto [rows, piv] = reduce_basis(lm.basis);
    const std::size_t r = rows.size();
    const std::size_t free = lm.n - r;
    if (free <= 20) {
        // label cosets by the non-pivot coordinates of the reduced form
        std::vector<int> comp(lm.n, -1);
        std::uint64_t pivmask = 0;
        for (auto p : piv) {
            pivmask |= 1ULL << p;
        }
        int next = 0;
        for (std::size_t i = 0; i < lm.n; ++i) {
            if (!((pivmask >> i) & 1ULL)) {
                comp[i] = next++;
            }
        }
        auto label_of = [&](std::uint64_t x) {
            for (std::size_t k = 0; k < r; ++k) {
                if ((x >> piv[k]) & 1ULL) {
                    x ^= rows[k];
                }
            }
            std::uint32_t lab = 0;
            while (x) {
                lab |= 1U << comp[__builtin_ctzll(x)];
                x &= x - 1;
            }
            return lab;
        };
        std::vector<std::uint32_t> lab(lm.n);
        for (std::size_t i = 0; i < lm.n; ++i) {
            lab[i] = label_of(1ULL << i);
        }
        std::vector<CosetRecord> table(std::size_t{1} << free);
        std::vector<char> seen(table.size(), 0);
        std::uint64_t f = 0, ii = 0, bb = 0;
        std::uint32_t label = 0;
        auto consider = [&] {
            const unsigned w = popcount64(f);
            const unsigned b = popcount64(bb);
            auto& rec = table[label];
            if (!seen[label]) {
                seen[label] = 1;
                rec = {f, popcount64(ii), w, b};
            } else if (w < rec.wmin || (w == rec.wmin && b < rec.bmin)) {
                rec.rep = f;
                rec.wmin = w;
                rec.bmin = b;
            }
        };
        consider();
        gray_walk(static_cast<unsigned>(lm.n), [&](unsigned i) {
            f ^= 1ULL << i;
            ii ^= lm.img_int[i];
            bb ^= lm.img_bd[i];
            label ^= lab[i];
            consider();
        });
        for (const auto& rec : table) {
            visit(rec, rec.wmin);
        }
        return;
    }
    if (r > 12) {
        throw GuardError("boundary expansion: coset space too large for exhaustive search");
    }
    // small B: scan the coset of every f_hat
    std::vector<std::uint64_t> span{0};
    std::vector<std::uint64_t> span_bd{0};
    for (auto row : rows) {
        const auto sz = span.size();
        const auto rb = bd_of(lm.img_bd, row);
        for (std::size_t k = 0; k < sz; ++k) {
            span.push_back(span[k] ^ row);
            span_bd.push_back(span_bd[k] ^ rb);
        }
    }
    std::uint64_t f = 0, ii = 0, bb = 0;
    auto consider = [&] {
        CosetRecord rec{f, popcount64(ii), 64, 64};
        for (std::size_t k = 0; k < span.size(); ++k) {
            const unsigned wk = popcount64(f ^ span[k]);
            const unsigned bk = popcount64(bb ^ span_bd[k]);
            if (wk < rec.wmin || (wk == rec.wmin && bk < rec.bmin)) {
                rec.wmin = wk;
                rec.bmin = bk;
                rec.rep = f ^ span[k];
            }
        }
        // every member carries its coset data, so the hardest member decides
        visit(rec, rec.wmin);
    };
    consider();
    gray_walk(static_cast<unsigned>(lm.n), [&](unsigned i) {
        f ^= 1ULL << i;
        ii ^= lm.img_int[i];
        bb ^= lm.img_bd[i];
        consider();
    });
}

}  // namespace

namespace {

// Exact decision for one f_hat given the weights of its coset that matter.
struct Decider {
    Rational beta, eta;
    // largest admissible |f| and boundary weight for syndrome s
    [[nodiscard]] std::int64_t kmax(unsigned s, unsigned w) const {
        if (beta.num() == 0) {
            return w;
        }
        return std::min<std::int64_t>(w, static_cast<std::int64_t>(s) * beta.den() / beta.num());
    }
    [[nodiscard]] std::int64_t bmax(unsigned s) const {
        if (eta.num() == 0) {
            return INT64_MAX;
        }
        return static_cast<std::int64_t>(s) * eta.den() / eta.num();
    }
};

// Frontier DP over g in F2^{Y(level-1)}: f = f_hat + delta g on the interior of the level.
class FrontierDP {
public:
    FrontierDP(const BoundaryComplex& y, std::size_t level) {
        const auto d_prev = y.interior(level - 1);  // |Y(l)| x |Y(l-1)|
        nvar_ = d_prev.cols();
        const auto bdm = y.boundary(level);         // boundary of level + 1 x |Y(l)|
        const std::size_t n = d_prev.rows();
        for (std::size_t e = 0; e < n; ++e) {
            Item it;
            it.vars = d_prev.row(e);
            it.weight = true;
            it.fhat_support = {static_cast<std::uint32_t>(e)};
            items_.push_back(it);
        }
        for (std::size_t c = 0; c < bdm.rows(); ++c) {
            Item it;
            it.weight = false;
            it.fhat_support = bdm.row(c);
            std::vector<std::uint32_t> acc;
            for (auto e : it.fhat_support) {
                for (auto v : d_prev.row(e)) {
                    acc.push_back(v);
                }
            }
            std::sort(acc.begin(), acc.end());
            // keep variables of odd multiplicity
            for (std::size_t i = 0; i < acc.size();) {
                std::size_t j = i;
                while (j < acc.size() && acc[j] == acc[i]) {
                    ++j;
                }
                if ((j - i) & 1U) {
                    it.vars.push_back(acc[i]);
                }
                i = j;
            }
            items_.push_back(it);
        }
        // active variables after each step and the items closing there
        std::vector<std::int64_t> last_use(nvar_, -1);
        closing_.assign(nvar_, {});
        for (std::size_t k = 0; k < items_.size(); ++k) {
            const auto& it = items_[k];
            if (it.vars.empty()) {
                constants_.push_back(k);
                continue;
            }
            const auto mx = *std::max_element(it.vars.begin(), it.vars.end());
            closing_[mx].push_back(k);
            for (auto v : it.vars) {
                last_use[v] = std::max<std::int64_t>(last_use[v], mx);
            }
        }
        active_.assign(nvar_ + 1, {});
        for (std::size_t t = 0; t < nvar_; ++t) {
            for (std::size_t v = 0; v <= t; ++v) {
                if (last_use[v] > static_cast<std::int64_t>(t)) {
                    active_[t + 1].push_back(static_cast<std::uint32_t>(v));
                }
            }
            if (active_[t + 1].size() > 18) {
                throw GuardError("frontier DP: frontier wider than 18 variables");
            }
        }
        // per step: position masks of closing items over ext = active_[t] + {t}
        masks_.assign(nvar_, {});
        proj_.assign(nvar_, {});
        for (std::size_t t = 0; t < nvar_; ++t) {
            std::vector<std::uint32_t> ext = active_[t];
            ext.push_back(static_cast<std::uint32_t>(t));
            auto pos = [&](std::uint32_t v) {
                return static_cast<unsigned>(std::find(ext.begin(), ext.end(), v) - ext.begin());
            };
            for (auto k : closing_[t]) {
                std::uint32_t m = 0;
                for (auto v : items_[k].vars) {
                    m |= 1U << pos(v);
                }
                masks_[t].push_back(m);
            }
            std::vector<unsigned> keep;
            for (auto v : active_[t + 1]) {
                keep.push_back(pos(v));
            }
            proj_[t].resize(std::size_t{1} << ext.size());
            for (std::uint32_t st = 0; st < proj_[t].size(); ++st) {
                std::uint32_t o = 0;
                for (std::size_t q = 0; q < keep.size(); ++q) {
                    o |= ((st >> keep[q]) & 1U) << q;
                }
                proj_[t][st] = o;
            }
        }
    }

    // True if some g gives |f| <= kmax and boundary weight <= bmax.
    bool feasible(std::uint64_t fhat, std::int64_t kmax, std::int64_t bmax) const {
        if (kmax < 0) {
            return false;
        }
        const auto K = static_cast<std::size_t>(kmax);
        const unsigned BINF = 255;
        std::vector<char> cst(items_.size());
        for (std::size_t k = 0; k < items_.size(); ++k) {
            unsigned p = 0;
            for (auto e : items_[k].fhat_support) {
                p ^= (fhat >> e) & 1U;
            }
            cst[k] = static_cast<char>(p);
        }
        unsigned w0 = 0, b0 = 0;
        for (auto k : constants_) {
            if (cst[k]) {
                (items_[k].weight ? w0 : b0) += 1;
            }
        }
        if (w0 > K) {
            return false;
        }
        std::vector<std::uint8_t> cur((K + 1), BINF);
        cur[w0] = static_cast<std::uint8_t>(std::min<unsigned>(b0, 254));
        std::size_t nstates = 1;
        std::vector<std::uint8_t> nxt;
        for (std::size_t t = 0; t < nvar_; ++t) {
            const std::size_t next_states = std::size_t{1} << active_[t + 1].size();
            nxt.assign(next_states * (K + 1), BINF);
            const auto nold = static_cast<unsigned>(active_[t].size());
            for (std::size_t st = 0; st < nstates; ++st) {
                for (std::uint32_t x = 0; x < 2; ++x) {
                    const std::uint32_t ext = static_cast<std::uint32_t>(st) | (x << nold);
                    unsigned dw = 0, db = 0;
                    for (std::size_t q = 0; q < masks_[t].size(); ++q) {
                        const unsigned val = (popcount64(ext & masks_[t][q]) & 1U) ^ static_cast<unsigned>(cst[closing_[t][q]]);
                        if (val) {
                            (items_[closing_[t][q]].weight ? dw : db) += 1;
                        }
                    }
                    const std::size_t to = proj_[t][ext];
                    const std::uint8_t* src = &cur[st * (K + 1)];
                    std::uint8_t* dst = &nxt[to * (K + 1)];
                    for (std::size_t w = 0; w + dw <= K; ++w) {
                        if (src[w] == BINF) {
                            continue;
                        }
                        const unsigned nb = std::min<unsigned>(254, src[w] + db);
                        if (nb > bmax) {
                            continue;
                        }
                        if (nb < dst[w + dw]) {
                            dst[w + dw] = static_cast<std::uint8_t>(nb);
                        }
                    }
                }
            }
            cur.swap(nxt);
            nstates = next_states;
        }
        for (std::size_t w = 0; w <= K; ++w) {
            if (cur[w] != BINF && static_cast<std::int64_t>(cur[w]) <= bmax) {
                return true;
            }
        }
        return false;
    }

private:
    struct Item {
        std::vector<std::uint32_t> vars;  // variables with odd multiplicity
        std::vector<std::uint32_t> fhat_support;
        bool weight = true;  // false: boundary check
    };
    std::size_t nvar_ = 0;
    std::vector<Item> items_;
    std::vector<std::size_t> constants_;
    std::vector<std::vector<std::size_t>> closing_;
    std::vector<std::vector<std::uint32_t>> active_;
    std::vector<std::vector<std::uint32_t>> masks_;
    std::vector<std::vector<std::uint32_t>> proj_;
};

}  // namespace

ExpansionResult check_boundary_expansion(const BoundaryComplex& y, std::size_t level, const Rational& beta,
                                         const Rational& eta, const std::optional<SampledMode>& mode, const Guards& g) {
    if (beta < Rational(0) || eta < Rational(0)) {
        throw std::invalid_argument("boundary expansion: beta and eta must be non-negative");
    }
    const auto lm = level_masks(y, level);
    const Decider dec{beta, eta};
    ExpansionResult res;
    if (!mode) {
        res.method = "exhaustive";
        std::optional<Rational> tightest;
        for_each_record(lm, g, [&](const CosetRecord& rec, unsigned w) {
            res.checked += 1;
            if (!res.pass) {
                return;
            }
            // the minimum-weight member is the hardest f_hat of its coset
            const bool ok = rec.wmin == 0 ||
                            (static_cast<std::int64_t>(rec.wmin) <= dec.kmax(rec.s, w) &&
                             static_cast<std::int64_t>(rec.bmin) <= dec.bmax(rec.s));
            if (!ok) {
                res.pass = false;
                res.witness = BitVector::from_mask(lm.n, rec.rep);
                return;
            }
            if (rec.wmin > 0) {
                const Rational ratio(rec.s, rec.wmin);
                if (!tightest || ratio < *tightest) {
                    tightest = ratio;
                    res.witness = BitVector::from_mask(lm.n, rec.rep);
                }
            }
        });
        if (lm.n <= 40 && (lm.n - reduce_basis(lm.basis).first.size()) <= 20) {
            res.checked = std::size_t{1} << lm.n;
        }
        return res;
    }
    res.method = "sampled";
    Rng rng(mode->seed);
    std::optional<FrontierDP> dp;
    const std::size_t n = lm.n;
    const std::uint64_t ones = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (std::size_t w = 1; w <= n && res.pass; ++w) {
        // spread trials evenly over the weight strata
        const std::size_t count = mode->trials / n + (w <= mode->trials % n ? 1 : 0);
        for (std::size_t t = 0; t < count; ++t) {
            const std::uint64_t fhat = rng.subset_mask(n, w);
            ++res.checked;
            const unsigned s = popcount64(bd_of(lm.img_int, fhat));
            const auto K = dec.kmax(s, static_cast<unsigned>(w));
            const auto B = dec.bmax(s);
            bool ok = static_cast<std::int64_t>(w) <= K &&
                      static_cast<std::int64_t>(popcount64(bd_of(lm.img_bd, fhat))) <= B;
            if (!ok && level == 0) {
                const std::uint64_t alt = fhat ^ ones;
                ok = static_cast<std::int64_t>(popcount64(alt)) <= K &&
                     static_cast<std::int64_t>(popcount64(bd_of(lm.img_bd, alt))) <= B;
            }
            if (!ok && level > 0) {
                if (!dp) {
                    dp.emplace(y, level);
                }
                ok = dp->feasible(fhat, K, B);
            }
            if (!ok) {
                res.pass = false;
                res.witness = BitVector::from_mask(n, fhat);
                break;
            }
        }
    }
    return res;
}

ExpansionSweep boundary_expansion_sweep(const BoundaryComplex& y, std::size_t level, const Guards& g) {
    const auto lm = level_masks(y, level);
    ExpansionSweep sw;
    for_each_record(lm, g, [&](const CosetRecord& rec, unsigned /*w*/) {
        if (rec.wmin > 0) {
            const Rational r(rec.s, rec.wmin);
            if (!sw.beta_max || r < *sw.beta_max) {
                sw.beta_max = r;
                sw.beta_binding = BitVector::from_mask(lm.n, rec.rep);
            }
        }
        if (rec.bmin > 0) {
            const Rational r(rec.s, rec.bmin);
            if (!sw.eta_max || r < *sw.eta_max) {
                sw.eta_max = r;
                sw.eta_binding = BitVector::from_mask(lm.n, rec.rep);
            }
        }
    });
    return sw;
}

namespace {

CorollaryWitness repetition_witness(const BoundaryComplex& y, const BitVector& fhat) {
    const auto L = y.L;
    const Rational beta(2, static_cast<std::int64_t>(L));
    const Rational eta(1);
    const auto D = y.interior(0);
    const auto B = y.boundary(0);
    const auto s = static_cast<std::int64_t>(D.apply(fhat).weight());
    const auto w = static_cast<std::int64_t>(fhat.weight());
    CorollaryWitness best;
    bool have = false;
    for (int flip = 0; flip < 2; ++flip) {
        const BitVector f = flip ? fhat + BitVector::ones(fhat.size()) : fhat;
        const auto wf = static_cast<std::int64_t>(f.weight());
        const auto bf = static_cast<std::int64_t>(B.apply(f).weight());
        const bool ok = wf <= w && leq_scaled(beta, wf, s) && leq_scaled(eta, bf, s);
        if (ok && (!have || !best.satisfied || wf < static_cast<std::int64_t>(best.f0.weight()))) {
            best = {f, BitVector(), true};
            have = true;
        } else if (!have) {
            best = {f, BitVector(), false};
            have = true;
        }
    }
    return best;
}

struct SurfaceCheck {
    SurfaceConstants k;
    std::int64_t fh = 0;  // |f_hat|
    std::int64_t s1 = 0;  // |delta1 f_hat|_int
    [[nodiscard]] bool ok(std::int64_t w0, std::int64_t w1, std::int64_t b0, std::int64_t b1) const {
        // (b) beta0/2 |f0| <= |f_hat|, (c) beta1 |f1| <= s1, (d) eta0/2 |delta0 f0|_bd <= |f_hat|, (e) eta1 |delta1 f1|_bd <= s1
        return leq_scaled(k.beta0 * Rational(1, 2), w0, fh) && leq_scaled(k.beta1, w1, s1) &&
               leq_scaled(k.eta0 * Rational(1, 2), b0, fh) && leq_scaled(k.eta1, b1, s1);
    }
};

}  // namespace

CorollaryWitness surface_cleaning(const BoundaryComplex& y, const BitVector& fhat, const Guards& g) {
    if (y.levels() != 3) {
        throw std::invalid_argument("surface_cleaning: needs a three-level complex");
    }
    if (fhat.size() != y.n_int[1]) {
        throw std::invalid_argument("surface_cleaning: f_hat has the wrong length");
    }
    const auto D0 = y.interior(0);
    const auto B0 = y.boundary(0);
    const auto D1 = y.interior(1);
    const auto B1 = y.boundary(1);
    SurfaceCheck chk{surface_constants(y.L), static_cast<std::int64_t>(fhat.weight()),
                     static_cast<std::int64_t>(D1.apply(fhat).weight())};
    const std::size_t N = y.n_int[0];
    const bool masks_fit = y.n_int[1] <= 64 && y.n_bd[1] <= 64 && y.n_bd[2] <= 64;
    if (N <= g.cleaning_n && N <= 40 && masks_fit) {
        const auto c0 = D0.column_masks();
        const auto cb0 = B0.column_masks();
        const auto cb1 = B1.column_masks();
        // boundary image of delta0 e_v under delta1, so |delta1 f1|_bd updates incrementally
        std::vector<std::uint64_t> cb1_of_v(N);
        for (std::size_t v = 0; v < N; ++v) {
            cb1_of_v[v] = bd_of(cb1, c0[v]);
        }
        const std::uint64_t fh = fhat.to_mask();
        std::uint64_t f0 = 0, f1 = fh, b0 = 0, b1 = bd_of(cb1, fh);
        using Key = std::array<std::int64_t, 3>;
        std::optional<Key> best_ok, best_any;
        std::uint64_t arg_ok = 0, arg_any = 0;
        auto consider = [&] {
            const auto w0 = static_cast<std::int64_t>(popcount64(f0));
            const auto w1 = static_cast<std::int64_t>(popcount64(f1));
            const auto d0 = static_cast<std::int64_t>(popcount64(b0));
            const auto d1 = static_cast<std::int64_t>(popcount64(b1));
            const Key key{w1, d0, w0};
            if (chk.ok(w0, w1, d0, d1) && (!best_ok || key < *best_ok)) {
                best_ok = key;
                arg_ok = f0;
            }
            if (!best_any || key < *best_any) {
                best_any = key;
                arg_any = f0;
            }
        };
        consider();
        gray_walk(static_cast<unsigned>(N), [&](unsigned v) {
            f0 ^= 1ULL << v;
            f1 ^= c0[v];
            b0 ^= cb0[v];
            b1 ^= cb1_of_v[v];
            consider();
        });
        const std::uint64_t pick = best_ok ? arg_ok : arg_any;
        CorollaryWitness w;
        w.f0 = BitVector::from_mask(N, pick);
        w.f1 = BitVector::from_mask(y.n_int[1], fh ^ bd_of(c0, pick));
        w.satisfied = best_ok.has_value();
        return w;
    }
    // too large to enumerate: only exact interior coboundaries are handled
    const auto sol = solve(D0, fhat);
    if (!sol) {
        throw GuardError("surface_cleaning: piece with " + std::to_string(N) +
                         " interior vertices is too large for exact cleaning");
    }
    BitVector alt = *sol + BitVector::ones(N);
    const auto k1 = std::make_pair(B0.apply(*sol).weight(), sol->weight());
    const auto k2 = std::make_pair(B0.apply(alt).weight(), alt.weight());
    CorollaryWitness w;
    w.f0 = k2 < k1 ? alt : *sol;
    w.f1 = BitVector(y.n_int[1]);
    w.satisfied = chk.ok(static_cast<std::int64_t>(w.f0.weight()), 0,
                         static_cast<std::int64_t>(B0.apply(w.f0).weight()), 0);
    return w;
}

std::optional<CorollaryWitness> derive_corollary_bounds(const BoundaryComplex& y, const BitVector& f_hat,
                                                        const Guards& g) {
    if (y.L == 0) {
        throw std::invalid_argument("derive_corollary_bounds: complex has no size parameter");
    }
    CorollaryWitness w;
    if (y.levels() == 2) {
        if (f_hat.size() != y.n_int[0]) {
            throw std::invalid_argument("derive_corollary_bounds: f_hat has the wrong length");
        }
        w = repetition_witness(y, f_hat);
    } else {
        w = surface_cleaning(y, f_hat, g);
    }
    if (!w.satisfied) {
        return std::nullopt;
    }
    return w;
}

BoundaryGraph::BoundaryGraph(std::size_t n_, std::vector<std::pair<std::uint32_t, std::uint32_t>> e,
                             std::vector<std::uint32_t> m)
    : n(n_), edges(std::move(e)), mult(std::move(m)) {
    if (mult.size() != n) {
        throw std::invalid_argument("BoundaryGraph: one multiplicity per vertex required");
    }
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n || u == v) {
            throw std::invalid_argument("BoundaryGraph: bad edge");
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("BoundaryGraph: duplicate edge");
    }
}

std::size_t BoundaryGraph::boundary_size() const {
    std::size_t s = 0;
    for (auto m : mult) {
        s += m;
    }
    return s;
}

BoundaryGraph repetition_graph(std::size_t L, std::size_t Delta) {
    const auto y = generalized_repetition(L, Delta);
    const auto d = y.interior(0);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::size_t r = 0; r < d.rows(); ++r) {
        const auto row = d.row(r);
        e.emplace_back(row[0], row[1]);
    }
    std::vector<std::uint32_t> m(y.n_int[0], 0);
    const auto b = y.boundary(0);
    for (const auto& en : b.entries()) {
        m[en.second] += 1;
    }
    return {y.n_int[0], std::move(e), std::move(m)};
}

BoundaryGraph boundary_graph_product(const BoundaryGraph& g1, const BoundaryGraph& g2) {
    const std::size_t n = g1.n * g2.n;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    auto id = [&](std::size_t a, std::size_t b) { return static_cast<std::uint32_t>(a * g2.n + b); };
    for (const auto& [u, v] : g1.edges) {
        for (std::size_t b = 0; b < g2.n; ++b) {
            e.emplace_back(id(u, b), id(v, b));
        }
    }
    for (std::size_t a = 0; a < g1.n; ++a) {
        for (const auto& [u, v] : g2.edges) {
            e.emplace_back(id(a, u), id(a, v));
        }
    }
    // V1^bd x V2 and V1 x V2^bd as a disjoint union
    std::vector<std::uint32_t> m(n);
    for (std::size_t a = 0; a < g1.n; ++a) {
        for (std::size_t b = 0; b < g2.n; ++b) {
            m[id(a, b)] = g1.mult[a] + g2.mult[b];
        }
    }
    return {n, std::move(e), std::move(m)};
}

BoundaryComplex graph_complex(const BoundaryGraph& g) {
    const std::size_t ne = g.edges.size();
    const std::size_t nb = g.boundary_size();
    std::vector<Entry> e;
    for (std::size_t k = 0; k < ne; ++k) {
        e.emplace_back(k, g.edges[k].first);
        e.emplace_back(k, g.edges[k].second);
    }
    std::size_t row = ne;
    for (std::size_t v = 0; v < g.n; ++v) {
        for (std::uint32_t c = 0; c < g.mult[v]; ++c) {
            e.emplace_back(row++, v);
        }
    }
    std::sort(e.begin(), e.end());
    return {{g.n, ne}, {0, nb}, {SparseBitMatrix(ne + nb, g.n, std::move(e))}};
}

namespace {

template <class F>
void walk_cuts(const BoundaryGraph& g, const Guards& guards, F&& visit) {
    guards.require(g.n <= guards.expansion_n, "functional inequality scan over 2^" + std::to_string(g.n));
    if (g.n > 40) {
        throw GuardError("functional inequality: 2^" + std::to_string(g.n) + " cannot be enumerated");
    }
    std::vector<std::uint64_t> adj(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    std::uint64_t h = 0;
    std::int64_t cut = 0, f = 0, fb = 0;
    visit(h, cut, f, fb);
    gray_walk(static_cast<unsigned>(g.n), [&](unsigned v) {
        const auto deg = static_cast<std::int64_t>(popcount64(adj[v]));
        const auto ones = static_cast<std::int64_t>(popcount64(adj[v] & h));
        if ((h >> v) & 1ULL) {
            cut += 2 * ones - deg;
            f -= 1;
            fb -= g.mult[v];
        } else {
            cut += deg - 2 * ones;
            f += 1;
            fb += g.mult[v];
        }
        h ^= 1ULL << v;
        visit(h, cut, f, fb);
    });
}

}  // namespace

FunctionalResult check_functional_inequalities(const BoundaryGraph& g, const Rational& C, const Rational& Cb,
                                               const Guards& guards) {
    FunctionalResult res;
    const auto n = static_cast<std::int64_t>(g.n);
    const auto vb = static_cast<std::int64_t>(g.boundary_size());
    walk_cuts(g, guards, [&](std::uint64_t h, std::int64_t cut, std::int64_t f, std::int64_t fb) {
        ++res.checked;
        if (!res.pass) {
            return;
        }
        const __int128 lhs1 = static_cast<__int128>(cut) * n * C.den();
        const __int128 rhs1 = static_cast<__int128>(C.num()) * 2 * f * (n - f);
        if (lhs1 < rhs1) {
            res.pass = false;
            res.witness = h;
            res.which = 1;
            return;
        }
        if (vb == 0) {
            return;
        }
        const __int128 lhs2 = static_cast<__int128>(cut) * vb * Cb.den();
        const __int128 rhs2 = static_cast<__int128>(Cb.num()) * (fb * (n - f) + (vb - fb) * f);
        if (lhs2 < rhs2) {
            res.pass = false;
            res.witness = h;
            res.which = 2;
        }
    });
    return res;
}

FunctionalSweep functional_sweep(const BoundaryGraph& g, const Guards& guards) {
    FunctionalSweep sw;
    const auto n = static_cast<std::int64_t>(g.n);
    const auto vb = static_cast<std::int64_t>(g.boundary_size());
    walk_cuts(g, guards, [&](std::uint64_t h, std::int64_t cut, std::int64_t f, std::int64_t fb) {
        const std::int64_t r1 = 2 * f * (n - f);
        if (r1 > 0) {
            const Rational c(cut * n, r1);
            if (!sw.C_max || c < *sw.C_max) {
                sw.C_max = c;
                sw.C_binding = h;
            }
        }
        if (vb > 0) {
            const std::int64_t r2 = fb * (n - f) + (vb - fb) * f;
            if (r2 > 0) {
                const Rational c(cut * vb, r2);
                if (!sw.Cb_max || c < *sw.Cb_max) {
                    sw.Cb_max = c;
                    sw.Cb_binding = h;
                }
            }
        }
    });
    return sw;
}

}  // namespace lcf
