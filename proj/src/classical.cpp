#include "lcf/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcf {

ClassicalSubdivision subdivide_classical(const ClassicalCode& c, std::size_t L) {
    if (L < 3) {
        throw std::invalid_argument("subdivide_classical: L must be at least 3");
    }
    if (L % 2 == 0) {
        throw std::invalid_argument("subdivide_classical: L must be odd");
    }
    ClassicalSubdivision s;
    s.base = c;
    s.L = L;
    const std::size_t n = c.n(), m = c.m();
    const auto& ent = c.H.entries();  // (check, bit)
    s.points.resize(n + m + ent.size() * (L - 1));
    std::uint32_t nbits = 0, nchecks = 0;
    for (std::size_t b = 0; b < n; ++b) {
        s.points[b] = {true, false, static_cast<std::uint32_t>(b), 0, 0, nbits++};
        s.bit_points.push_back(static_cast<std::uint32_t>(b));
    }
    for (std::size_t k = 0; k < m; ++k) {
        s.points[n + k] = {false, true, static_cast<std::uint32_t>(k), 0, static_cast<std::uint32_t>(L), nchecks++};
        s.check_points.push_back(static_cast<std::uint32_t>(n + k));
    }
    s.t_bits.assign(n, {});
    s.t_checks.assign(n, {});
    for (std::size_t b = 0; b < n; ++b) {
        s.t_bits[b].push_back(static_cast<std::uint32_t>(b));
    }
    std::vector<Entry> h;
    for (std::size_t e = 0; e < ent.size(); ++e) {
        const auto [chk, bit] = ent[e];
        std::uint32_t prev = bit;
        for (std::size_t t = 1; t < L; ++t) {
            const auto id = static_cast<std::uint32_t>(n + m + e * (L - 1) + t - 1);
            auto& p = s.points[id];
            p.is_bit = t % 2 == 0;
            p.component = bit;
            p.edge = static_cast<std::uint32_t>(e);
            p.t = static_cast<std::uint32_t>(t);
            if (p.is_bit) {
                p.index = nbits++;
                s.bit_points.push_back(id);
                s.t_bits[bit].push_back(p.index);
            } else {
                p.index = nchecks++;
                s.check_points.push_back(id);
                s.t_checks[bit].push_back(p.index);
            }
            s.graph_edges.emplace_back(prev, id);
            prev = id;
        }
        s.graph_edges.emplace_back(prev, static_cast<std::uint32_t>(n + chk));
    }
    for (const auto& [u, v] : s.graph_edges) {
        const auto& a = s.points[u];
        const auto& b = s.points[v];
        if (a.is_bit == b.is_bit) {
            throw std::logic_error("subdivide_classical: path does not alternate");
        }
        h.emplace_back(a.is_bit ? b.index : a.index, a.is_bit ? a.index : b.index);
    }
    std::sort(h.begin(), h.end());
    s.HL = ClassicalCode(SparseBitMatrix(nchecks, nbits, std::move(h)));
    return s;
}

SparseBitMatrix ClassicalSubdivision::F0() const {
    std::vector<Entry> e;
    for (std::size_t b = 0; b < t_bits.size(); ++b) {
        for (auto col : t_bits[b]) {
            e.emplace_back(col, static_cast<std::uint32_t>(b));
        }
    }
    std::sort(e.begin(), e.end());
    return {HL.n(), base.n(), std::move(e)};
}

SparseBitMatrix ClassicalSubdivision::F1() const {
    std::vector<Entry> e;
    for (std::size_t k = 0; k < base.m(); ++k) {
        e.emplace_back(points[base.n() + k].index, static_cast<std::uint32_t>(k));
    }
    std::sort(e.begin(), e.end());
    return {HL.m(), base.m(), std::move(e)};
}

BitVector ClassicalSubdivision::lift(const BitVector& c) const {
    if (c.size() != base.n()) {
        throw std::invalid_argument("lift: vector has length " + std::to_string(c.size()) + ", expected " +
                                    std::to_string(base.n()));
    }
    BitVector out(HL.n());
    for (std::size_t b = 0; b < t_bits.size(); ++b) {
        if (c.get(b)) {
            for (auto col : t_bits[b]) {
                out.set(col);
            }
        }
    }
    return out;
}

std::optional<BitVector> ClassicalSubdivision::project(const BitVector& c) const {
    if (c.size() != HL.n()) {
        return std::nullopt;
    }
    BitVector out(base.n());
    for (std::size_t b = 0; b < t_bits.size(); ++b) {
        const bool v = c.get(t_bits[b][0]);
        for (auto col : t_bits[b]) {
            if (c.get(col) != v) {
                return std::nullopt;
            }
        }
        out.set(b, v);
    }
    return out;
}

std::size_t ClassicalSubdivision::max_degree() const {
    std::size_t d = std::max(base.H.max_row_degree(), base.H.max_col_degree());
    return d;
}

std::size_t ClassicalSubdivision::min_component() const {
    std::size_t best = SIZE_MAX;
    for (const auto& t : t_bits) {
        best = std::min(best, t.size());
    }
    return t_bits.empty() ? 0 : best;
}

Rational lemma_soundness_bound(std::size_t nL0, std::size_t nL1, std::size_t n0, std::size_t n1,
                               const std::optional<Rational>& s_ltc, std::size_t delta_max, std::size_t L) {
    const auto l = static_cast<std::int64_t>(L);
    const Rational inv_beta_rep(l, 2);
    const Rational eta_rep(1);
    Rational denom = inv_beta_rep;
    if (s_ltc) {
        if (s_ltc->num() <= 0) {
            throw std::invalid_argument("lemma_soundness_bound: s_LTC must be positive");
        }
        denom = denom + Rational(1) / eta_rep * Rational(static_cast<std::int64_t>(n0), static_cast<std::int64_t>(n1)) /
                            *s_ltc * Rational(static_cast<std::int64_t>(delta_max) * l, 2);
    }
    return Rational(static_cast<std::int64_t>(nL0), static_cast<std::int64_t>(nL1)) / denom;
}

ClassicalLemmaReport verify_classical_lemma(const ClassicalSubdivision& sub, const Guards& g) {
    ClassicalLemmaReport r;
    r.chain_map = sub.HL.H.multiply(sub.F0()) == sub.F1().multiply(sub.base.H);
    r.k_base = classical_dimension(sub.base);
    r.k_sub = classical_dimension(sub.HL);
    r.k_ok = r.k_base == r.k_sub;
    r.delta_max = sub.max_degree();
    r.min_component = sub.min_component();
    if (r.k_base > 0) {
        r.d_base = classical_distance(sub.base, g);
        r.d_sub = classical_distance(sub.HL, g);
        r.d_ok = r.d_sub >= sub.L * r.d_base;
    }
    r.s_base = classical_soundness(sub.base, g);
    r.s_sub = classical_soundness(sub.HL, g);
    r.s_bound = lemma_soundness_bound(sub.HL.n(), sub.HL.m(), sub.base.n(), sub.base.m(), r.s_base, r.delta_max, sub.L);
    r.s_ok = r.s_sub >= r.s_bound;
    return r;
}

ClassicalCleaning classical_clean(const ClassicalSubdivision& sub, const BitVector& c0) {
    if (c0.size() != sub.HL.n()) {
        throw std::invalid_argument("classical_clean: vector has length " + std::to_string(c0.size()) + ", expected " +
                                    std::to_string(sub.HL.n()));
    }
    ClassicalCleaning res;
    res.c0T = BitVector(sub.HL.n());
    for (const auto& comp : sub.t_bits) {
        std::size_t ones = 0;
        for (auto col : comp) {
            ones += c0.get(col) ? 1 : 0;
        }
        const bool value = 2 * ones > comp.size();
        for (auto col : comp) {
            if (c0.get(col) != value) {
                res.c0T.set(col);
            }
        }
    }
    res.c0_prime = c0 + res.c0T;
    res.tilde_c0 = *sub.project(res.c0_prime);
    const auto& H = sub.HL.H;
    std::vector<char> in_u(sub.HL.m(), 0);
    for (std::size_t k = 0; k < sub.base.m(); ++k) {
        in_u[sub.points[sub.base.n() + k].index] = 1;
    }
    auto tu = [&](const BitVector& s, std::int64_t& t, std::int64_t& u) {
        t = u = 0;
        for (std::size_t r = 0; r < s.size(); ++r) {
            if (s.get(r)) {
                ++(in_u[r] ? u : t);
            }
        }
    };
    auto& l = res.ledger;
    l.c0 = static_cast<std::int64_t>(c0.weight());
    tu(H.apply(c0), l.dc0_T, l.dc0_U);
    l.c0T = static_cast<std::int64_t>(res.c0T.weight());
    std::int64_t tmp = 0;
    tu(H.apply(res.c0T), tmp, l.dc0T_U);
    std::int64_t pT = 0;
    tu(H.apply(res.c0_prime), pT, l.dc0p_U);
    l.dc0p = pT + l.dc0p_U;
    const Rational beta_rep(2, static_cast<std::int64_t>(sub.L));
    l.b = l.c0T <= l.c0;
    l.c = leq_scaled(beta_rep, l.c0T, l.dc0_T);
    l.d = l.dc0T_U <= l.dc0_T;
    l.dc0p_ok = pT == 0 && l.dc0p <= l.dc0T_U + l.dc0_U && l.dc0p <= l.dc0_T + l.dc0_U;
    return res;
}

}  // namespace lcf
