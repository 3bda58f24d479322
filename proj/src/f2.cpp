#include "lcf/f2.hpp"

#include <algorithm>

namespace lcf {

// ---------------------------------------------------------------- BitVector

BitVector BitVector::from_indices(std::size_t n, const std::vector<std::size_t>& idx) {
    BitVector v(n);
    for (auto i : idx) {
        if (i >= n) {
            throw std::out_of_range("BitVector::from_indices: index out of range");
        }
        v.flip(i);
    }
    return v;
}

BitVector BitVector::from_mask(std::size_t n, std::uint64_t mask) {
    if (n > 64) {
        throw std::invalid_argument("BitVector::from_mask: length exceeds 64");
    }
    BitVector v(n);
    if (n > 0) {
        v.w_[0] = n == 64 ? mask : (mask & ((1ULL << n) - 1));
    }
    return v;
}

BitVector BitVector::ones(std::size_t n) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.set(i);
    }
    return v;
}

std::size_t BitVector::weight() const {
    std::size_t s = 0;
    for (auto w : w_) {
        s += popcount64(w);
    }
    return s;
}

bool BitVector::any() const {
    return std::any_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w != 0; });
}

bool BitVector::dot(const BitVector& o) const {
    if (o.n_ != n_) {
        throw std::invalid_argument("BitVector::dot: length mismatch");
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        acc ^= w_[i] & o.w_[i];
    }
    return popcount64(acc) & 1U;
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        std::uint64_t w = w_[k];
        while (w) {
            s.push_back(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
            w &= w - 1;
        }
    }
    return s;
}

std::uint64_t BitVector::to_mask() const {
    if (n_ > 64) {
        throw std::invalid_argument("BitVector::to_mask: length exceeds 64");
    }
    return w_.empty() ? 0 : w_[0];
}

std::string BitVector::str() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::size_t BitVector::first() const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
        if (w_[k]) {
            return k * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[k]));
        }
    }
    return n_;
}

BitVector& BitVector::operator+=(const BitVector& o) {
    if (o.n_ != n_) {
        throw std::invalid_argument("BitVector: length mismatch in addition");
    }
    for (std::size_t i = 0; i < w_.size(); ++i) {
        w_[i] ^= o.w_[i];
    }
    return *this;
}

bool operator<(const BitVector& a, const BitVector& b) {
    if (a.n_ != b.n_) {
        return a.n_ < b.n_;
    }
    return a.w_ < b.w_;
}

// ---------------------------------------------------------------- SparseBitMatrix

SparseBitMatrix::SparseBitMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].first >= rows_ || entries_[i].second >= cols_) {
            throw std::out_of_range("SparseBitMatrix: entry (" + std::to_string(entries_[i].first) + "," +
                                    std::to_string(entries_[i].second) + ") out of range");
        }
        if (i > 0 && entries_[i] == entries_[i - 1]) {
            throw std::invalid_argument("SparseBitMatrix: duplicate entry (" + std::to_string(entries_[i].first) +
                                        "," + std::to_string(entries_[i].second) + ")");
        }
    }
    index();
}

SparseBitMatrix SparseBitMatrix::from_xor(std::size_t rows, std::size_t cols, std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    std::vector<Entry> kept;
    kept.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        while (j < entries.size() && entries[j] == entries[i]) {
            ++j;
        }
        if ((j - i) & 1U) {
            kept.push_back(entries[i]);
        }
        i = j;
    }
    return {rows, cols, std::move(kept)};
}

SparseBitMatrix SparseBitMatrix::identity(std::size_t n) {
    std::vector<Entry> e;
    e.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        e.emplace_back(i, i);
    }
    return {n, n, std::move(e)};
}

SparseBitMatrix SparseBitMatrix::from_dense(const std::vector<std::vector<int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    std::vector<Entry> e;
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw std::invalid_argument("SparseBitMatrix::from_dense: ragged rows");
        }
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j] & 1) {
                e.emplace_back(i, j);
            }
        }
    }
    return {r, c, std::move(e)};
}

SparseBitMatrix SparseBitMatrix::from_rows(std::size_t cols, const std::vector<BitVector>& rows) {
    std::vector<Entry> e;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw std::invalid_argument("SparseBitMatrix::from_rows: length mismatch");
        }
        for (auto j : rows[i].support()) {
            e.emplace_back(i, j);
        }
    }
    return {rows.size(), cols, std::move(e)};
}

SparseBitMatrix SparseBitMatrix::from_columns(std::size_t rows, const std::vector<BitVector>& cols) {
    std::vector<Entry> e;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) {
            throw std::invalid_argument("SparseBitMatrix::from_columns: length mismatch");
        }
        for (auto i : cols[j].support()) {
            e.emplace_back(i, j);
        }
    }
    return {rows, cols.size(), std::move(e)};
}

void SparseBitMatrix::index() {
    row_ptr_.assign(rows_ + 1, 0);
    for (const auto& [r, c] : entries_) {
        ++row_ptr_[r + 1];
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        row_ptr_[r + 1] += row_ptr_[r];
    }
}

bool SparseBitMatrix::get(std::size_t r, std::size_t c) const {
    auto first = entries_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r]);
    auto last = entries_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[r + 1]);
    return std::binary_search(first, last, Entry(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c)));
}

std::vector<std::uint32_t> SparseBitMatrix::row(std::size_t r) const {
    std::vector<std::uint32_t> out;
    out.reserve(row_degree(r));
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
        out.push_back(entries_[k].second);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> SparseBitMatrix::column_lists() const {
    std::vector<std::vector<std::uint32_t>> out(cols_);
    for (const auto& [r, c] : entries_) {
        out[c].push_back(r);
    }
    return out;
}

std::vector<std::size_t> SparseBitMatrix::col_degrees() const {
    std::vector<std::size_t> d(cols_, 0);
    for (const auto& e : entries_) {
        ++d[e.second];
    }
    return d;
}

std::size_t SparseBitMatrix::max_row_degree() const {
    std::size_t m = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
        m = std::max(m, row_degree(r));
    }
    return m;
}

std::size_t SparseBitMatrix::max_col_degree() const {
    auto d = col_degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

BitVector SparseBitMatrix::apply(const BitVector& x) const {
    if (x.size() != cols_) {
        throw std::invalid_argument("SparseBitMatrix::apply: dimension mismatch (" + std::to_string(x.size()) +
                                    " vs " + std::to_string(cols_) + " columns)");
    }
    BitVector y(rows_);
    for (const auto& [r, c] : entries_) {
        if (x.get(c)) {
            y.flip(r);
        }
    }
    return y;
}

SparseBitMatrix SparseBitMatrix::transpose() const {
    std::vector<Entry> e;
    e.reserve(entries_.size());
    for (const auto& [r, c] : entries_) {
        e.emplace_back(c, r);
    }
    return {cols_, rows_, std::move(e)};
}

SparseBitMatrix SparseBitMatrix::multiply(const SparseBitMatrix& b) const {
    if (cols_ != b.rows_) {
        throw std::invalid_argument("SparseBitMatrix::multiply: inner dimension mismatch");
    }
    std::vector<Entry> out;
    std::vector<std::uint8_t> acc(b.cols_, 0);
    std::vector<std::uint32_t> touched;
    for (std::size_t r = 0; r < rows_; ++r) {
        touched.clear();
        for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
            const auto mid = entries_[k].second;
            for (std::size_t q = b.row_ptr_[mid]; q < b.row_ptr_[mid + 1]; ++q) {
                const auto c = b.entries_[q].second;
                if (!acc[c]) {
                    touched.push_back(c);
                }
                acc[c] ^= 1U;
                acc[c] |= 2U;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (auto c : touched) {
            if (acc[c] & 1U) {
                out.emplace_back(r, c);
            }
            acc[c] = 0;
        }
    }
    return {rows_, b.cols_, std::move(out)};
}

std::vector<BitVector> SparseBitMatrix::dense_rows() const {
    std::vector<BitVector> out(rows_, BitVector(cols_));
    for (const auto& [r, c] : entries_) {
        out[r].set(c);
    }
    return out;
}

std::vector<BitVector> SparseBitMatrix::dense_columns() const {
    std::vector<BitVector> out(cols_, BitVector(rows_));
    for (const auto& [r, c] : entries_) {
        out[c].set(r);
    }
    return out;
}

std::vector<std::uint64_t> SparseBitMatrix::column_masks() const {
    if (rows_ > 64) {
        throw std::invalid_argument("SparseBitMatrix::column_masks: more than 64 rows");
    }
    std::vector<std::uint64_t> m(cols_, 0);
    for (const auto& [r, c] : entries_) {
        m[c] |= 1ULL << r;
    }
    return m;
}

SparseBitMatrix SparseBitMatrix::submatrix(const std::vector<std::size_t>& rows,
                                           const std::vector<std::size_t>& cols) const {
    std::vector<std::int64_t> rmap(rows_, -1);
    std::vector<std::int64_t> cmap(cols_, -1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rmap[rows[i]] = static_cast<std::int64_t>(i);
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
        cmap[cols[j]] = static_cast<std::int64_t>(j);
    }
    std::vector<Entry> e;
    for (const auto& [r, c] : entries_) {
        if (rmap[r] >= 0 && cmap[c] >= 0) {
            e.emplace_back(rmap[r], cmap[c]);
        }
    }
    return {rows.size(), cols.size(), std::move(e)};
}

SparseBitMatrix hstack(const SparseBitMatrix& a, const SparseBitMatrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("hstack: row mismatch");
    }
    auto e = a.entries();
    for (const auto& [r, c] : b.entries()) {
        e.emplace_back(r, c + a.cols());
    }
    return {a.rows(), a.cols() + b.cols(), std::move(e)};
}

SparseBitMatrix vstack(const SparseBitMatrix& a, const SparseBitMatrix& b) {
    if (a.cols() != b.cols()) {
        throw std::invalid_argument("vstack: column mismatch");
    }
    auto e = a.entries();
    for (const auto& [r, c] : b.entries()) {
        e.emplace_back(r + a.rows(), c);
    }
    return {a.rows() + b.rows(), a.cols(), std::move(e)};
}

SparseBitMatrix block_diag(const std::vector<SparseBitMatrix>& blocks) {
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    std::vector<Entry> e;
    for (const auto& b : blocks) {
        for (const auto& [r, c] : b.entries()) {
            e.emplace_back(r + r0, c + c0);
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    return {r0, c0, std::move(e)};
}

// ---------------------------------------------------------------- elimination

bool EchelonBasis::insert(const BitVector& v) {
    BitVector r = reduce(v);
    const std::size_t p = r.first();
    if (p == r.size()) {
        return false;
    }
    // keep fully reduced: clear pivot p from existing rows
    for (auto& row : rows_) {
        if (row.get(p)) {
            row += r;
        }
    }
    rows_.push_back(std::move(r));
    piv_.push_back(p);
    return true;
}

BitVector EchelonBasis::reduce(BitVector v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("EchelonBasis: length mismatch");
    }
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (v.get(piv_[k])) {
            v += rows_[k];
        }
    }
    return v;
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row (rows reordered to the front).
std::vector<std::size_t> rref(std::vector<BitVector>& rows, std::size_t ncols) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    const std::size_t nw = (ncols + 63) / 64;
    for (std::size_t w = 0; w < nw && r < rows.size(); ++w) {
        for (unsigned bit = 0; bit < 64 && r < rows.size(); ++bit) {
            const std::size_t c = w * 64 + bit;
            if (c >= ncols) {
                break;
            }
            const std::uint64_t m = 1ULL << bit;
            std::size_t sel = r;
            while (sel < rows.size() && !(rows[sel].words()[w] & m)) {
                ++sel;
            }
            if (sel == rows.size()) {
                continue;
            }
            std::swap(rows[r], rows[sel]);
            const auto& pr = rows[r].words();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i != r && (rows[i].words()[w] & m)) {
                    auto& wr = rows[i].words();
                    for (std::size_t k = w; k < wr.size(); ++k) {
                        wr[k] ^= pr[k];
                    }
                }
            }
            piv.push_back(c);
            ++r;
        }
    }
    return piv;
}

}  // namespace

std::size_t rank(const SparseBitMatrix& m) {
    // eliminate along the shorter side
    if (m.rows() <= m.cols()) {
        auto rows = m.dense_rows();
        return rref(rows, m.cols()).size();
    }
    auto cols = m.dense_columns();
    return rref(cols, m.rows()).size();
}

std::size_t span_rank(const std::vector<BitVector>& vs) {
    if (vs.empty()) {
        return 0;
    }
    auto rows = vs;
    return rref(rows, vs[0].size()).size();
}

std::optional<BitVector> solve(const SparseBitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("solve: dimension mismatch (b has " + std::to_string(b.size()) +
                                    " entries, matrix has " + std::to_string(m.rows()) + " rows)");
    }
    const std::size_t n = m.cols();
    std::vector<BitVector> rows(m.rows(), BitVector(n + 1));
    for (const auto& [r, c] : m.entries()) {
        rows[r].set(c);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (b.get(r)) {
            rows[r].set(n);
        }
    }
    auto piv = rref(rows, n + 1);
    BitVector x(n);
    for (std::size_t k = 0; k < piv.size(); ++k) {
        if (piv[k] == n) {
            return std::nullopt;
        }
        if (rows[k].get(n)) {
            x.set(piv[k]);
        }
    }
    return x;
}

std::vector<BitVector> kernel_basis(const SparseBitMatrix& m) {
    const std::size_t n = m.cols();
    auto rows = m.dense_rows();
    auto piv = rref(rows, n);
    std::vector<char> is_piv(n, 0);
    for (auto p : piv) {
        is_piv[p] = 1;
    }
    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) {
            continue;
        }
        BitVector v(n);
        v.set(f);
        for (std::size_t k = 0; k < piv.size(); ++k) {
            if (rows[k].get(f)) {
                v.set(piv[k]);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVector> image_basis(const SparseBitMatrix& m) {
    EchelonBasis eb(m.rows());
    std::vector<BitVector> out;
    for (auto& col : m.dense_columns()) {
        if (eb.insert(col)) {
            out.push_back(std::move(col));
        }
    }
    return out;
}

bool in_span(const std::vector<BitVector>& basis, const BitVector& v) {
    EchelonBasis eb(v.size());
    for (const auto& b : basis) {
        eb.insert(b);
    }
    return eb.contains(v);
}

std::size_t min_weight_nontrivial(const std::vector<BitVector>& z_basis, const std::vector<BitVector>& b_basis,
                                  BitVector* witness) {
    if (z_basis.empty()) {
        throw EmptyCosetError("min_weight_nontrivial: span(Z) is trivial");
    }
    const std::size_t n = z_basis[0].size();
    EchelonBasis zeb(n);
    for (const auto& z : z_basis) {
        zeb.insert(z);
    }
    EchelonBasis eb(n);
    std::vector<BitVector> gens;  // independent B generators first, then coset representatives
    for (const auto& b : b_basis) {
        if (!zeb.contains(b)) {
            throw std::invalid_argument("min_weight_nontrivial: span(B) is not contained in span(Z)");
        }
        if (eb.insert(b)) {
            gens.push_back(b);
        }
    }
    const std::size_t nb = gens.size();
    for (const auto& z : z_basis) {
        if (eb.insert(z)) {
            gens.push_back(z);
        }
    }
    const std::size_t nc = gens.size() - nb;
    if (nc == 0) {
        throw EmptyCosetError("min_weight_nontrivial: span(Z) equals span(B); no nontrivial element");
    }
    const std::size_t t = gens.size();
    if (t > 40) {
        throw GuardError("min_weight_nontrivial: span dimension " + std::to_string(t) + " exceeds 40");
    }
    // Gray walk over all coefficient vectors; B coefficients occupy the low bits.
    std::size_t best = n + 1;
    std::uint64_t best_code = 0;
    std::uint64_t code = 0;
    const std::uint64_t cmask = ((1ULL << nc) - 1) << nb;
    if (n <= 64) {
        std::vector<std::uint64_t> g(t);
        for (std::size_t i = 0; i < t; ++i) {
            g[i] = gens[i].to_mask();
        }
        std::uint64_t cur = 0;
        gray_walk(static_cast<unsigned>(t), [&](unsigned i) {
            cur ^= g[i];
            code ^= 1ULL << i;
            if (code & cmask) {
                const std::size_t w = popcount64(cur);
                if (w < best) {
                    best = w;
                    best_code = code;
                }
            }
        });
    } else {
        BitVector cur(n);
        gray_walk(static_cast<unsigned>(t), [&](unsigned i) {
            cur += gens[i];
            code ^= 1ULL << i;
            if (code & cmask) {
                const std::size_t w = cur.weight();
                if (w < best) {
                    best = w;
                    best_code = code;
                }
            }
        });
    }
    if (witness) {
        BitVector v(n);
        for (std::size_t i = 0; i < t; ++i) {
            if ((best_code >> i) & 1ULL) {
                v += gens[i];
            }
        }
        *witness = v;
    }
    return best;
}

}  // namespace lcf
