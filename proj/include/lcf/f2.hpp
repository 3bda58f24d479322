#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lcf {

// Raised when an exhaustive oracle would exceed its configured size guard.
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a minimum-weight search has nothing to minimize over.
class EmptyCosetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_indices(std::size_t n, const std::vector<std::size_t>& idx);
    static BitVector from_mask(std::size_t n, std::uint64_t mask);
    static BitVector ones(std::size_t n);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }
    void set(std::size_t i, bool v = true) {
        if (v) {
            w_[i >> 6] |= 1ULL << (i & 63);
        } else {
            w_[i >> 6] &= ~(1ULL << (i & 63));
        }
    }
    void flip(std::size_t i) { w_[i >> 6] ^= 1ULL << (i & 63); }

    [[nodiscard]] std::size_t weight() const;
    [[nodiscard]] bool any() const;
    [[nodiscard]] bool dot(const BitVector& o) const;
    [[nodiscard]] std::vector<std::size_t> support() const;
    [[nodiscard]] std::uint64_t to_mask() const;
    [[nodiscard]] std::string str() const;
    // lowest set index, or size() if zero
    [[nodiscard]] std::size_t first() const;

    BitVector& operator+=(const BitVector& o);
    friend BitVector operator+(BitVector a, const BitVector& b) { return a += b; }
    friend bool operator==(const BitVector& a, const BitVector& b) { return a.n_ == b.n_ && a.w_ == b.w_; }
    friend bool operator!=(const BitVector& a, const BitVector& b) { return !(a == b); }
    friend bool operator<(const BitVector& a, const BitVector& b);

    [[nodiscard]] const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

using Entry = std::pair<std::uint32_t, std::uint32_t>;

// Storage/interchange form of an F2 matrix. Entries are kept sorted and unique.
class SparseBitMatrix {
public:
    SparseBitMatrix() = default;
    SparseBitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}
    // Throws on out-of-range or duplicate entries.
    SparseBitMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
    // Duplicate entries cancel in pairs.
    static SparseBitMatrix from_xor(std::size_t rows, std::size_t cols, std::vector<Entry> entries);
    static SparseBitMatrix identity(std::size_t n);
    static SparseBitMatrix from_dense(const std::vector<std::vector<int>>& rows);
    static SparseBitMatrix from_rows(std::size_t cols, const std::vector<BitVector>& rows);
    static SparseBitMatrix from_columns(std::size_t rows, const std::vector<BitVector>& cols);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t nnz() const { return entries_.size(); }
    [[nodiscard]] const std::vector<Entry>& entries() const { return entries_; }
    [[nodiscard]] bool get(std::size_t r, std::size_t c) const;

    // column indices of row r, ascending
    [[nodiscard]] std::vector<std::uint32_t> row(std::size_t r) const;
    [[nodiscard]] std::vector<std::vector<std::uint32_t>> column_lists() const;
    [[nodiscard]] std::size_t row_degree(std::size_t r) const { return row_ptr_[r + 1] - row_ptr_[r]; }
    [[nodiscard]] std::vector<std::size_t> col_degrees() const;
    [[nodiscard]] std::size_t max_row_degree() const;
    [[nodiscard]] std::size_t max_col_degree() const;

    [[nodiscard]] BitVector apply(const BitVector& x) const;
    [[nodiscard]] SparseBitMatrix transpose() const;
    [[nodiscard]] SparseBitMatrix multiply(const SparseBitMatrix& b) const;
    [[nodiscard]] std::vector<BitVector> dense_rows() const;
    [[nodiscard]] std::vector<BitVector> dense_columns() const;
    [[nodiscard]] bool is_zero() const { return entries_.empty(); }
    // columns as 64-bit masks over rows; requires rows() <= 64
    [[nodiscard]] std::vector<std::uint64_t> column_masks() const;
    [[nodiscard]] SparseBitMatrix submatrix(const std::vector<std::size_t>& rows,
                                            const std::vector<std::size_t>& cols) const;

    friend bool operator==(const SparseBitMatrix& a, const SparseBitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const SparseBitMatrix& a, const SparseBitMatrix& b) { return !(a == b); }

private:
    void index();

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Entry> entries_;
    std::vector<std::size_t> row_ptr_{0};
};

SparseBitMatrix hstack(const SparseBitMatrix& a, const SparseBitMatrix& b);
SparseBitMatrix vstack(const SparseBitMatrix& a, const SparseBitMatrix& b);
SparseBitMatrix block_diag(const std::vector<SparseBitMatrix>& blocks);

// Row-reduced basis supporting incremental insertion and membership.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t n) : n_(n) {}
    // returns true if v was independent of the current span
    bool insert(const BitVector& v);
    [[nodiscard]] BitVector reduce(BitVector v) const;
    [[nodiscard]] bool contains(const BitVector& v) const { return !reduce(v).any(); }
    [[nodiscard]] std::size_t rank() const { return rows_.size(); }
    [[nodiscard]] const std::vector<BitVector>& rows() const { return rows_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return piv_; }

private:
    std::size_t n_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> piv_;
};

std::size_t rank(const SparseBitMatrix& m);
std::size_t span_rank(const std::vector<BitVector>& vs);
std::optional<BitVector> solve(const SparseBitMatrix& m, const BitVector& b);
std::vector<BitVector> kernel_basis(const SparseBitMatrix& m);
// basis of the column space
std::vector<BitVector> image_basis(const SparseBitMatrix& m);
bool in_span(const std::vector<BitVector>& basis, const BitVector& v);

// Minimum weight over span(z) \ span(b). Throws EmptyCosetError if the spans agree.
std::size_t min_weight_nontrivial(const std::vector<BitVector>& z_basis, const std::vector<BitVector>& b_basis,
                                  BitVector* witness = nullptr);

// Calls f(i) with the bit flipped at each step of a reflected Gray code over `bits` bits (2^bits - 1 calls).
template <class F>
void gray_walk(unsigned bits, F&& f) {
    const std::uint64_t total = bits >= 64 ? 0 : (1ULL << bits);
    for (std::uint64_t t = 1; t < total; ++t) {
        f(static_cast<unsigned>(__builtin_ctzll(t)));
    }
}

inline unsigned popcount64(std::uint64_t x) { return static_cast<unsigned>(__builtin_popcountll(x)); }

}  // namespace lcf
