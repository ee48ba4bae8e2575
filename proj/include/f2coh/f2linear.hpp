#ifndef F2COH_F2LINEAR_HPP
#define F2COH_F2LINEAR_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "f2coh/error.hpp"

namespace f2coh {

// Packed vector over GF(2). Unused high bits of the last word stay zero,
// so equality is plain word comparison.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t dim) : dim_(dim), words_((dim + 63) / 64, 0) {}

    static F2Vector unit(std::size_t dim, std::size_t i) {
        F2Vector v(dim);
        v.set(i, true);
        return v;
    }

    std::size_t dim() const { return dim_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i, bool b) {
        std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (b)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    F2Vector& operator+=(const F2Vector& o) {
        if (o.dim_ != dim_)
            throw DimensionMismatch("F2Vector add: dimension mismatch");
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }

    friend F2Vector operator+(F2Vector a, const F2Vector& b) {
        a += b;
        return a;
    }

    bool is_zero() const {
        for (std::uint64_t w : words_)
            if (w)
                return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (std::uint64_t w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool operator==(const F2Vector& o) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

private:
    std::size_t dim_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense bit matrix with packed rows.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    static F2Matrix identity(std::size_t n) {
        F2Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }

    void set(std::size_t r, std::size_t c, bool b) {
        std::uint64_t m = std::uint64_t{1} << (c & 63);
        if (b)
            data_[r * wpr_ + (c >> 6)] |= m;
        else
            data_[r * wpr_ + (c >> 6)] &= ~m;
    }

    void flip(std::size_t r, std::size_t c) {
        data_[r * wpr_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    // A * x with x indexed by columns.
    F2Vector apply(const F2Vector& x) const {
        if (x.dim() != cols_)
            throw DimensionMismatch("F2Matrix apply: dimension mismatch");
        F2Vector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            std::uint64_t acc = 0;
            const std::uint64_t* row = &data_[r * wpr_];
            for (std::size_t w = 0; w < wpr_; ++w)
                acc ^= row[w] & x.words()[w];
            out.set(r, std::popcount(acc) & 1);
        }
        return out;
    }

    F2Matrix times(const F2Matrix& o) const {
        if (cols_ != o.rows_)
            throw DimensionMismatch("F2Matrix times: dimension mismatch");
        F2Matrix out(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k)
                if (get(r, k))
                    for (std::size_t w = 0; w < o.wpr_; ++w)
                        out.data_[r * out.wpr_ + w] ^= o.data_[k * o.wpr_ + w];
        return out;
    }

    F2Matrix operator+(const F2Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("F2Matrix add: dimension mismatch");
        F2Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i)
            out.data_[i] ^= o.data_[i];
        return out;
    }

    bool operator==(const F2Matrix& o) const = default;

    void xor_row(std::size_t src, std::size_t dst) {
        std::uint64_t* d = &data_[dst * wpr_];
        const std::uint64_t* s = &data_[src * wpr_];
        for (std::size_t w = 0; w < wpr_; ++w)
            d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        for (std::size_t w = 0; w < wpr_; ++w)
            std::swap(data_[a * wpr_ + w], data_[b * wpr_ + w]);
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

namespace detail {

// Gauss-Jordan with leftmost-column, topmost-row pivoting. Returns pivot
// columns; the matrix (and optional rhs) are reduced in place.
inline std::vector<std::size_t> reduce(F2Matrix& A, F2Vector* b) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < A.cols() && row < A.rows(); ++col) {
        std::size_t p = row;
        while (p < A.rows() && !A.get(p, col))
            ++p;
        if (p == A.rows())
            continue;
        A.swap_rows(p, row);
        if (b && p != row) {
            bool t = b->get(p);
            b->set(p, b->get(row));
            b->set(row, t);
        }
        for (std::size_t r = 0; r < A.rows(); ++r)
            if (r != row && A.get(r, col)) {
                A.xor_row(row, r);
                if (b && b->get(row))
                    b->flip(r);
            }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(F2Matrix A) {
    return detail::reduce(A, nullptr).size();
}

// First solution of A x = b under the fixed pivot order: pivot variables are
// read off the reduced system, free variables are zero. Returns nullopt when
// the system is inconsistent.
inline std::optional<F2Vector> solve(F2Matrix A, F2Vector b) {
    if (A.rows() != b.dim())
        throw DimensionMismatch("solve: rows != dim(b)");
    std::vector<std::size_t> pivots = detail::reduce(A, &b);
    for (std::size_t r = pivots.size(); r < A.rows(); ++r)
        if (b.get(r))
            return std::nullopt;
    F2Vector x(A.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x.set(pivots[i], b.get(i));
    return x;
}

} // namespace f2coh

#endif
