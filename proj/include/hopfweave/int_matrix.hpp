#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "integer.hpp"

namespace hopfweave {

/// Dense row-major integer matrix. A 0x0 matrix is a valid value.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (long long v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, std::size_t cols_if_empty = 0) {
        IntMatrix m(rows.size(), rows.empty() ? cols_if_empty : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Entries in row-major order.
    std::span<const Integer> entries() const noexcept { return data_; }

    std::vector<Integer> row(std::size_t r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
    }
    std::vector<Integer> column(std::size_t c) const {
        std::vector<Integer> out;
        out.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
        return out;
    }
    std::vector<std::vector<Integer>> to_rows() const {
        std::vector<std::vector<Integer>> out;
        for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        require_same_shape(a, b);
        IntMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        require_same_shape(a, b);
        IntMatrix out = a;
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
        return out;
    }
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? ",[" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? "," : "") << m(r, c);
            os << ']';
        }
        return os << ']';
    }

private:
    static void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

inline IntMatrix power(const IntMatrix& m, unsigned exponent) {
    if (!m.is_square()) throw std::invalid_argument("matrix power of non-square matrix");
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (exponent) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent) base = base * base;
    }
    return result;
}

}  // namespace hopfweave
