#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace riordan {

// Lower-triangular array: row n stores entries (n, 0) .. (n, n).
class TriMatrix {
public:
    TriMatrix() = default;

    explicit TriMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
        for (std::size_t n = 0; n < rows_.size(); ++n) {
            if (rows_[n].size() != n + 1) {
                throw invariant_error("triangle row " + std::to_string(n) + " has " +
                                      std::to_string(rows_[n].size()) + " entries");
            }
        }
    }

    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<Rational>& row(std::size_t n) const { return rows_.at(n); }
    const std::vector<std::vector<Rational>>& rows() const noexcept { return rows_; }

    // Entries above the diagonal are zero.
    Rational entry(std::size_t n, std::size_t k) const { return k <= n ? rows_.at(n)[k] : Rational(0); }

    Rational row_sum(std::size_t n) const {
        Rational s;
        for (const auto& v : rows_.at(n)) {
            s += v;
        }
        return s;
    }

    friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

private:
    std::vector<std::vector<Rational>> rows_;
};

// Dense rectangular matrix, used for production matrices.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> column(std::size_t j) const {
        std::vector<Rational> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            out[i] = (*this)(i, j);
        }
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw order_error("matrix shapes do not compose");
        }
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t m = 0; m < a.cols_; ++m) {
                const Rational& x = a(i, m);
                if (x.is_zero()) {
                    continue;
                }
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    c(i, j) += x * b(m, j);
                }
            }
        }
        return c;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

// Square dense copy of a triangle, zero above the diagonal.
inline Matrix to_dense(const TriMatrix& t) {
    Matrix m(t.size(), t.size());
    for (std::size_t n = 0; n < t.size(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            m(n, k) = t.entry(n, k);
        }
    }
    return m;
}

} // namespace riordan
