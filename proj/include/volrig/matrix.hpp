#ifndef VOLRIG_MATRIX_HPP
#define VOLRIG_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "volrig/errors.hpp"
#include "volrig/field.hpp"

namespace volrig {

// Dense row-major matrix over an exact field, with optional row/column labels
// (opaque tags used by the rigidity and certification code).
template <FieldScalar F>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void set_row_labels(std::vector<std::string> labels) {
        if (!labels.empty() && labels.size() != rows_)
            throw DimensionError("row label count does not match rows");
        row_labels_ = std::move(labels);
    }
    void set_col_labels(std::vector<std::string> labels) {
        if (!labels.empty() && labels.size() != cols_)
            throw DimensionError("col label count does not match cols");
        col_labels_ = std::move(labels);
    }
    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        t.row_labels_ = col_labels_;
        t.col_labels_ = row_labels_;
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const F& aik = (*this)(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    r(i, j) += aik * o(k, j);
            }
        return r;
    }

    std::vector<F> row(std::size_t i) const {
        return std::vector<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    std::vector<F> mul_vector(const std::vector<F>& x) const {
        if (x.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
        std::vector<F> y(rows_, F(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    Matrix submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
        Matrix r(ri.size(), ci.size());
        for (std::size_t i = 0; i < ri.size(); ++i)
            for (std::size_t j = 0; j < ci.size(); ++j) r(i, j) = (*this)(ri[i], ci[j]);
        return r;
    }

    bool is_zero() const {
        for (const F& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<F> a_;
    std::vector<std::string> row_labels_, col_labels_;
};

} // namespace volrig

#endif
