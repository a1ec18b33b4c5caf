#pragma once

#include <initializer_list>
#include <vector>

#include "qtl/core/error.hpp"
#include "qtl/core/rational.hpp"

namespace qtl {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init)
    {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        for (auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) fail(ErrorCode::invalid_input, "ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }
    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    T& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) fail(ErrorCode::invalid_input, "matrix shape mismatch in product");
        Matrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }
    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::vector<T> apply(const std::vector<T>& v) const
    {
        if (static_cast<int>(v.size()) != cols_) fail(ErrorCode::invalid_input, "vector length mismatch");
        std::vector<T> out(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& a);
bool is_diagonal(const IntMatrix& a);
bool is_symmetric(const IntMatrix& a);

Integer determinant(const IntMatrix& a);
RatMatrix inverse(const IntMatrix& a);
RatMatrix inverse(const RatMatrix& a);

struct SmithForm {
    IntMatrix U, D, V;  // U * A * V == D
};
SmithForm smith_normal_form(const IntMatrix& a);

// Leading principal minors det(A[0..k, 0..k]), k = 1..n.
std::vector<Integer> leading_minors(const IntMatrix& a);
// 0 when A is negative definite, otherwise the 1-based index of the first failing minor.
int failing_minor_index(const IntMatrix& a);
bool is_negative_definite(const IntMatrix& a);

// A = L diag(d) L^T for a symmetric positive definite rational matrix, L unit lower triangular.
struct LdlFactor {
    RatMatrix L;
    std::vector<Rational> d;
};
LdlFactor ldl_decompose(const RatMatrix& a);

Rational quadratic_form(const RatMatrix& a, const std::vector<Rational>& x);

// Square integer matrix with its exact inverse and Smith form computed once.
class IntegerMatrixData {
public:
    explicit IntegerMatrixData(IntMatrix a);

    const IntMatrix& matrix() const { return a_; }
    const RatMatrix& inverse() const { return inv_; }
    const SmithForm& smith() const { return snf_; }
    const Integer& determinant() const { return det_; }
    int size() const { return a_.rows(); }

private:
    IntMatrix a_;
    RatMatrix inv_;
    SmithForm snf_;
    Integer det_;
};

}  // namespace qtl
