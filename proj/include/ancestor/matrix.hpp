#pragma once

#include <cstddef>
#include <vector>

#include "ancestor/field.hpp"

namespace anc {

using Vector = std::vector<Scalar>;

/// Dense matrix over a Field, stored row-major.
class Matrix {
public:
    Matrix(const Field& field, std::size_t rows, std::size_t cols);
    static Matrix fromRows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix identity(const Field& field, std::size_t n);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Vector row(std::size_t r) const;
    std::vector<Vector> rowVectors() const;
    void appendRow(const Vector& v);
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;

    /// Reduced row echelon form with zero rows removed.
    Matrix rref() const;
    /// Pivot columns of a matrix already in reduced row echelon form.
    std::vector<std::size_t> pivotColumns() const;
    std::size_t rank() const;
    bool rowSpaceContains(const Vector& v) const;

    bool operator==(const Matrix& o) const;

private:
    std::size_t reduceInPlace();

    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// Basis (RREF rows) of the sum of two row spaces.
Matrix rowSpaceSum(const Matrix& a, const Matrix& b);
/// Basis (RREF rows) of the intersection of two row spaces.
Matrix rowSpaceIntersect(const Matrix& a, const Matrix& b);
/// Basis (RREF rows) of {v : a v = 0}.
Matrix kernel(const Matrix& a);

}  // namespace anc
