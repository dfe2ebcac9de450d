#include "ancestor/matrix.hpp"

namespace anc {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::fromRows(const Field& field, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(field, 0, cols);
    m.data_.reserve(rows.size() * cols);
    for (const auto& r : rows) m.appendRow(r);
    return m;
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Vector> Matrix::rowVectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

void Matrix::appendRow(const Vector& v) {
    if (v.size() != cols_) throw PreconditionError("row length mismatch");
    for (const auto& s : v) {
        if (s.field() != field_) throw PreconditionError("field mismatch");
        data_.push_back(s);
    }
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("dimension mismatch in product");
    Matrix p(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.isZero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (!o.at(k, c).isZero()) p.at(r, c) += a * o.at(k, c);
        }
    return p;
}

std::size_t Matrix::reduceInPlace() {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows_ && at(pivot, c).isZero()) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < cols_; ++k) std::swap(at(pivot, k), at(rank, k));
        Scalar inv = at(rank, c).inverse();
        for (std::size_t k = c; k < cols_; ++k)
            if (!at(rank, k).isZero()) at(rank, k) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || at(r, c).isZero()) continue;
            Scalar factor = at(r, c);
            for (std::size_t k = c; k < cols_; ++k)
                if (!at(rank, k).isZero()) at(r, k) -= factor * at(rank, k);
        }
        ++rank;
    }
    return rank;
}

Matrix Matrix::rref() const {
    Matrix m = *this;
    std::size_t rank = m.reduceInPlace();
    m.data_.resize(rank * cols_, Scalar::zero(field_));
    m.rows_ = rank;
    return m;
}

std::vector<std::size_t> Matrix::pivotColumns() const {
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < rows_; ++r) {
        std::size_t c = 0;
        while (c < cols_ && at(r, c).isZero()) ++c;
        if (c == cols_) break;
        pivots.push_back(c);
    }
    return pivots;
}

std::size_t Matrix::rank() const {
    Matrix m = *this;
    return m.reduceInPlace();
}

bool Matrix::rowSpaceContains(const Vector& v) const {
    Matrix m = *this;
    std::size_t r0 = m.reduceInPlace();
    m.appendRow(v);
    return m.reduceInPlace() == r0;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix rowSpaceSum(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw PreconditionError("dimension mismatch in sum");
    Matrix m = a;
    for (std::size_t r = 0; r < b.rows(); ++r) m.appendRow(b.row(r));
    return m.rref();
}

Matrix kernel(const Matrix& a) {
    Matrix r = a.rref();
    auto pivots = r.pivotColumns();
    std::vector<bool> isPivot(a.cols(), false);
    for (auto p : pivots) isPivot[p] = true;
    Matrix basis(a.field(), 0, a.cols());
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (isPivot[free]) continue;
        Vector v(a.cols(), Scalar::zero(a.field()));
        v[free] = Scalar::one(a.field());
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
        basis.appendRow(v);
    }
    return basis.rref();
}

Matrix rowSpaceIntersect(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw PreconditionError("dimension mismatch in intersection");
    Matrix ar = a.rref();
    Matrix br = b.rref();
    const std::size_t n = a.cols();
    if (ar.rows() == 0 || br.rows() == 0) return Matrix(a.field(), 0, n);
    // Solve u*ar = v*br via the kernel of the stacked transpose.
    Matrix stacked(a.field(), n, ar.rows() + br.rows());
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < ar.rows(); ++i) stacked.at(c, i) = ar.at(i, c);
        for (std::size_t i = 0; i < br.rows(); ++i) stacked.at(c, ar.rows() + i) = -br.at(i, c);
    }
    Matrix k = kernel(stacked);
    Matrix out(a.field(), 0, n);
    for (std::size_t r = 0; r < k.rows(); ++r) {
        Vector v(n, Scalar::zero(a.field()));
        for (std::size_t i = 0; i < ar.rows(); ++i) {
            if (k.at(r, i).isZero()) continue;
            for (std::size_t c = 0; c < n; ++c) v[c] += k.at(r, i) * ar.at(i, c);
        }
        out.appendRow(v);
    }
    return out.rref();
}

}  // namespace anc
