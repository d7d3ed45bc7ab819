#include "qlogic/matrix.hpp"

namespace qlogic {

Scalar inner(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw DimensionMismatch("inner product of unequal-length vectors");
    Scalar s;
    for (size_t k = 0; k < u.size(); ++k) s += u[k].conj() * v[k];
    return s;
}

bool is_zero_vector(const Vector& v) {
    for (const Scalar& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
    return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& x = at(r, k);
            if (x.is_zero()) continue;
            for (int c = 0; c < other.cols_; ++c) out.at(r, c) += x * other.at(k, c);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix sum shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + other.a_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionMismatch("matrix difference shape mismatch");
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - other.a_[k];
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * c;
    return out;
}

Matrix Matrix::conj_transpose() const {
    Matrix out(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c).conj();
    return out;
}

Scalar Matrix::trace() const {
    Scalar s;
    for (int k = 0; k < rows_ && k < cols_; ++k) s += at(k, k);
    return s;
}

Vector Matrix::apply(const Vector& v) const {
    if (int(v.size()) != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

bool Matrix::is_zero() const {
    for (const Scalar& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace qlogic
