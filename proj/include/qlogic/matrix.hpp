#pragma once

#include <vector>

#include "qlogic/scalar.hpp"

namespace qlogic {

using Vector = std::vector<Scalar>;

/// Hermitian inner product <u,v> = sum conj(u_k) * v_k.
Scalar inner(const Vector& u, const Vector& v);

bool is_zero_vector(const Vector& v);

/// Dense matrix of exact scalars; just enough for projector algebra.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    Matrix operator*(const Matrix& other) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix scaled(const Scalar& c) const;
    Matrix conj_transpose() const;
    Scalar trace() const;
    Vector apply(const Vector& v) const;

    bool is_zero() const;
    bool is_hermitian() const { return *this == conj_transpose(); }

    bool operator==(const Matrix& other) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

} // namespace qlogic
