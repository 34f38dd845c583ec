#pragma once

#include "lieder/rational.hpp"

namespace lieder {

// Dense row-major matrix over Q. Small (n <= 10 in practice), exact.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c)) {}

    static Matrix identity(int n);
    static Matrix zero(int n) { return Matrix(n, n); }

    Rat& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    bool is_square() const { return rows == cols; }
    bool is_zero() const;

    bool operator==(const Matrix& o) const = default;
};

Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator*(const Rat& s, const Matrix& x);

Vec apply(const Matrix& m, const Vec& v);
Matrix transpose(const Matrix& m);
Rat trace(const Matrix& m);
Matrix commutator(const Matrix& x, const Matrix& y);
Matrix mat_pow(const Matrix& m, int e);

// Exact determinant via pivoted rational elimination. Throws on non-square input.
Rat det(const Matrix& m);

// Exact inverse; InternalInconsistency when singular (callers check det first).
Matrix inverse(const Matrix& m);

// Endomorphisms of an n-dim algebra live in Q^(n*n), row-major. This order is
// part of the interchange contract for basis files.
Vec vectorize(const Matrix& m);
Matrix unvectorize(const Vec& v, int n);

std::string matrix_str(const Matrix& m);

} // namespace lieder
