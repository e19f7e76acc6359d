#pragma once

#include "leibniz/rational.hpp"

#include <cstddef>
#include <vector>

namespace leibniz {

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

/// Dense rational matrix, row-major, 0-based indices.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    /// Matrix unit with a single 1 at (i, j).
    static Matrix unit(std::size_t n, std::size_t i, std::size_t j);
    static Matrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    bool is_zero() const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Rational& c, Matrix m);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

/// Exact matrix product; throws std::invalid_argument on shape mismatch.
Matrix mat_mul(const Matrix& a, const Matrix& b);

/// A*B - B*A for square matrices of equal size.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Matrix-vector product; throws std::invalid_argument on length mismatch.
Vec mat_vec(const Matrix& m, const Vec& v);

struct RrefResult {
    Matrix reduced;                        // same shape as the input
    std::size_t rank = 0;                  // number of nonzero rows of `reduced`
    std::vector<std::size_t> pivot_cols;   // strictly increasing
};

/// Unique reduced row-echelon form. Forward elimination is fraction-free
/// (integer cross-multiplication with content removal); the final
/// normalization back to rationals happens during back-substitution.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of the nullspace {v : M v = 0}, one vector per free column, in
/// free-column order. Each vector has its free coordinate equal to 1 and
/// the pivot coordinates solved from the reduced echelon form.
std::vector<Vec> kernel_basis(const Matrix& m);

/// True iff v lies in the span of `basis`. All vectors must have one
/// common length.
bool in_span(const std::vector<Vec>& basis, const Vec& v);

}  // namespace leibniz
