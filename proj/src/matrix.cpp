#include "leibniz/matrix.hpp"

#include "leibniz/echelon.hpp"

#include <stdexcept>

namespace leibniz {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m.at(i, j) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec out(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

Vec Matrix::col(std::size_t c) const {
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Matrix operator*(const Rational& c, Matrix m) {
    for (auto& v : m.a_) v *= c;
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    return mat_mul(a, b) - mat_mul(b, a);
}

Vec mat_vec(const Matrix& m, const Vec& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: length mismatch");
    Vec out(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Rational& mij = m.at(i, j);
            if (!mij.is_zero()) out[i] += mij * v[j];
        }
    }
    return out;
}

RrefResult rref(const Matrix& m) {
    EchelonForm ech(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) ech.add_row(m.row(r));

    RrefResult out;
    out.rank = ech.rank();
    out.pivot_cols = ech.pivot_cols();
    out.reduced = Matrix(m.rows(), m.cols());
    const auto rows = ech.rref_rows();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [col, v] : rows[r]) out.reduced.at(r, col) = v;
    return out;
}

std::size_t rank(const Matrix& m) {
    EchelonForm ech(m.cols());
    for (std::size_t r = 0; r < m.rows() && ech.rank() < m.cols(); ++r) ech.add_row(m.row(r));
    return ech.rank();
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    EchelonForm ech(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) ech.add_row(m.row(r));
    return ech.kernel();
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    for (const auto& b : basis)
        if (b.size() != v.size()) throw std::invalid_argument("in_span: length mismatch");
    EchelonForm ech(v.size());
    for (const auto& b : basis) ech.add_row(b);
    return ech.reduces_to_zero(v);
}

}  // namespace leibniz
