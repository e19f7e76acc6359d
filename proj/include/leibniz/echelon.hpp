#pragma once

#include "leibniz/matrix.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace leibniz {

/// Sparse integer row: (column, coefficient) terms sorted by column,
/// coefficients nonzero.
using SparseIntRow = std::vector<std::pair<std::uint32_t, mpz_class>>;

/// Sparse rational row in the same layout.
using SparseRatRow = std::vector<std::pair<std::uint32_t, Rational>>;

/// Clears denominators of a rational row and strips zeros.
SparseIntRow to_int_row(const Vec& row);

/// Incremental row-echelon accumulator over exact rationals.
///
/// Rows are stored as primitive integer vectors (content divided out,
/// leading coefficient positive). An incoming row is reduced against the
/// stored pivot rows by integer cross-multiplication, so forward
/// elimination never touches rational arithmetic and entry growth stays
/// bounded by minors of the input. Rows are fed in a caller-chosen order;
/// the reduced echelon form and everything derived from it are
/// order-independent because the reduced form of a row space is unique.
class EchelonForm {
public:
    explicit EchelonForm(std::size_t cols);

    /// Adds a row; returns true iff it enlarged the row space.
    bool add_row(const Vec& row);
    bool add_row(SparseIntRow row);

    /// Membership test that leaves the accumulator untouched.
    bool reduces_to_zero(const Vec& row) const;

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }
    std::vector<std::size_t> pivot_cols() const;  // sorted ascending

    /// Rows of the unique reduced row-echelon form, sorted by pivot column.
    std::vector<SparseRatRow> rref_rows() const;

    /// Nullspace basis of the accumulated row set (vectors of length cols()),
    /// one per free column, in free-column order.
    std::vector<Vec> kernel() const;

private:
    void reduce(SparseIntRow& row) const;

    std::size_t cols_;
    std::vector<SparseIntRow> rows_;      // unordered; pivots all distinct
    std::vector<std::uint32_t> pivots_;   // pivot column of rows_[i]
    std::vector<std::int32_t> col_owner_; // column -> row index or -1
};

}  // namespace leibniz
