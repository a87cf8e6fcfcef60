#pragma once

#include "esdef/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace esdef {

using DenseMatrix = std::vector<std::vector<Rational>>;

Rational determinant(DenseMatrix m);

/// Solves m * x = rhs for square invertible m; nullopt if m is singular.
std::optional<std::vector<Rational>> solve(DenseMatrix m, std::vector<Rational> rhs);

/// Sparse row: (column, value) pairs, strictly increasing columns, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

SparseRow make_sparse(const std::vector<Rational>& dense);

/// Incremental row echelon form over Q.
///
/// The pivot of a row is its smallest column, so callers choose the column
/// order to decide which unknowns are eliminated first. Rows are kept
/// normalized (pivot entry 1); `reduce_fully` turns the echelon form into
/// the reduced row echelon form.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t columns) : columns_(columns), pivot_row_(columns, npos) {}

    /// Reduces `row` against the stored rows; stores the remainder if nonzero.
    bool add_row(SparseRow row);

    /// Remainder of `row` after elimination, without storing it.
    SparseRow reduce(SparseRow row) const;

    void reduce_fully();

    std::size_t rank() const { return rows_.size(); }
    std::size_t columns() const { return columns_; }
    const std::vector<SparseRow>& rows() const { return rows_; }
    bool is_pivot(std::size_t column) const { return pivot_row_[column] != npos; }

    /// Basis of the solution space of the homogeneous system restricted to
    /// the given columns; every column outside `active` must be absent from
    /// the stored rows (they are treated as fixed zero). Requires
    /// `reduce_fully` to have been called.
    std::vector<SparseRow> kernel_basis(const std::vector<std::size_t>& active) const;

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t columns_;
    std::vector<SparseRow> rows_;
    std::vector<std::size_t> pivot_row_;
    bool fully_reduced_ = true;
};

/// a - factor * b on sparse rows.
SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b);

}  // namespace esdef
