#include "esdef/linalg.hpp"

#include "esdef/errors.hpp"

#include <algorithm>

namespace esdef {

Rational determinant(DenseMatrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m[pivot][col]))
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (is_zero(m[r][col]))
                continue;
            Rational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

std::optional<std::vector<Rational>> solve(DenseMatrix m, std::vector<Rational> rhs)
{
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && is_zero(m[pivot][col]))
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        Rational inv = 1 / m[col][col];
        for (std::size_t c = col; c < n; ++c)
            m[col][c] *= inv;
        rhs[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(m[r][col]))
                continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= factor * m[col][c];
            rhs[r] -= factor * rhs[col];
        }
    }
    return rhs;
}

SparseRow make_sparse(const std::vector<Rational>& dense)
{
    SparseRow row;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!is_zero(dense[i]))
            row.emplace_back(i, dense[i]);
    return row;
}

SparseRow axpy(const SparseRow& a, const Rational& factor, const SparseRow& b)
{
    SparseRow out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.emplace_back(ib->first, -factor * ib->second);
            ++ib;
        } else {
            Rational v = ia->second - factor * ib->second;
            if (!is_zero(v))
                out.emplace_back(ia->first, std::move(v));
            ++ia;
            ++ib;
        }
    }
    return out;
}

SparseRow RowEchelon::reduce(SparseRow row) const
{
    std::size_t scan = 0;
    while (scan < row.size()) {
        const std::size_t col = row[scan].first;
        const std::size_t r = pivot_row_[col];
        if (r == npos) {
            ++scan;
            continue;
        }
        Rational factor = row[scan].second;
        row = axpy(row, factor, rows_[r]);
        // entries before `scan` are untouched: stored rows start at their pivot
    }
    return row;
}

bool RowEchelon::add_row(SparseRow row)
{
    // Only leading entries need eliminating for an echelon form.
    while (!row.empty()) {
        const std::size_t col = row.front().first;
        const std::size_t r = pivot_row_[col];
        if (r == npos)
            break;
        Rational factor = row.front().second;
        row = axpy(row, factor, rows_[r]);
    }
    if (row.empty())
        return false;
    if (row.front().first >= columns_)
        throw Error(ErrorCode::InvalidArgument, "row column out of range");
    Rational inv = 1 / row.front().second;
    for (auto& [c, v] : row)
        v *= inv;
    pivot_row_[row.front().first] = rows_.size();
    rows_.push_back(std::move(row));
    fully_reduced_ = false;
    return true;
}

void RowEchelon::reduce_fully()
{
    if (fully_reduced_)
        return;
    // Process rows by decreasing pivot column so each row is reduced against
    // rows that are already fully reduced.
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rows_[a].front().first > rows_[b].front().first;
    });
    for (std::size_t idx : order) {
        SparseRow& row = rows_[idx];
        std::size_t scan = 1;
        while (scan < row.size()) {
            const std::size_t r = pivot_row_[row[scan].first];
            if (r == npos || r == idx) {
                ++scan;
                continue;
            }
            Rational factor = row[scan].second;
            row = axpy(row, factor, rows_[r]);
        }
    }
    fully_reduced_ = true;
}

std::vector<SparseRow> RowEchelon::kernel_basis(const std::vector<std::size_t>& active) const
{
    if (!fully_reduced_)
        throw Error(ErrorCode::InternalInconsistency, "kernel_basis needs a reduced echelon form");
    std::vector<SparseRow> basis;
    for (std::size_t free_col : active) {
        if (is_pivot(free_col))
            continue;
        SparseRow v;
        v.emplace_back(free_col, Rational(1));
        for (const auto& row : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), free_col,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it != row.end() && it->first == free_col)
                v.emplace_back(row.front().first, -it->second);
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace esdef
