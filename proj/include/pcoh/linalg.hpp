#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "pcoh/rational.hpp"

namespace pcoh {

/// Sparse vector over Q(i): (column, coefficient) pairs sorted by column,
/// no zero coefficients.
using SparseRow = std::vector<std::pair<int, GaussianRational>>;

inline GaussianRational row_coefficient(const SparseRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != row.end() && it->first == col) ? it->second : GaussianRational();
}

/// target += s * src
inline void row_axpy(SparseRow& target, const GaussianRational& s, const SparseRow& src) {
    if (s.is_zero()) return;
    SparseRow out;
    out.reserve(target.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < target.size() || j < src.size()) {
        if (j == src.size() || (i < target.size() && target[i].first < src[j].first)) {
            out.push_back(target[i++]);
        } else if (i == target.size() || src[j].first < target[i].first) {
            out.emplace_back(src[j].first, s * src[j].second);
            if (out.back().second.is_zero()) out.pop_back();
            ++j;
        } else {
            GaussianRational c = target[i].second + s * src[j].second;
            if (!c.is_zero()) out.emplace_back(target[i].first, c);
            ++i;
            ++j;
        }
    }
    target = std::move(out);
}

inline void row_scale(SparseRow& row, const GaussianRational& s) {
    for (auto& [c, v] : row) v *= s;
}

struct RrefResult {
    std::vector<SparseRow> rows;  // the nonzero rows, pivot columns ascending
    std::vector<int> pivots;      // pivot column of rows[i]
    int rank = 0;
    int cols = 0;
};

/// Exact Gauss-Jordan reduced row echelon form. Pivot choice is
/// deterministic: columns are scanned in canonical order and the first
/// remaining row with a nonzero entry in the current column is used.
inline RrefResult rref(std::vector<SparseRow> rows, int ncols) {
    RrefResult res;
    res.cols = ncols;
    std::size_t next = 0;  // rows[0..next) are settled pivot rows
    for (int c = 0; c < ncols && next < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (!row_coefficient(rows[r], c).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[next], rows[pivot]);
        row_scale(rows[next], row_coefficient(rows[next], c).inv());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next) continue;
            GaussianRational v = row_coefficient(rows[r], c);
            if (!v.is_zero()) row_axpy(rows[r], -v, rows[next]);
        }
        res.pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    res.rows = std::move(rows);
    res.rank = static_cast<int>(next);
    return res;
}

/// Canonical basis of the null space of the matrix whose RREF is given:
/// one vector per free column, re-reduced to RREF form so representatives
/// read off deterministically.
inline RrefResult nullspace(const RrefResult& red) {
    std::vector<bool> is_pivot(red.cols, false);
    for (int p : red.pivots) is_pivot[p] = true;
    std::vector<SparseRow> basis;
    for (int f = 0; f < red.cols; ++f) {
        if (is_pivot[f]) continue;
        SparseRow v;
        for (int i = 0; i < red.rank; ++i) {
            GaussianRational e = row_coefficient(red.rows[i], f);
            if (!e.is_zero()) v.emplace_back(red.pivots[i], -e);
        }
        v.emplace_back(f, GaussianRational(1));
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return rref(std::move(basis), red.cols);
}

/// True iff A * B = 0 for column-major sparse matrices (column j holds
/// (row, coeff) pairs). Used for the exact sigma-squared-vanishes check.
inline bool product_is_zero(const std::vector<SparseRow>& a_cols, const std::vector<SparseRow>& b_cols) {
    for (const auto& bcol : b_cols) {
        SparseRow acc;
        for (const auto& [k, c] : bcol) row_axpy(acc, c, a_cols[k]);
        if (!acc.empty()) return false;
    }
    return true;
}

}  // namespace pcoh
