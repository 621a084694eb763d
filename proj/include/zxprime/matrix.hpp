#pragma once

// Square matrices with entries in Z[y], and determinant plus first adjugate
// row by expansion along rows. Entries live in a ring without division, so
// elimination is not an option; minors over column subsets are memoized,
// giving O(n * 2^n) ring operations.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "zxprime/poly.hpp"

namespace zxprime {

class YPolyMatrix {
  public:
    explicit YPolyMatrix(std::size_t n) : n_(n), entries_(n * n) {
        if (n == 0) throw std::invalid_argument("YPolyMatrix: dimension must be >= 1");
    }

    std::size_t dim() const { return n_; }

    YPoly& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const YPoly& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    static YPolyMatrix identity(std::size_t n) {
        YPolyMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = YPoly(1);
        return m;
    }

  private:
    std::size_t n_;
    std::vector<YPoly> entries_;
};

namespace detail {

// Determinant of the submatrix taken from the given rows (in order) and the
// columns in `cols` (bitmask, popcount == rows.size()). Memoized on the
// column mask; the row index is implied by the mask's popcount.
class SubsetDet {
  public:
    SubsetDet(const YPolyMatrix& a, std::vector<std::size_t> rows)
        : a_(a), rows_(std::move(rows)) {}

    YPoly det(std::uint64_t cols) {
        if (cols == 0) return YPoly(1);
        auto it = memo_.find(cols);
        if (it != memo_.end()) return it->second;
        std::size_t remaining = static_cast<std::size_t>(__builtin_popcountll(cols));
        std::size_t row = rows_[rows_.size() - remaining];
        YPoly acc;
        int sign = 1;
        for (std::size_t j = 0; j < 64; ++j) {
            std::uint64_t bit = std::uint64_t(1) << j;
            if (!(cols & bit)) continue;
            const YPoly& e = a_.at(row, j);
            if (!e.is_zero()) {
                YPoly minor = det(cols & ~bit);
                acc += sign > 0 ? e * minor : -(e * minor);
            }
            sign = -sign;  // parity of the column's position among the set bits
        }
        memo_.emplace(cols, acc);
        return acc;
    }

  private:
    const YPolyMatrix& a_;
    std::vector<std::size_t> rows_;
    std::unordered_map<std::uint64_t, YPoly> memo_;
};

}  // namespace detail

struct DetAdjRow {
    YPoly det;
    std::vector<YPoly> adj_row0;  // adj[0][j], i.e. the cofactor of entry (j, 0)
};

// det and the first row of the adjugate, satisfying
//   sum_j adj_row0[j] * A[j][k] == det * delta_{0k}.
inline DetAdjRow det_adjugate(const YPolyMatrix& a) {
    std::size_t n = a.dim();
    if (n > 40) throw std::invalid_argument("det_adjugate: dimension too large");
    std::vector<std::size_t> all_rows(n);
    for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;
    std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;

    DetAdjRow result;
    result.det = detail::SubsetDet(a, all_rows).det(full);
    result.adj_row0.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> rows;
        rows.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            if (i != j) rows.push_back(i);
        YPoly minor = detail::SubsetDet(a, rows).det(full & ~std::uint64_t(1));
        result.adj_row0[j] = (j % 2 == 0) ? minor : -minor;
    }
    return result;
}

}  // namespace zxprime
