#ifndef LOOPH_LINALG_HPP
#define LOOPH_LINALG_HPP

/// Exact dense linear algebra over the Scalar field, sized for the ranks
/// that show up here (a few hundred columns at most).

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace looph {

using ScalarVec = std::vector<Scalar>;

/// Incremental row-echelon accumulator.
class RowEchelon {
  public:
    explicit RowEchelon(size_t cols) : cols_(cols) {}

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    /// Reduce v against the current rows; returns the residual.
    ScalarVec residual(ScalarVec v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Scalar& x = v[pivots_[r]];
            if (x.is_zero()) continue;
            Scalar f = x;  // rows are normalized to pivot 1
            for (size_t c = 0; c < cols_; ++c)
                if (!rows_[r][c].is_zero()) v[c] -= f * rows_[r][c];
        }
        return v;
    }

    /// True when v was independent of the rows seen so far.
    bool insert(ScalarVec v) {
        v = residual(std::move(v));
        size_t p = 0;
        while (p < cols_ && v[p].is_zero()) ++p;
        if (p == cols_) return false;
        Scalar inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(ScalarVec v) const {
        v = residual(std::move(v));
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

  private:
    size_t cols_;
    std::vector<ScalarVec> rows_;
    std::vector<size_t> pivots_;
};

inline size_t rank_of(const std::vector<ScalarVec>& rows, size_t cols) {
    RowEchelon re(cols);
    for (const auto& r : rows) re.insert(r);
    return re.rank();
}

/// Basis of the right kernel {x : M x = 0} for M given as rows.
inline std::vector<ScalarVec> kernel_basis(const std::vector<ScalarVec>& rows, size_t cols) {
    // Gauss-Jordan on a working copy
    std::vector<ScalarVec> m = rows;
    std::vector<std::optional<size_t>> pivot_row_of_col(cols);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < m.size(); ++c) {
        size_t sel = rank;
        while (sel < m.size() && m[sel][c].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[rank], m[sel]);
        Scalar inv = m[rank][c].inverse();
        for (auto& x : m[rank]) x *= inv;
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            Scalar f = m[r][c];
            for (size_t cc = 0; cc < cols; ++cc)
                if (!m[rank][cc].is_zero()) m[r][cc] -= f * m[rank][cc];
        }
        pivot_row_of_col[c] = rank;
        ++rank;
    }
    std::vector<ScalarVec> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (pivot_row_of_col[c]) continue;
        ScalarVec v(cols, Scalar(0));
        v[c] = Scalar(1);
        for (size_t cc = 0; cc < cols; ++cc)
            if (pivot_row_of_col[cc]) v[cc] = -m[*pivot_row_of_col[cc]][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace looph

#endif
