#include "slicekit/linalg.hpp"

#include <stdexcept>

namespace slicekit {

void RowBasis::reduce(Vec& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& c = v[pivots_[r]];
        if (c != 0) {
            Rat factor = c;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= factor * rows_[r][j];
        }
    }
}

bool RowBasis::insert(Vec v) {
    reduce(v);
    int pivot = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) { pivot = static_cast<int>(j); break; }
    if (pivot < 0) return false;
    Rat lead = v[pivot];
    for (auto& c : v) c /= lead;
    // Clear the new pivot column in the existing rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rat c = rows_[r][pivot];
        if (c != 0)
            for (std::size_t j = 0; j < v.size(); ++j) rows_[r][j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool RowBasis::contains(Vec v) const {
    reduce(v);
    for (const auto& c : v)
        if (c != 0) return false;
    return true;
}

int rank(const Mat& rows) {
    RowBasis b;
    for (const auto& r : rows) b.insert(r);
    return b.rank();
}

std::optional<Vec> solve_consistent(Mat A, Vec b) {
    std::size_t m = A.size();
    std::size_t n = m ? A[0].size() : 0;
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && A[sel][col] == 0) ++sel;
        if (sel == m) continue;
        std::swap(A[sel], A[row]);
        std::swap(b[sel], b[row]);
        Rat lead = A[row][col];
        for (auto& c : A[row]) c /= lead;
        b[row] /= lead;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row) continue;
            Rat c = A[r][col];
            if (c != 0) {
                for (std::size_t j = col; j < n; ++j) A[r][j] -= c * A[row][j];
                b[r] -= c * b[row];
            }
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (b[r] != 0) return std::nullopt;
    Vec x(n, Rat(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return x;
}

GramSolver::GramSolver(const Mat& G) : n_(G.size()) {
    reduced_ = G;
    transform_.assign(n_, Vec(n_, Rat(0)));
    for (std::size_t i = 0; i < n_; ++i) transform_[i][i] = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n_ && row < n_; ++col) {
        std::size_t sel = row;
        while (sel < n_ && reduced_[sel][col] == 0) ++sel;
        if (sel == n_) continue;
        std::swap(reduced_[sel], reduced_[row]);
        std::swap(transform_[sel], transform_[row]);
        Rat lead = reduced_[row][col];
        for (auto& c : reduced_[row]) c /= lead;
        for (auto& c : transform_[row]) c /= lead;
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == row) continue;
            Rat c = reduced_[r][col];
            if (c != 0) {
                for (std::size_t j = 0; j < n_; ++j) {
                    reduced_[r][j] -= c * reduced_[row][j];
                    transform_[r][j] -= c * transform_[row][j];
                }
            }
        }
        pivot_cols_.push_back(static_cast<int>(col));
        ++row;
    }
}

Vec GramSolver::solve(const Vec& b) const {
    if (b.size() != n_) throw std::invalid_argument("rhs size mismatch");
    Vec x(n_, Rat(0));
    // RREF with free variables zeroed: x_{pivot_r} = (T b)_r. Rows of the
    // RREF beyond the rank must see a zero rhs; anything else means the
    // system was not a consistent Gram system.
    for (std::size_t r = 0; r < n_; ++r) {
        Rat tb(0);
        for (std::size_t j = 0; j < n_; ++j)
            if (transform_[r][j] != 0) tb += transform_[r][j] * b[j];
        if (r < pivot_cols_.size()) {
            x[pivot_cols_[r]] = tb;
        } else if (tb != 0) {
            throw std::logic_error("inconsistent Gram system");
        }
    }
    return x;
}

}  // namespace slicekit
