#pragma once

#include <optional>
#include <vector>

#include "slicekit/rational.hpp"

namespace slicekit {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;

// Incremental reduced row-echelon basis over the rationals.
class RowBasis {
public:
    // Reduces v against the basis; inserts the remainder if nonzero.
    // Returns true if the rank grew.
    bool insert(Vec v);
    // Does v lie in the current row span?
    bool contains(Vec v) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(Vec& v) const;
    std::vector<Vec> rows_;   // leading coefficient 1 at pivot column
    std::vector<int> pivots_;
};

int rank(const Mat& rows);

// One solution of A x = b (free variables set to 0), or nullopt if
// inconsistent. A is given row-major, size m x n.
std::optional<Vec> solve_consistent(Mat A, Vec b);

// Factors a symmetric PSD Gram matrix once and solves G x = b for many
// right-hand sides. The system must be consistent (it is, whenever b is a
// vector of inner products against the same generators).
class GramSolver {
public:
    explicit GramSolver(const Mat& G);
    Vec solve(const Vec& b) const;
    int rank() const { return static_cast<int>(pivot_cols_.size()); }

private:
    std::size_t n_;
    Mat reduced_;               // RREF of G
    Mat transform_;             // transform_ * G == reduced_
    std::vector<int> pivot_cols_;
};

}  // namespace slicekit
