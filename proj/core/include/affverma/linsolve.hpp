#pragma once

#include "affverma/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace affverma::linsolve {

using SparseRow = std::map<int, Rational>;

/// Row echelon form over Z built incrementally with fraction-free updates.
///
/// Each inserted row is scaled to a primitive integer row, then reduced against the
/// stored pivots: row <- p_c * row - row_c * pivot_row, followed by removal of the
/// content gcd. Pivot rows are keyed by their leading column.
class Echelon {
public:
    explicit Echelon(int ncols) : ncols_(ncols) {}

    /// Returns true when the row was independent of the stored ones.
    bool insert(const SparseRow& row);
    int rank() const noexcept { return static_cast<int>(pivots_.size()); }
    int ncols() const noexcept { return ncols_; }

    /// Basis of {x : A x = 0}; one vector per free column, that column set to 1.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    using IntRow = std::vector<std::pair<int, Integer>>;
    int ncols_;
    std::map<int, IntRow> pivots_;
};

int rank(const std::vector<std::vector<Rational>>& dense_rows, int ncols);

std::vector<std::vector<Rational>> nullspace(const std::vector<SparseRow>& rows, int ncols);

}  // namespace affverma::linsolve
