#pragma once

#include <utility>
#include <vector>

#include "grlie/errors.hpp"
#include "grlie/int.hpp"

namespace grlie {

/// Dense arbitrary-precision integer matrix, row-major.
class IntegerMatrix {
public:
    IntegerMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Int(0)) {
        if (rows < 0 || cols < 0) throw DimensionMismatchError("negative matrix dimension");
    }

    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        IntegerMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw DimensionMismatchError("ragged row list");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Int> row(int r) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
                data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
    }

    bool operator==(const IntegerMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    int rows_, cols_;
    std::vector<Int> data_;
};

/// Free rank and invariant factors (> 1, ascending divisibility) of a
/// finitely generated abelian group.
struct AbelianInvariants {
    int free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const AbelianInvariants&) const = default;
};

/// Row-style Hermite normal form of the row span: pivots positive, entries
/// above each pivot reduced into [0, pivot), zero rows dropped. The row span
/// over the integers is preserved exactly (no saturation). Returns the HNF
/// basis (rank rows) and the rank.
std::pair<IntegerMatrix, int> hnf(const IntegerMatrix& m);

/// Diagonal of the Smith normal form: invariant factors >= 1 in ascending
/// divisibility order, zeros excluded. Pivoting picks a minimal-absolute-value
/// nonzero entry to control coefficient growth.
std::vector<Int> snf_invariants(const IntegerMatrix& m);

/// Structure of Z^ambient_rank / (row span of generators):
/// free rank = ambient_rank - rank, torsion = invariant factors > 1.
AbelianInvariants cokernel_invariants(int ambient_rank, const IntegerMatrix& generators);

}  // namespace grlie
