#pragma once

#include <vector>

#include "grlie/int.hpp"
#include "grlie/int_matrix.hpp"

namespace grlie {

/// A subgroup of Z^N maintained in row-style Hermite normal form: rows ordered
/// by pivot column, pivots positive, entries above each pivot reduced into
/// [0, pivot). The form is canonical, so equal lattices have equal bases.
/// Mutation is single-writer; reads are safe between mutations.
class IntegerLattice {
public:
    explicit IntegerLattice(int ambient_rank) : ambient_(ambient_rank) {
        if (ambient_rank < 0) throw DimensionMismatchError("negative ambient rank");
    }

    int ambient_rank() const { return ambient_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Int>>& basis() const { return rows_; }
    const std::vector<int>& pivot_columns() const { return pivots_; }

    /// Extends the span by v; returns true iff the lattice grew or its basis
    /// changed (false exactly when v was already a member).
    bool insert(std::vector<Int> v);

    /// True iff v reduces to zero against the HNF basis over the integers.
    bool contains(std::vector<Int> v) const;

    /// Basis rows as a rank x ambient matrix.
    IntegerMatrix basis_matrix() const;

    bool operator==(const IntegerLattice& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    void check_length(const std::vector<Int>& v) const;
    /// Re-establish above-pivot reduction after pivot updates.
    void renormalize();

    int ambient_;
    std::vector<std::vector<Int>> rows_;  // sorted by pivot column
    std::vector<int> pivots_;             // pivot column per row
};

}  // namespace grlie
