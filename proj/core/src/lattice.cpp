#include "grlie/lattice.hpp"

#include <algorithm>

namespace grlie {

void IntegerLattice::check_length(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != ambient_)
        throw DimensionMismatchError("vector length does not match ambient rank");
}

bool IntegerLattice::insert(std::vector<Int> v) {
    check_length(v);
    bool pivots_changed = false;
    bool grew = false;

    // repeatedly act at v's leading column; each step either consumes v or
    // moves its lead strictly right, so triangularity is preserved
    int c = 0;
    while (true) {
        while (c < ambient_ && v[static_cast<std::size_t>(c)] == 0) ++c;
        if (c == ambient_) break;  // v reduced to zero
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c);
        if (pos == pivots_.end() || *pos != c) {
            if (v[static_cast<std::size_t>(c)] < 0)
                for (auto& e : v) e = -e;
            std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
            pivots_.insert(pos, c);
            rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
            grew = true;
            break;
        }
        const std::size_t k = static_cast<std::size_t>(pos - pivots_.begin());
        const Int& p = rows_[k][static_cast<std::size_t>(c)];
        const Int& vc = v[static_cast<std::size_t>(c)];
        if (vc % p == 0) {
            Int q = vc / p;
            for (int j = c; j < ambient_; ++j)
                v[static_cast<std::size_t>(j)] -= q * rows_[k][static_cast<std::size_t>(j)];
        } else {
            auto [g, x, y] = ext_gcd(p, vc);
            std::vector<Int> merged(static_cast<std::size_t>(ambient_), Int(0));
            for (int j = c; j < ambient_; ++j)
                merged[static_cast<std::size_t>(j)] =
                    x * rows_[k][static_cast<std::size_t>(j)] + y * v[static_cast<std::size_t>(j)];
            Int pf = p / g, vf = vc / g;
            for (int j = c; j < ambient_; ++j) {
                Int t = pf * v[static_cast<std::size_t>(j)] -
                        vf * rows_[k][static_cast<std::size_t>(j)];
                v[static_cast<std::size_t>(j)] = std::move(t);
            }
            rows_[k] = std::move(merged);
            pivots_changed = true;
        }
    }

    if (grew || pivots_changed) renormalize();
    return grew || pivots_changed;
}

void IntegerLattice::renormalize() {
    // reduce entries above every pivot into [0, pivot)
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const int c = pivots_[k];
        const Int& p = rows_[k][static_cast<std::size_t>(c)];
        for (std::size_t r = 0; r < k; ++r) {
            Int q = fdiv(rows_[r][static_cast<std::size_t>(c)], p);
            if (q == 0) continue;
            for (int j = c; j < ambient_; ++j)
                rows_[r][static_cast<std::size_t>(j)] -= q * rows_[k][static_cast<std::size_t>(j)];
        }
    }
}

bool IntegerLattice::contains(std::vector<Int> v) const {
    check_length(v);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const int c = pivots_[k];
        Int& vc = v[static_cast<std::size_t>(c)];
        if (vc == 0) continue;
        const Int& p = rows_[k][static_cast<std::size_t>(c)];
        if (vc % p != 0) return false;
        Int q = vc / p;
        for (int j = c; j < ambient_; ++j)
            v[static_cast<std::size_t>(j)] -= q * rows_[k][static_cast<std::size_t>(j)];
    }
    return std::all_of(v.begin(), v.end(), [](const Int& e) { return e == 0; });
}

IntegerMatrix IntegerLattice::basis_matrix() const {
    IntegerMatrix m(rank(), ambient_);
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < ambient_; ++j)
            m.at(i, j) = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

}  // namespace grlie
