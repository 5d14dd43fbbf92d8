#include "grlie/int_matrix.hpp"

#include <algorithm>
#include <utility>

namespace grlie {

namespace {

void sub_scaled(std::vector<Int>& a, const std::vector<Int>& b, const Int& q, int from = 0) {
    if (q == 0) return;
    for (std::size_t j = static_cast<std::size_t>(from); j < a.size(); ++j) a[j] -= q * b[j];
}

}  // namespace

std::pair<IntegerMatrix, int> hnf(const IntegerMatrix& m) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    const int cols = m.cols();
    int fixed = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < cols && fixed < static_cast<int>(rows.size()); ++col) {
        int p = -1;
        for (int r = fixed; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][static_cast<std::size_t>(col)] == 0) continue;
            if (p < 0) {
                p = r;
                continue;
            }
            // combine rows p and r so that row p holds gcd and row r gets 0
            Int a = rows[p][static_cast<std::size_t>(col)];
            Int b = rows[r][static_cast<std::size_t>(col)];
            auto [g, x, y] = ext_gcd(a, b);
            std::vector<Int> comb(static_cast<std::size_t>(cols));
            for (int j = 0; j < cols; ++j)
                comb[static_cast<std::size_t>(j)] =
                    x * rows[p][static_cast<std::size_t>(j)] + y * rows[r][static_cast<std::size_t>(j)];
            Int af = a / g, bf = b / g;
            for (int j = 0; j < cols; ++j) {
                Int t = af * rows[r][static_cast<std::size_t>(j)] -
                        bf * rows[p][static_cast<std::size_t>(j)];
                rows[r][static_cast<std::size_t>(j)] = std::move(t);
            }
            rows[p] = std::move(comb);
        }
        if (p < 0) continue;
        std::swap(rows[static_cast<std::size_t>(fixed)], rows[static_cast<std::size_t>(p)]);
        auto& prow = rows[static_cast<std::size_t>(fixed)];
        if (prow[static_cast<std::size_t>(col)] < 0)
            for (auto& e : prow) e = -e;
        // reduce entries above the pivot into [0, pivot)
        for (int r = 0; r < fixed; ++r) {
            Int q = fdiv(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)],
                         prow[static_cast<std::size_t>(col)]);
            sub_scaled(rows[static_cast<std::size_t>(r)], prow, q);
        }
        pivot_col.push_back(col);
        ++fixed;
    }

    IntegerMatrix out(fixed, cols);
    for (int i = 0; i < fixed; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return {std::move(out), fixed};
}

std::vector<Int> snf_invariants(const IntegerMatrix& m) {
    const int R = m.rows(), C = m.cols();
    std::vector<std::vector<Int>> a;
    a.reserve(static_cast<std::size_t>(R));
    for (int i = 0; i < R; ++i) a.push_back(m.row(i));

    auto entry = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };

    std::vector<Int> diag;
    int t = 0;
    while (t < R && t < C) {
        // locate a minimal-absolute-value nonzero entry in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < R; ++i)
            for (int j = t; j < C; ++j) {
                const Int& e = entry(i, j);
                if (e == 0) continue;
                if (pi < 0 || abs(e) < abs(entry(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // trailing block is zero
        std::swap(a[static_cast<std::size_t>(t)], a[static_cast<std::size_t>(pi)]);
        if (pj != t)
            for (int i = 0; i < R; ++i) std::swap(entry(i, t), entry(i, pj));

        bool clean = true;
        for (int i = t + 1; i < R; ++i) {
            if (entry(i, t) == 0) continue;
            Int q = entry(i, t) / entry(t, t);
            sub_scaled(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(t)], q, t);
            if (entry(i, t) != 0) clean = false;  // smaller remainder; repick pivot
        }
        if (!clean) continue;
        for (int j = t + 1; j < C; ++j) {
            if (entry(t, j) == 0) continue;
            Int q = entry(t, j) / entry(t, t);
            if (q != 0)
                for (int i = t; i < R; ++i) entry(i, j) -= q * entry(i, t);
            if (entry(t, j) != 0) clean = false;
        }
        if (!clean) continue;

        // pivot must divide the whole trailing block for the invariant-factor
        // chain; if not, fold the offending row into row t and redo
        bool divides = true;
        for (int i = t + 1; i < R && divides; ++i)
            for (int j = t + 1; j < C && divides; ++j)
                if (entry(i, j) % entry(t, t) != 0) {
                    for (int k = t; k < C; ++k) entry(t, k) += entry(i, k);
                    divides = false;
                }
        if (!divides) continue;

        if (entry(t, t) < 0) entry(t, t) = -entry(t, t);
        diag.push_back(entry(t, t));
        ++t;
    }
    return diag;
}

AbelianInvariants cokernel_invariants(int ambient_rank, const IntegerMatrix& generators) {
    if (generators.cols() != ambient_rank && generators.rows() != 0)
        throw DimensionMismatchError("generator matrix column count does not match ambient rank");
    std::vector<Int> factors = snf_invariants(generators);
    AbelianInvariants out;
    out.free_rank = ambient_rank - static_cast<int>(factors.size());
    for (auto& f : factors)
        if (f > 1) out.torsion.push_back(std::move(f));
    return out;
}

}  // namespace grlie
