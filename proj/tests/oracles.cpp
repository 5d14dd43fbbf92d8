#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace grlie::test_oracles {

namespace {

int moebius(int n) {
    int value = 1;
    for (int q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        n /= q;
        if (n % q == 0) return 0;
        value = -value;
    }
    if (n > 1) value = -value;
    return value;
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

long long necklace_count(int k, int d) {
    long long acc = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        acc += moebius(e) * ipow(k, d / e);
    }
    return acc / d;
}

std::vector<std::string> brute_force_lyndon(const std::vector<int>& weights, int degree) {
    const int k = static_cast<int>(weights.size());
    std::vector<std::string> out;
    std::string word;

    auto is_lyndon_string = [](const std::string& w) {
        for (std::size_t s = 1; s < w.size(); ++s)
            if (w.compare(w.substr(s)) >= 0) return false;
        return true;
    };

    // depth-first enumeration of all words of exactly the requested weight
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (is_lyndon_string(word)) out.push_back(word);
            return;
        }
        for (int c = 0; c < k; ++c) {
            if (weights[static_cast<std::size_t>(c)] > remaining) continue;
            word.push_back(static_cast<char>('a' + c));
            self(self, remaining - weights[static_cast<std::size_t>(c)]);
            word.pop_back();
        }
    };
    rec(rec, degree);
    std::sort(out.begin(), out.end());
    return out;
}

Int cofactor_det(const std::vector<std::vector<Int>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    if (n == 1) return m[0][0];
    Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Int>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> row;
            row.reserve(n - 1);
            for (std::size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(m[i][jj]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

int fraction_free_rank(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

bool brute_force_contains(const std::vector<std::vector<Int>>& rows, const std::vector<Int>& v,
                          int bound) {
    const std::size_t k = rows.size();
    if (k == 0) return std::all_of(v.begin(), v.end(), [](const Int& e) { return e == 0; });
    std::vector<int> c(k, -bound);
    while (true) {
        std::vector<Int> acc(v.size(), Int(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < v.size(); ++j) acc[j] += Int(c[i]) * rows[i][j];
        if (acc == v) return true;
        std::size_t pos = 0;
        while (pos < k && c[pos] == bound) {
            c[pos] = -bound;
            ++pos;
        }
        if (pos == k) return false;
        ++c[pos];
    }
}

}  // namespace grlie::test_oracles
