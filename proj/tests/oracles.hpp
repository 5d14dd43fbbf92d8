#pragma once

// Independent test oracles. Everything here is deliberately written against
// plain containers, not against the library types or algorithms it checks.

#include <string>
#include <vector>

#include "grlie/int.hpp"

namespace grlie::test_oracles {

/// Necklace/Witt count (1/d) * sum_{e|d} mu(e) * k^(d/e) for an unweighted
/// k-letter alphabet.
long long necklace_count(int k, int d);

/// All words over {0..k-1} with the given letter weights and weighted degree,
/// filtered by the textbook Lyndon test (word < every proper suffix) on plain
/// strings; returned sorted lexicographically.
std::vector<std::string> brute_force_lyndon(const std::vector<int>& weights, int degree);

/// Determinant by cofactor expansion (small matrices only).
Int cofactor_det(const std::vector<std::vector<Int>>& m);

/// Rank over the rationals by fraction-free (Bareiss-style) elimination.
int fraction_free_rank(std::vector<std::vector<Int>> m);

/// Exhaustive search for an integer combination of the generator rows with
/// all coefficients in [-bound, bound] equal to v.
bool brute_force_contains(const std::vector<std::vector<Int>>& rows, const std::vector<Int>& v,
                          int bound);

}  // namespace grlie::test_oracles
