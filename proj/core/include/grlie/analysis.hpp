#pragma once

#include <string>
#include <vector>

#include "grlie/families.hpp"
#include "grlie/int_matrix.hpp"
#include "grlie/presentation.hpp"

namespace grlie {

/// Graded components gr^1..gr^D of a presented algebra.
struct HilbertTable {
    PresentationMeta meta;
    std::vector<std::string> alphabet_order;
    std::vector<AbelianInvariants> rows;  // rows[d-1] = gr^d

    bool operator==(const HilbertTable&) const = default;
};

HilbertTable hilbert_table(const GradedPresentation& p, int max_degree, int threads = 0);

/// Ranks r_1..r_D of the free Lie algebra on the alphabet, from the
/// generating-function identity prod (1-t^d)^(-r_d) = 1/(1-f(t)) with
/// f(t) = sum_g t^weight(g): log-series coefficients are accumulated as exact
/// rationals and Moebius-inverted; integrality is asserted at both stages.
/// Used as an independent oracle against lyndon_words counts.
std::vector<Int> witt_ranks(const WeightedAlphabet& alphabet, int max_degree);

/// True iff bracketing e with every generator lands in the relation ideal.
/// Because the ideal is closed under bracketing, this is equivalent to e
/// being central in the presented algebra. max_degree bounds the cache depth
/// and must cover degree(e) + the largest generator weight.
bool is_central(const LieElement& e, const GradedPresentation& p, int max_degree);

/// Per-degree rank bookkeeping for the fibration sequence
///   1 -> gr_w(surface group) -> gr_w(P_n) -> gr_w(P_{n-1}) -> 1.
/// The defect is computed on free ranks; torsion is carried for information
/// only and no assertion is baked into the type.
struct ExactnessReport {
    int genus = 0;
    int strands = 0;
    int max_degree = 0;
    struct Row {
        int degree = 0;
        int total_rank = 0;
        int base_rank = 0;
        int fiber_rank = 0;
        int defect = 0;  // total - base - fiber
        std::vector<Int> total_torsion, base_torsion, fiber_torsion;
    };
    std::vector<Row> rows;

    bool all_defects_zero() const;
};

ExactnessReport exactness_check(int g, int n, int max_degree, int threads = 0);

/// Degree-by-degree comparison of two Hilbert tables; mismatches are flagged,
/// never thrown.
struct ComparisonReport {
    HilbertTable left, right;
    struct Row {
        int degree = 0;
        bool free_rank_equal = false;
        bool torsion_equal = false;
    };
    std::vector<Row> rows;

    bool all_free_ranks_equal() const;
    bool all_torsion_equal() const;
};

ComparisonReport compare_presentations(const GradedPresentation& p1, const GradedPresentation& p2,
                                       int max_degree, int threads = 0);

}  // namespace grlie
