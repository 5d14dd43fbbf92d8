#include "grlie/analysis.hpp"

#include <algorithm>

#include "grlie/errors.hpp"

namespace grlie {

HilbertTable hilbert_table(const GradedPresentation& p, int max_degree, int threads) {
    if (max_degree < 1) throw ParamError("hilbert_table: max_degree must be >= 1");
    IdealCache cache(p, threads);
    HilbertTable table;
    table.meta = p.meta();
    table.alphabet_order = p.alphabet().names();
    table.rows.reserve(static_cast<std::size_t>(max_degree));
    for (int d = 1; d <= max_degree; ++d) table.rows.push_back(cache.quotient_component(d));
    return table;
}

namespace {

std::vector<int> moebius_upto(int n) {
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 1);
    for (int d = 1; d <= n; ++d) {
        int m = d, value = 1;
        for (int q = 2; q * q <= m; ++q) {
            if (m % q != 0) continue;
            m /= q;
            if (m % q == 0) {
                value = 0;
                break;
            }
            value = -value;
        }
        if (value != 0 && m > 1) value = -value;
        mu[static_cast<std::size_t>(d)] = value;
    }
    return mu;
}

}  // namespace

std::vector<Int> witt_ranks(const WeightedAlphabet& alphabet, int max_degree) {
    if (max_degree < 1) throw ParamError("witt_ranks: max_degree must be >= 1");
    const int D = max_degree;

    // f(t) = sum over generators of t^weight
    std::vector<Int> f(static_cast<std::size_t>(D) + 1, Int(0));
    for (int i = 0; i < alphabet.size(); ++i) {
        int w = alphabet.weight(i);
        if (w <= D) f[static_cast<std::size_t>(w)] += 1;
    }

    // log(1/(1-f)) = sum_m f^m / m, truncated at t^D, exact rationals
    std::vector<Rat> log_coeffs(static_cast<std::size_t>(D) + 1, Rat(0));
    std::vector<Int> power(f);
    for (int m = 1; m <= D; ++m) {
        if (m > 1) {
            std::vector<Int> next(static_cast<std::size_t>(D) + 1, Int(0));
            for (int i = 0; i <= D; ++i) {
                if (power[static_cast<std::size_t>(i)] == 0) continue;
                for (int j = 1; i + j <= D; ++j)
                    next[static_cast<std::size_t>(i + j)] +=
                        power[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
            }
            power = std::move(next);
        }
        for (int e = m; e <= D; ++e)
            log_coeffs[static_cast<std::size_t>(e)] += Rat(power[static_cast<std::size_t>(e)], m);
    }

    // m_e = e * [t^e] log must be integral; then d*r_d = sum_{e|d} mu(d/e) m_e
    std::vector<Int> m(static_cast<std::size_t>(D) + 1, Int(0));
    for (int e = 1; e <= D; ++e) {
        Rat v = log_coeffs[static_cast<std::size_t>(e)] * e;
        if (denominator(v) != 1)
            throw NonIntegralRankError("log-series coefficient " + std::to_string(e) +
                                       " is not integral");
        m[static_cast<std::size_t>(e)] = numerator(v);
    }
    const std::vector<int> mu = moebius_upto(D);
    std::vector<Int> ranks(static_cast<std::size_t>(D), Int(0));
    for (int d = 1; d <= D; ++d) {
        Int acc = 0;
        for (int e = 1; e <= d; ++e) {
            if (d % e != 0) continue;
            acc += Int(mu[static_cast<std::size_t>(d / e)]) * m[static_cast<std::size_t>(e)];
        }
        if (acc % d != 0)
            throw NonIntegralRankError("Witt rank at degree " + std::to_string(d) +
                                       " is not integral");
        ranks[static_cast<std::size_t>(d - 1)] = acc / d;
    }
    return ranks;
}

bool is_central(const LieElement& e, const GradedPresentation& p, int max_degree) {
    if (e.degree() + p.alphabet().max_weight() > max_degree)
        throw ParamError("is_central: max_degree must cover degree(e) + max generator weight");
    IdealCache cache(p);
    cache.ensure(max_degree);
    const FreeLieAlgebra& fla = cache.algebra();
    for (int g = 0; g < p.alphabet().size(); ++g) {
        LieElement br = fla.bracket(e, fla.generator(g));
        if (br.is_zero()) continue;
        if (!cache.element_in_ideal(br)) return false;
    }
    return true;
}

bool ExactnessReport::all_defects_zero() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.defect == 0; });
}

ExactnessReport exactness_check(int g, int n, int max_degree, int threads) {
    if (g < 1) throw ParamError("exactness_check: g must be >= 1");
    if (n < 2) throw ParamError("exactness_check: n must be >= 2");
    if (max_degree < 1) throw ParamError("exactness_check: max_degree must be >= 1");

    HilbertTable total = hilbert_table(bezrukavnikov(g, n), max_degree, threads);
    HilbertTable base = hilbert_table(bezrukavnikov(g, n - 1), max_degree, threads);
    HilbertTable fiber = hilbert_table(surface_group(g, n - 1), max_degree, threads);

    ExactnessReport report;
    report.genus = g;
    report.strands = n;
    report.max_degree = max_degree;
    for (int d = 1; d <= max_degree; ++d) {
        ExactnessReport::Row row;
        row.degree = d;
        row.total_rank = total.rows[static_cast<std::size_t>(d - 1)].free_rank;
        row.base_rank = base.rows[static_cast<std::size_t>(d - 1)].free_rank;
        row.fiber_rank = fiber.rows[static_cast<std::size_t>(d - 1)].free_rank;
        row.defect = row.total_rank - row.base_rank - row.fiber_rank;
        row.total_torsion = total.rows[static_cast<std::size_t>(d - 1)].torsion;
        row.base_torsion = base.rows[static_cast<std::size_t>(d - 1)].torsion;
        row.fiber_torsion = fiber.rows[static_cast<std::size_t>(d - 1)].torsion;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool ComparisonReport::all_free_ranks_equal() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.free_rank_equal; });
}

bool ComparisonReport::all_torsion_equal() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.torsion_equal; });
}

ComparisonReport compare_presentations(const GradedPresentation& p1, const GradedPresentation& p2,
                                       int max_degree, int threads) {
    if (max_degree < 1) throw ParamError("compare_presentations: max_degree must be >= 1");
    ComparisonReport report;
    report.left = hilbert_table(p1, max_degree, threads);
    report.right = hilbert_table(p2, max_degree, threads);
    for (int d = 1; d <= max_degree; ++d) {
        const auto& l = report.left.rows[static_cast<std::size_t>(d - 1)];
        const auto& r = report.right.rows[static_cast<std::size_t>(d - 1)];
        report.rows.push_back({d, l.free_rank == r.free_rank, l.torsion == r.torsion});
    }
    return report;
}

}  // namespace grlie
