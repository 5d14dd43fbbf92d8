#include "grlie/families.hpp"

#include <utility>

#include "grlie/errors.hpp"
#include "grlie/free_lie.hpp"

namespace grlie {

namespace {

std::string bracketed(const std::string& base, int i) {
    return base + "[" + std::to_string(i) + "]";
}

std::string bracketed(const std::string& base, int i, int j) {
    return base + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

}  // namespace

GradedPresentation free_lie(std::vector<std::string> names, std::vector<int> weights) {
    WeightedAlphabet alphabet(std::move(names), std::move(weights));
    PresentationMeta meta{"free", 0, 0, 0};
    return GradedPresentation(std::move(alphabet), {}, std::move(meta));
}

GradedPresentation drinfeld_kohno(int n) {
    if (n < 2) throw ParamError("drinfeld_kohno: n must be >= 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) names.push_back(bracketed("A", i, j));
    WeightedAlphabet alphabet = WeightedAlphabet::uniform(names);
    FreeLieAlgebra fla(alphabet);
    auto gen = [&](int i, int j) {
        return fla.generator(*alphabet.index_of(bracketed("A", i, j)));
    };

    std::vector<LieElement> relations;
    // disjoint index pairs commute
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int s = i; s <= n; ++s)
                for (int t = s + 1; t <= n; ++t) {
                    if (std::make_pair(s, t) <= std::make_pair(i, j)) continue;
                    if (s == i || s == j || t == i || t == j) continue;
                    relations.push_back(fla.bracket(gen(i, j), gen(s, t)));
                }
    // 4T relations on each triple i < j < k
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                relations.push_back(fla.bracket(gen(i, j), gen(i, k) + gen(j, k)));
                relations.push_back(fla.bracket(gen(i, k), gen(i, j) + gen(j, k)));
            }

    PresentationMeta meta{"drinfeld_kohno", 0, n, 0};
    return GradedPresentation(std::move(alphabet), std::move(relations), std::move(meta));
}

GradedPresentation ihara_sphere(int n) {
    if (n < 2) throw ParamError("ihara_sphere: n must be >= 2");
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) names.push_back(bracketed("B", i, j));
    WeightedAlphabet alphabet = WeightedAlphabet::uniform(names);
    FreeLieAlgebra fla(alphabet);
    auto gen = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        return fla.generator(*alphabet.index_of(bracketed("B", i, j)));
    };

    std::vector<LieElement> relations;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int s = i; s <= n; ++s)
                for (int t = s + 1; t <= n; ++t) {
                    if (std::make_pair(s, t) <= std::make_pair(i, j)) continue;
                    if (s == i || s == j || t == i || t == j) continue;
                    relations.push_back(fla.bracket(gen(i, j), gen(s, t)));
                }
    // star relations: the degree-1 sum over each strand vanishes
    for (int i = 1; i <= n; ++i) {
        LieElement star(1);
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            star += gen(i, j);
        }
        relations.push_back(std::move(star));
    }

    PresentationMeta meta{"ihara_sphere", 0, n, 0};
    return GradedPresentation(std::move(alphabet), std::move(relations), std::move(meta));
}

GradedPresentation kv_sphere(int n) {
    if (n < 3) throw ParamError("kv_sphere: n must be >= 3 (generators range over 1..n-1)");
    const int m = n - 1;
    std::vector<std::string> names;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) names.push_back(bracketed("A", i, j));
    WeightedAlphabet alphabet = WeightedAlphabet::uniform(names);
    FreeLieAlgebra fla(alphabet);
    auto gen = [&](int i, int j) {
        return fla.generator(*alphabet.index_of(bracketed("A", i, j)));
    };

    std::vector<LieElement> relations;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            for (int s = i; s <= m; ++s)
                for (int t = s + 1; t <= m; ++t) {
                    if (std::make_pair(s, t) <= std::make_pair(i, j)) continue;
                    if (s == i || s == j || t == i || t == j) continue;
                    relations.push_back(fla.bracket(gen(i, j), gen(s, t)));
                }
    LieElement torsion(1);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) torsion += gen(i, j);
    torsion *= Int(2);
    relations.push_back(std::move(torsion));

    PresentationMeta meta{"kv_sphere", 0, n, 0};
    return GradedPresentation(std::move(alphabet), std::move(relations), std::move(meta));
}

GradedPresentation bezrukavnikov(int g, int n, int rep) {
    if (g < 1)
        throw ParamError(
            "bezrukavnikov: g must be >= 1 (the genus-0 sphere case is ihara_sphere)");
    if (n < 1) throw ParamError("bezrukavnikov: n must be >= 1");
    if (rep < 1 || rep > g) throw ParamError("bezrukavnikov: representative layer out of range");

    // alphabet sorted by (strand, layer, a before b)
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= g; ++l) {
            names.push_back(bracketed("a", l, i));
            names.push_back(bracketed("b", l, i));
        }
    WeightedAlphabet alphabet = WeightedAlphabet::uniform(names);
    FreeLieAlgebra fla(alphabet);
    auto gen_a = [&](int l, int i) { return fla.generator(*alphabet.index_of(bracketed("a", l, i))); };
    auto gen_b = [&](int l, int i) { return fla.generator(*alphabet.index_of(bracketed("b", l, i))); };
    // the derived element s_{i,j}, expanded via the fixed representative layer
    auto s_elem = [&](int i, int j) { return fla.bracket(gen_a(rep, i), gen_b(rep, j)); };

    std::vector<LieElement> relations;
    // [a_{l,i}, b_{k,j}] = 0 for i != j and l != k
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int l = 1; l <= g; ++l)
                for (int k = 1; k <= g; ++k) {
                    if (l == k) continue;
                    relations.push_back(fla.bracket(gen_a(l, i), gen_b(k, j)));
                }
        }
    // [a_{l,i}, a_{k,j}] = 0 and [b_{l,i}, b_{k,j}] = 0 for i != j
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int l = 1; l <= g; ++l)
                for (int k = 1; k <= g; ++k) {
                    relations.push_back(fla.bracket(gen_a(l, i), gen_a(k, j)));
                    relations.push_back(fla.bracket(gen_b(l, i), gen_b(k, j)));
                }
    // all representatives of s_{i,j} agree: [a_{l,i}, b_{l,j}] = s_{i,j} = [a_{k,j}, b_{k,i}]
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            LieElement s = s_elem(i, j);
            for (int l = 1; l <= g; ++l) {
                if (l == rep) continue;  // identical to the representative
                relations.push_back(fla.bracket(gen_a(l, i), gen_b(l, j)) - s);
            }
            for (int k = 1; k <= g; ++k)
                relations.push_back(fla.bracket(gen_a(k, j), gen_b(k, i)) - s);
        }
    // surface relation per strand: sum_l [a_{l,i}, b_{l,i}] + sum_{j != i} s_{i,j} = 0
    for (int i = 1; i <= n; ++i) {
        LieElement rel(2);
        for (int l = 1; l <= g; ++l) rel += fla.bracket(gen_a(l, i), gen_b(l, i));
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            rel += s_elem(i, j);
        }
        relations.push_back(std::move(rel));
    }
    // s_{j,k} is central on every other strand
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
            if (j == k) continue;
            LieElement s = s_elem(j, k);
            for (int i = 1; i <= n; ++i) {
                if (i == j || i == k) continue;
                for (int l = 1; l <= g; ++l) {
                    relations.push_back(fla.bracket(gen_a(l, i), s));
                    relations.push_back(fla.bracket(gen_b(l, i), s));
                }
            }
        }

    PresentationMeta meta{"bezrukavnikov", g, n, 0};
    return GradedPresentation(std::move(alphabet), std::move(relations), std::move(meta));
}

GradedPresentation surface_group(int g, int k) {
    if (g < 1) throw ParamError("surface_group: g must be >= 1");
    if (k < 0) throw ParamError("surface_group: k must be >= 0");
    std::vector<std::string> names;
    std::vector<int> weights;
    for (int m = 1; m <= g; ++m) {
        names.push_back(bracketed("a", m));
        weights.push_back(1);
        names.push_back(bracketed("c", m));
        weights.push_back(1);
    }
    for (int i = 1; i <= k; ++i) {
        names.push_back(bracketed("u", i));
        weights.push_back(2);
    }
    WeightedAlphabet alphabet(std::move(names), std::move(weights));
    FreeLieAlgebra fla(alphabet);

    LieElement rel(2);
    for (int i = 1; i <= k; ++i)
        rel += fla.generator(*alphabet.index_of(bracketed("u", i)));
    for (int m = 1; m <= g; ++m)
        rel += fla.bracket(fla.generator(*alphabet.index_of(bracketed("a", m))),
                           fla.generator(*alphabet.index_of(bracketed("c", m))));

    PresentationMeta meta{"surface_group", g, 0, k};
    return GradedPresentation(std::move(alphabet), {std::move(rel)}, std::move(meta));
}

}  // namespace grlie
