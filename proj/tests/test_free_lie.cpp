#include <doctest.h>

#include <random>

#include "grlie/errors.hpp"
#include "grlie/free_lie.hpp"
#include "test_util.hpp"

using namespace grlie;
using test_util::make_word;

namespace {

const WeightedAlphabet kXY({"x", "y"}, {1, 1});

LieElement random_element(const FreeLieAlgebra& fla, int degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    LieElement e(degree);
    for (const Word& w : fla.basis(degree)) e.add(w, coeff(rng));
    return e;
}

}  // namespace

TEST_CASE("rho_expand: single letter and xy") {
    FreeLieAlgebra fla(kXY);
    TensorPoly px = fla.rho_expand(make_word(kXY, "x"));
    CHECK(px.coeffs().size() == 1);
    CHECK(px.coeffs().at(make_word(kXY, "x")) == 1);

    TensorPoly pxy = fla.rho_expand(make_word(kXY, "xy"));
    CHECK(pxy.coeffs().size() == 2);
    CHECK(pxy.coeffs().at(make_word(kXY, "xy")) == 1);
    CHECK(pxy.coeffs().at(make_word(kXY, "yx")) == -1);
}

TEST_CASE("rho_expand: xxy = xxy - 2 xyx + yxx") {
    FreeLieAlgebra fla(kXY);
    TensorPoly p = fla.rho_expand(make_word(kXY, "xxy"));
    CHECK(p.coeffs().size() == 3);
    CHECK(p.coeffs().at(make_word(kXY, "xxy")) == 1);
    CHECK(p.coeffs().at(make_word(kXY, "xyx")) == -2);
    CHECK(p.coeffs().at(make_word(kXY, "yxx")) == 1);
}

TEST_CASE("rho_expand rejects non-Lyndon input") {
    FreeLieAlgebra fla(kXY);
    CHECK_THROWS_AS(fla.rho_expand(make_word(kXY, "yx")), ParamError);
}

TEST_CASE("to_lyndon_coords: basic conversions") {
    FreeLieAlgebra fla(kXY);

    TensorPoly p(2);
    p.add(make_word(kXY, "xy"), 1);
    p.add(make_word(kXY, "yx"), -1);
    LieElement e = fla.to_lyndon_coords(p);
    CHECK(e == LieElement(2, make_word(kXY, "xy"), 1));

    TensorPoly sym(2);
    sym.add(make_word(kXY, "xy"), 1);
    sym.add(make_word(kXY, "yx"), 1);
    CHECK_THROWS_AS(fla.to_lyndon_coords(sym), NotLieElementError);

    TensorPoly q(3);
    q.add(make_word(kXY, "xyy"), -1);
    q.add(make_word(kXY, "yxy"), 2);
    q.add(make_word(kXY, "yyx"), -1);
    LieElement f = fla.to_lyndon_coords(q);
    CHECK(f == LieElement(3, make_word(kXY, "xyy"), -1));
}

TEST_CASE("to_lyndon_coords keeps the degree tag on zero") {
    FreeLieAlgebra fla(kXY);
    LieElement z = fla.to_lyndon_coords(TensorPoly(4));
    CHECK(z.is_zero());
    CHECK(z.degree() == 4);
}

TEST_CASE("bracket: generator cases") {
    FreeLieAlgebra fla(kXY);
    LieElement x = fla.generator(0);
    LieElement y = fla.generator(1);

    LieElement xx = fla.bracket(x, x);
    CHECK(xx.is_zero());
    CHECK(xx.degree() == 2);

    CHECK(fla.bracket(x, y) == LieElement(2, make_word(kXY, "xy"), 1));

    LieElement xy(2, make_word(kXY, "xy"), 1);
    CHECK(fla.bracket(y, xy) == LieElement(3, make_word(kXY, "xyy"), -1));
}

TEST_CASE("bracket rejects out-of-alphabet elements") {
    FreeLieAlgebra fla(kXY);
    const WeightedAlphabet wide({"x", "y", "z"}, {1, 1, 1});
    LieElement foreign(1, make_word(wide, "z"), 1);
    CHECK_THROWS_AS(fla.bracket(foreign, fla.generator(0)), AlphabetMismatchError);

    // same letters, different weights: degree bookkeeping must not match
    const WeightedAlphabet reweighted({"x", "y"}, {1, 2});
    FreeLieAlgebra fla2(reweighted);
    LieElement light(1, make_word(reweighted, "y"), 1);  // weight 2 under fla2
    CHECK_THROWS_AS(fla2.bracket(light, fla2.generator(0)), AlphabetMismatchError);
}

TEST_CASE("round trip over 2 and 3 letters up to degree 6") {
    for (int k = 2; k <= 3; ++k) {
        std::vector<std::string> names;
        for (int i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('x' + i)));
        FreeLieAlgebra fla(WeightedAlphabet::uniform(names));
        for (int d = 1; d <= 6; ++d)
            for (const Word& w : fla.basis(d)) {
                CAPTURE(to_string(w, fla.alphabet()));
                CHECK(fla.to_lyndon_coords(fla.rho_expand(w)) == LieElement(d, w, 1));
            }
    }
}

TEST_CASE("unitriangularity of the rho expansion") {
    for (int k = 2; k <= 3; ++k) {
        std::vector<std::string> names;
        for (int i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('x' + i)));
        FreeLieAlgebra fla(WeightedAlphabet::uniform(names));
        for (int d = 1; d <= 6; ++d)
            for (const Word& w : fla.basis(d)) {
                TensorPoly p = fla.rho_expand(w);
                // map iteration is lexicographic: front() is the smallest word
                CHECK(p.coeffs().begin()->first == w);
                CHECK(p.coeffs().begin()->second == 1);
            }
    }
}

TEST_CASE("antisymmetry on random elements") {
    std::mt19937_64 rng(20240811u);
    std::vector<WeightedAlphabet> alphabets = {kXY, WeightedAlphabet({"x", "y", "u"}, {1, 1, 2})};
    std::uniform_int_distribution<int> deg(1, 4);
    int samples = 0;
    for (const auto& alphabet : alphabets) {
        FreeLieAlgebra fla(alphabet);
        for (int s = 0; s < 60; ++s) {
            int d1 = deg(rng), d2 = deg(rng);
            if (d1 + d2 > 5) continue;
            LieElement e1 = random_element(fla, d1, rng);
            LieElement e2 = random_element(fla, d2, rng);
            CHECK(fla.bracket(e1, e2) == -fla.bracket(e2, e1));
            ++samples;
        }
    }
    CHECK(samples >= 100);
}

TEST_CASE("Jacobi identity on random triples") {
    std::mt19937_64 rng(20240812u);
    std::vector<WeightedAlphabet> alphabets = {kXY, WeightedAlphabet({"x", "y", "u"}, {1, 1, 2})};
    std::uniform_int_distribution<int> deg(1, 4);
    int samples = 0;
    for (const auto& alphabet : alphabets) {
        FreeLieAlgebra fla(alphabet);
        for (int s = 0; s < 110; ++s) {
            int d1 = deg(rng), d2 = deg(rng), d3 = deg(rng);
            if (d1 + d2 + d3 > 6) continue;
            LieElement e1 = random_element(fla, d1, rng);
            LieElement e2 = random_element(fla, d2, rng);
            LieElement e3 = random_element(fla, d3, rng);
            LieElement sum = fla.bracket(e1, fla.bracket(e2, e3));
            sum += fla.bracket(e2, fla.bracket(e3, e1));
            sum += fla.bracket(e3, fla.bracket(e1, e2));
            CHECK(sum.is_zero());
            ++samples;
        }
    }
    CHECK(samples >= 100);
}

TEST_CASE("coords round trip") {
    FreeLieAlgebra fla(kXY);
    LieElement e(3);
    e.add(make_word(kXY, "xxy"), 5);
    e.add(make_word(kXY, "xyy"), -7);
    auto v = fla.coords(e);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == 5);
    CHECK(v[1] == -7);
    CHECK(fla.from_coords(3, v) == e);
}
