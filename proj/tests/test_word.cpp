#include <doctest.h>

#include "grlie/errors.hpp"
#include "grlie/word.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace grlie;
using test_util::make_word;

namespace {

const WeightedAlphabet kXY({"x", "y"}, {1, 1});
const WeightedAlphabet kXYZ({"x", "y", "z"}, {1, 1, 1});
const WeightedAlphabet kAU({"a", "u"}, {1, 2});

std::vector<std::string> names_of(const WeightedAlphabet& alphabet,
                                  const std::vector<Word>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(to_string(w, alphabet));
    return out;
}

}  // namespace

TEST_CASE("lyndon_words: two letters, degree 3") {
    auto words = lyndon_words(kXY, 3);
    CHECK(names_of(kXY, words) == std::vector<std::string>{"xxy", "xyy"});
}

TEST_CASE("lyndon_words: degree 1 is the alphabet") {
    auto words = lyndon_words(kXY, 1);
    CHECK(names_of(kXY, words) == std::vector<std::string>{"x", "y"});
}

TEST_CASE("lyndon_words: weighted alphabet, degree 2") {
    // candidates of weight 2 are "u" and "aa"; "aa" is not Lyndon
    auto words = lyndon_words(kAU, 2);
    CHECK(names_of(kAU, words) == std::vector<std::string>{"u"});
}

TEST_CASE("lyndon_words rejects degree < 1") {
    CHECK_THROWS_AS(lyndon_words(kXY, 0), ParamError);
}

TEST_CASE("is_lyndon basics") {
    CHECK(is_lyndon(make_word(kXY, "xy")));
    CHECK_FALSE(is_lyndon(make_word(kXY, "xx")));
    CHECK(is_lyndon(make_word(kXY, "xyxyy")));
    CHECK_FALSE(is_lyndon(make_word(kXY, "yx")));
    CHECK_THROWS_AS(is_lyndon(Word{}), ParamError);
}

TEST_CASE("standard_factorization examples") {
    auto [u1, v1] = standard_factorization(make_word(kXY, "xy"));
    CHECK(to_string(u1, kXY) == "x");
    CHECK(to_string(v1, kXY) == "y");

    auto [u2, v2] = standard_factorization(make_word(kXY, "xxy"));
    CHECK(to_string(u2, kXY) == "x");
    CHECK(to_string(v2, kXY) == "xy");

    auto [u3, v3] = standard_factorization(make_word(kXY, "xxyxy"));
    CHECK(to_string(u3, kXY) == "xxy");
    CHECK(to_string(v3, kXY) == "xy");
}

TEST_CASE("standard_factorization rejects bad input") {
    CHECK_THROWS_AS(standard_factorization(make_word(kXY, "x")), ParamError);
    CHECK_THROWS_AS(standard_factorization(make_word(kXY, "yx")), ParamError);
}

TEST_CASE("lyndon counts match the necklace formula") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<std::string> names;
        for (int i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('x' + i)));
        WeightedAlphabet alphabet = WeightedAlphabet::uniform(names);
        for (int d = 1; d <= 8; ++d) {
            CAPTURE(k);
            CAPTURE(d);
            CHECK(static_cast<long long>(lyndon_words(alphabet, d).size()) ==
                  test_oracles::necklace_count(k, d));
        }
    }
}

TEST_CASE("lyndon enumeration agrees with brute force, weighted included") {
    const std::vector<std::vector<int>> weight_sets = {{1, 1}, {1, 1, 1}, {1, 2}, {1, 1, 2}, {2, 2}};
    for (const auto& weights : weight_sets) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < weights.size(); ++i)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        WeightedAlphabet alphabet(names, weights);
        for (int d = 1; d <= 7; ++d) {
            auto expected = test_oracles::brute_force_lyndon(weights, d);
            auto got = lyndon_words(alphabet, d);
            REQUIRE(got.size() == expected.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                std::string rendered;
                for (std::size_t j = 0; j < got[i].size(); ++j)
                    rendered += static_cast<char>('a' + got[i].letter(j));
                CHECK(rendered == expected[i]);
            }
        }
    }
}

TEST_CASE("words compare lexicographically by symbol index") {
    CHECK(make_word(kXYZ, "x") < make_word(kXYZ, "xy"));
    CHECK(make_word(kXYZ, "xy") < make_word(kXYZ, "xz"));
    CHECK(make_word(kXYZ, "xzz") < make_word(kXYZ, "y"));
}
