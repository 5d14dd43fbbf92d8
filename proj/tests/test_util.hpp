#pragma once

#include <string_view>

#include "grlie/word.hpp"

namespace grlie::test_util {

/// Word from a string of single-character symbol names, e.g. "xxy".
inline Word make_word(const WeightedAlphabet& alphabet, std::string_view text) {
    std::vector<std::uint8_t> letters;
    for (char c : text) {
        auto idx = alphabet.index_of(std::string_view(&c, 1));
        if (!idx) throw std::runtime_error("make_word: unknown symbol");
        letters.push_back(static_cast<std::uint8_t>(*idx));
    }
    return Word(std::move(letters));
}

}  // namespace grlie::test_util
