#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grlie/alphabet.hpp"

namespace grlie {

/// A word over an alphabet, stored as symbol indices. Comparison is
/// lexicographic by symbol index (a proper prefix sorts before its
/// extensions).
struct Word {
    std::vector<std::uint8_t> letters;

    Word() = default;
    explicit Word(std::vector<std::uint8_t> ls) : letters(std::move(ls)) {}

    static Word single(int letter) { return Word({static_cast<std::uint8_t>(letter)}); }

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    int letter(std::size_t i) const { return letters[i]; }

    /// Concatenation.
    Word operator+(const Word& o) const {
        Word r(letters);
        r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
        return r;
    }

    auto operator<=>(const Word&) const = default;
};

/// Weighted degree: the sum of the letters' weights.
int weight_of(const Word& w, const WeightedAlphabet& alphabet);

/// Render with the alphabet's symbol names, letters separated by '.' when any
/// name is longer than one character.
std::string to_string(const Word& w, const WeightedAlphabet& alphabet);

/// True iff w is strictly smaller than each of its proper suffixes.
/// Rejects the empty word.
bool is_lyndon(const Word& w);

/// Right standard factorization of a Lyndon word of length >= 2:
/// w = uv with v the longest proper suffix of w that is Lyndon.
std::pair<Word, Word> standard_factorization(const Word& w);

/// All Lyndon words of the given weighted degree, in lexicographic order.
/// Duval generation bounded by degree / min-weight, filtered by weight.
std::vector<Word> lyndon_words(const WeightedAlphabet& alphabet, int degree);

}  // namespace grlie
