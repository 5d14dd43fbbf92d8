#include "grlie/word.hpp"

#include <algorithm>

#include "grlie/errors.hpp"

namespace grlie {

int weight_of(const Word& w, const WeightedAlphabet& alphabet) {
    int d = 0;
    for (auto l : w.letters) {
        if (l >= alphabet.size())
            throw AlphabetMismatchError("word letter out of alphabet range");
        d += alphabet.weight(l);
    }
    return d;
}

std::string to_string(const Word& w, const WeightedAlphabet& alphabet) {
    bool wide = false;
    for (int i = 0; i < alphabet.size(); ++i)
        if (alphabet.name(i).size() > 1) wide = true;
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i > 0) s += '.';
        s += alphabet.name(w.letter(i));
    }
    return s;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) throw ParamError("is_lyndon: empty word");
    const auto& a = w.letters;
    const std::size_t n = a.size();
    for (std::size_t s = 1; s < n; ++s) {
        // compare w with its suffix starting at s
        if (!std::lexicographical_compare(a.begin(), a.end(), a.begin() + s, a.end()))
            return false;
    }
    return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) throw ParamError("standard_factorization: word of length < 2");
    if (!is_lyndon(w)) throw ParamError("standard_factorization: word is not Lyndon");
    for (std::size_t s = 1; s < w.size(); ++s) {
        Word v(std::vector<std::uint8_t>(w.letters.begin() + s, w.letters.end()));
        if (is_lyndon(v)) {
            Word u(std::vector<std::uint8_t>(w.letters.begin(), w.letters.begin() + s));
            return {std::move(u), std::move(v)};
        }
    }
    // unreachable: the last letter is always Lyndon
    throw Error("standard_factorization: no Lyndon suffix found");
}

std::vector<Word> lyndon_words(const WeightedAlphabet& alphabet, int degree) {
    if (degree < 1) throw ParamError("lyndon_words: degree must be >= 1");
    const int k = alphabet.size();
    const int max_len = degree / alphabet.min_weight();
    std::vector<Word> out;

    auto weight = [&](const std::vector<std::uint8_t>& ls) {
        int d = 0;
        for (auto l : ls) d += alphabet.weight(l);
        return d;
    };

    // Duval generation of all Lyndon words of length <= max_len in
    // lexicographic order; keep those of the requested weighted degree.
    std::vector<std::uint8_t> w{0};
    while (true) {
        if (weight(w) == degree) out.emplace_back(w);
        std::size_t m = w.size();
        w.resize(static_cast<std::size_t>(max_len));
        for (std::size_t i = m; i < w.size(); ++i) w[i] = w[i % m];
        while (!w.empty() && w.back() == k - 1) w.pop_back();
        if (w.empty()) break;
        ++w.back();
    }
    return out;
}

}  // namespace grlie
