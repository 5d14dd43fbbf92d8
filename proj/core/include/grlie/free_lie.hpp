#pragma once

#include <map>
#include <shared_mutex>
#include <span>
#include <utility>
#include <vector>

#include "grlie/alphabet.hpp"
#include "grlie/lie_element.hpp"
#include "grlie/tensor_poly.hpp"
#include "grlie/word.hpp"

namespace grlie {

/// The free Lie algebra over the integers on a weighted alphabet, with the
/// Lyndon-word basis. Bracket computation goes through the associative
/// envelope: rho-expand both sides, multiply, convert back to Lyndon
/// coordinates by unitriangular elimination.
///
/// All operations are pure; the basis / rho / structure-constant memos are the
/// only mutable state and are guarded for concurrent use.
class FreeLieAlgebra {
public:
    explicit FreeLieAlgebra(WeightedAlphabet alphabet) : alphabet_(std::move(alphabet)) {}

    FreeLieAlgebra(const FreeLieAlgebra&) = delete;
    FreeLieAlgebra& operator=(const FreeLieAlgebra&) = delete;

    const WeightedAlphabet& alphabet() const { return alphabet_; }

    /// The generator with index i as a Lie element of its own weight.
    LieElement generator(int i) const;

    /// Lyndon words of the given weighted degree, lexicographically ordered.
    /// Cached per degree.
    const std::vector<Word>& basis(int degree) const;

    /// Position of a Lyndon word within basis(degree); throws if absent.
    int basis_index(int degree, const Word& w) const;

    /// Standard bracketing of a Lyndon word expanded in the tensor algebra:
    /// rho(letter) = letter, rho(uv) = rho(u)rho(v) - rho(v)rho(u) for the
    /// standard factorization (u, v). The word itself carries coefficient +1
    /// and is the lexicographically smallest word of the expansion.
    TensorPoly rho_expand(const Word& w) const;

    /// Lyndon coordinates of a Lie polynomial given in the tensor algebra.
    /// Repeatedly strips the smallest word (which must be Lyndon) by
    /// subtracting its rho-expansion; throws NotLieElementError if the input
    /// is not a Lie polynomial.
    LieElement to_lyndon_coords(const TensorPoly& p) const;

    /// Lie bracket; bilinear over memoized basis structure constants.
    LieElement bracket(const LieElement& a, const LieElement& b) const;

    /// Coordinate vector of e with respect to basis(e.degree()).
    std::vector<Int> coords(const LieElement& e) const;

    /// Inverse of coords(); v must have length |basis(degree)|.
    LieElement from_coords(int degree, std::span<const Int> v) const;

    /// Verifies letters are in range, all words Lyndon of the stated degree.
    void check_element(const LieElement& e) const;

private:
    /// Structure constants: bracket of two basis words, memoized per ordered
    /// pair (u < v). [u, u] = 0 and [v, u] = -[u, v] are handled by callers.
    LieElement basis_bracket(const Word& u, const Word& v) const;

    WeightedAlphabet alphabet_;

    mutable std::shared_mutex mutex_;
    mutable std::map<int, std::vector<Word>> basis_cache_;
    mutable std::map<int, std::map<Word, int>> index_cache_;
    mutable std::map<Word, TensorPoly> rho_cache_;
    mutable std::map<std::pair<Word, Word>, LieElement> bracket_cache_;
};

}  // namespace grlie
