#include "grlie/free_lie.hpp"

#include <mutex>

#include "grlie/errors.hpp"

namespace grlie {

LieElement FreeLieAlgebra::generator(int i) const {
    if (i < 0 || i >= alphabet_.size())
        throw AlphabetMismatchError("generator index out of range");
    return LieElement(alphabet_.weight(i), Word::single(i), 1);
}

const std::vector<Word>& FreeLieAlgebra::basis(int degree) const {
    {
        std::shared_lock lock(mutex_);
        auto it = basis_cache_.find(degree);
        if (it != basis_cache_.end()) return it->second;
    }
    auto words = lyndon_words(alphabet_, degree);
    std::map<Word, int> index;
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], static_cast<int>(i));
    std::unique_lock lock(mutex_);
    index_cache_.emplace(degree, std::move(index));
    return basis_cache_.emplace(degree, std::move(words)).first->second;
}

int FreeLieAlgebra::basis_index(int degree, const Word& w) const {
    basis(degree);  // populate
    std::shared_lock lock(mutex_);
    const auto& index = index_cache_.at(degree);
    auto it = index.find(w);
    if (it == index.end())
        throw AlphabetMismatchError("word is not a Lyndon basis word of degree " +
                                    std::to_string(degree));
    return it->second;
}

TensorPoly FreeLieAlgebra::rho_expand(const Word& w) const {
    if (!is_lyndon(w)) throw ParamError("rho_expand: word is not Lyndon");
    {
        std::shared_lock lock(mutex_);
        auto it = rho_cache_.find(w);
        if (it != rho_cache_.end()) return it->second;
    }
    TensorPoly result(weight_of(w, alphabet_));
    if (w.size() == 1) {
        result.add(w, 1);
    } else {
        auto [u, v] = standard_factorization(w);
        TensorPoly pu = rho_expand(u);
        TensorPoly pv = rho_expand(v);
        result = pu * pv - pv * pu;
    }
    std::unique_lock lock(mutex_);
    return rho_cache_.emplace(w, std::move(result)).first->second;
}

LieElement FreeLieAlgebra::to_lyndon_coords(const TensorPoly& p) const {
    LieElement out(p.degree());
    TensorPoly residual = p;
    while (!residual.is_zero()) {
        const auto& [w, c] = *residual.coeffs().begin();
        if (!is_lyndon(w))
            throw NotLieElementError("leading word '" + to_string(w, alphabet_) +
                                     "' is not Lyndon; input is not a Lie polynomial");
        Int coeff = c;  // copy before mutating residual
        Word word = w;
        TensorPoly expansion = rho_expand(word);
        expansion *= coeff;
        residual -= expansion;
        out.add(word, coeff);
    }
    return out;
}

LieElement FreeLieAlgebra::basis_bracket(const Word& u, const Word& v) const {
    // callers ensure u < v
    {
        std::shared_lock lock(mutex_);
        auto it = bracket_cache_.find({u, v});
        if (it != bracket_cache_.end()) return it->second;
    }
    TensorPoly pu = rho_expand(u);
    TensorPoly pv = rho_expand(v);
    LieElement result = to_lyndon_coords(pu * pv - pv * pu);
    std::unique_lock lock(mutex_);
    return bracket_cache_.emplace(std::make_pair(u, v), std::move(result)).first->second;
}

LieElement FreeLieAlgebra::bracket(const LieElement& a, const LieElement& b) const {
    check_element(a);
    check_element(b);
    LieElement out(a.degree() + b.degree());
    for (const auto& [wa, ca] : a.coeffs()) {
        for (const auto& [wb, cb] : b.coeffs()) {
            if (wa == wb) continue;
            Int c = ca * cb;
            if (wa < wb) {
                LieElement t = basis_bracket(wa, wb);
                t *= c;
                out += t;
            } else {
                LieElement t = basis_bracket(wb, wa);
                t *= -c;
                out += t;
            }
        }
    }
    return out;
}

std::vector<Int> FreeLieAlgebra::coords(const LieElement& e) const {
    const auto& words = basis(e.degree());
    std::vector<Int> v(words.size(), Int(0));
    for (const auto& [w, c] : e.coeffs()) v[static_cast<std::size_t>(basis_index(e.degree(), w))] = c;
    return v;
}

LieElement FreeLieAlgebra::from_coords(int degree, std::span<const Int> v) const {
    const auto& words = basis(degree);
    if (v.size() != words.size())
        throw DimensionMismatchError("coordinate vector length does not match basis size");
    LieElement e(degree);
    for (std::size_t i = 0; i < words.size(); ++i) e.add(words[i], v[i]);
    return e;
}

void FreeLieAlgebra::check_element(const LieElement& e) const {
    for (const auto& [w, c] : e.coeffs()) {
        if (weight_of(w, alphabet_) != e.degree())
            throw AlphabetMismatchError("element word weight differs from element degree");
        if (!is_lyndon(w))
            throw AlphabetMismatchError("element key is not a Lyndon word");
    }
}

}  // namespace grlie
