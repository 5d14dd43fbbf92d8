#pragma once

#include <map>

#include "grlie/errors.hpp"
#include "grlie/int.hpp"
#include "grlie/word.hpp"

namespace grlie {

/// Homogeneous integer linear combination of Lyndon basis words of one
/// weighted degree. Zero is an empty mapping with an explicit degree tag.
class LieElement {
public:
    explicit LieElement(int degree) : degree_(degree) {}

    LieElement(int degree, const Word& w, Int c) : degree_(degree) { add(w, c); }

    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Word, Int>& coeffs() const { return coeffs_; }

    Int coeff(const Word& w) const {
        auto it = coeffs_.find(w);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add(const Word& w, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    LieElement& operator+=(const LieElement& o) {
        check_same_degree(o);
        for (const auto& [w, c] : o.coeffs_) add(w, c);
        return *this;
    }

    LieElement& operator-=(const LieElement& o) {
        check_same_degree(o);
        for (const auto& [w, c] : o.coeffs_) add(w, -c);
        return *this;
    }

    LieElement& operator*=(const Int& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [w, c] : coeffs_) c *= s;
        return *this;
    }

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Int& s, LieElement a) { return a *= s; }
    friend LieElement operator-(LieElement a) { return a *= Int(-1); }

    bool operator==(const LieElement& o) const {
        return degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

private:
    void check_same_degree(const LieElement& o) const {
        if (degree_ != o.degree_)
            throw InhomogeneousExpressionError("cannot combine Lie elements of degrees " +
                                               std::to_string(degree_) + " and " +
                                               std::to_string(o.degree_));
    }

    int degree_;
    std::map<Word, Int> coeffs_;  // keys: Lyndon words of weighted degree degree_
};

}  // namespace grlie
