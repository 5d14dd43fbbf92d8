#pragma once

#include <map>

#include "grlie/int.hpp"
#include "grlie/word.hpp"

namespace grlie {

/// Homogeneous integer noncommutative polynomial: a finite word -> coefficient
/// mapping with all words of one weighted degree. The associative envelope in
/// which brackets are expanded. Zero keeps an explicit degree tag.
class TensorPoly {
public:
    explicit TensorPoly(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::map<Word, Int>& coeffs() const { return coeffs_; }

    void add(const Word& w, const Int& c) {
        if (c == 0) return;
        auto [it, fresh] = coeffs_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    TensorPoly& operator+=(const TensorPoly& o) {
        for (const auto& [w, c] : o.coeffs_) add(w, c);
        return *this;
    }

    TensorPoly& operator-=(const TensorPoly& o) {
        for (const auto& [w, c] : o.coeffs_) add(w, -c);
        return *this;
    }

    TensorPoly& operator*=(const Int& s) {
        if (s == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& [w, c] : coeffs_) c *= s;
        return *this;
    }

    /// Concatenation product; degrees add.
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
        TensorPoly r(a.degree_ + b.degree_);
        for (const auto& [wa, ca] : a.coeffs_)
            for (const auto& [wb, cb] : b.coeffs_) r.add(wa + wb, ca * cb);
        return r;
    }

    friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) {
        TensorPoly r = a;
        r -= b;
        return r;
    }

    bool operator==(const TensorPoly& o) const {
        return degree_ == o.degree_ && coeffs_ == o.coeffs_;
    }

private:
    int degree_;
    std::map<Word, Int> coeffs_;  // no zero coefficients stored
};

}  // namespace grlie
