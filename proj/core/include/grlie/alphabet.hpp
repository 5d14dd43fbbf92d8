#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grlie/errors.hpp"

namespace grlie {

/// Ordered generator symbols with positive integer weights. The declaration
/// order is the total order used for words and bases; it is fixed at
/// construction and recorded in all output metadata.
class WeightedAlphabet {
public:
    WeightedAlphabet(std::vector<std::string> names, std::vector<int> weights)
        : names_(std::move(names)), weights_(std::move(weights)) {
        if (names_.empty())
            throw ParamError("alphabet must contain at least one symbol");
        if (names_.size() != weights_.size())
            throw ParamError("alphabet names/weights length mismatch");
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (weights_[i] < 1)
                throw ParamError("symbol '" + names_[i] + "' has weight < 1");
            auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
            if (!fresh)
                throw ParamError("duplicate symbol name '" + names_[i] + "'");
        }
        min_weight_ = *std::min_element(weights_.begin(), weights_.end());
        max_weight_ = *std::max_element(weights_.begin(), weights_.end());
    }

    /// All symbols share weight `weight` (defaults to 1).
    static WeightedAlphabet uniform(std::vector<std::string> names, int weight = 1) {
        return WeightedAlphabet(std::move(names), std::vector<int>(names.size(), weight));
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    int min_weight() const { return min_weight_; }
    int max_weight() const { return max_weight_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<int>& weights() const { return weights_; }

    std::optional<int> index_of(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool operator==(const WeightedAlphabet& o) const {
        return names_ == o.names_ && weights_ == o.weights_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::map<std::string, int, std::less<>> index_;
    int min_weight_ = 1;
    int max_weight_ = 1;
};

}  // namespace grlie
