#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "hartogs/rational.hpp"

namespace hartogs {

/// Multiset of rationals: order-insensitive, multiplicity-sensitive.
class RationalMultiset {
public:
    RationalMultiset() = default;
    explicit RationalMultiset(std::vector<Rational> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
    }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    /// Elements in ascending order.
    const std::vector<Rational>& sorted() const { return elems_; }

    const Rational& min() const {
        if (elems_.empty())
            throw std::logic_error("RationalMultiset: min of empty multiset");
        return elems_.front();
    }

    Rational sum() const {
        Rational acc(0);
        for (const auto& e : elems_)
            acc += e;
        return acc;
    }

    friend bool operator==(const RationalMultiset& a, const RationalMultiset& b) {
        return a.elems_ == b.elems_;
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) out += ", ";
            out += elems_[i].to_string();
        }
        return out + "}";
    }

private:
    std::vector<Rational> elems_;
};

inline bool multiset_equal(const RationalMultiset& a, const RationalMultiset& b) {
    return a == b;
}

} // namespace hartogs
